#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace relrigid {

// leq[a][b] means a <= b.
using OrderMatrix = std::vector<std::vector<bool>>;

struct GraphEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  std::string replaced;
  std::string introduced;
};

// Pairs (lower, upper) with lower < upper and nothing strictly between.
std::vector<std::pair<std::size_t, std::size_t>> covering_pairs(const OrderMatrix& leq);

// Empty string when leq is reflexive, antisymmetric and transitive; otherwise the first violation.
std::string partial_order_violation(const OrderMatrix& leq);

// Covering relations drawn from upper to lower.
std::string hasse_dot(const std::string& graph_name, const std::vector<std::string>& labels, const OrderMatrix& leq);

// Exchange edges drawn from the larger endpoint to the smaller one.
std::string exchange_dot(const std::string& graph_name, const std::vector<std::string>& labels,
                         const std::vector<GraphEdge>& edges, const OrderMatrix& leq);

}  // namespace relrigid
