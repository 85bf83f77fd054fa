#include "relrigid/poset.hpp"

#include <sstream>

namespace relrigid {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

void write_nodes(std::ostringstream& os, const std::vector<std::string>& labels) {
  for (std::size_t i = 0; i < labels.size(); ++i) os << "  n" << i << " [label=" << quoted(labels[i]) << "];\n";
}

}  // namespace

std::vector<std::pair<std::size_t, std::size_t>> covering_pairs(const OrderMatrix& leq) {
  const std::size_t n = leq.size();
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !leq[a][b]) continue;
      bool covered = true;
      for (std::size_t c = 0; c < n && covered; ++c) {
        if (c != a && c != b && leq[a][c] && leq[c][b]) covered = false;
      }
      if (covered) out.emplace_back(a, b);
    }
  }
  return out;
}

std::string partial_order_violation(const OrderMatrix& leq) {
  const std::size_t n = leq.size();
  for (std::size_t a = 0; a < n; ++a) {
    if (!leq[a][a]) return "not reflexive at " + std::to_string(a);
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && leq[a][b] && leq[b][a]) {
        return "not antisymmetric at " + std::to_string(a) + ", " + std::to_string(b);
      }
      for (std::size_t c = 0; c < n; ++c) {
        if (leq[a][b] && leq[b][c] && !leq[a][c]) {
          return "not transitive at " + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c);
        }
      }
    }
  }
  return {};
}

std::string hasse_dot(const std::string& graph_name, const std::vector<std::string>& labels, const OrderMatrix& leq) {
  std::ostringstream os;
  os << "digraph " << quoted(graph_name) << " {\n";
  write_nodes(os, labels);
  for (const auto& [lower, upper] : covering_pairs(leq)) os << "  n" << upper << " -> n" << lower << ";\n";
  os << "}\n";
  return os.str();
}

std::string exchange_dot(const std::string& graph_name, const std::vector<std::string>& labels,
                         const std::vector<GraphEdge>& edges, const OrderMatrix& leq) {
  std::ostringstream os;
  os << "digraph " << quoted(graph_name) << " {\n";
  write_nodes(os, labels);
  for (const auto& e : edges) {
    const bool forward = leq[e.to][e.from];
    const std::size_t hi = forward ? e.from : e.to;
    const std::size_t lo = forward ? e.to : e.from;
    os << "  n" << hi << " -> n" << lo << " [label=" << quoted(e.replaced + " <-> " + e.introduced) << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace relrigid
