#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "relrigid/decompose.hpp"
#include "relrigid/homological.hpp"
#include "relrigid/poset.hpp"

namespace relrigid {

// A pair (M, P): M given by its indecomposable summands, P = (+) P(i) for i in `projectives`.
struct TauPair {
  std::vector<Representation> modules;
  std::vector<std::size_t> projectives;  // sorted vertices

  std::size_t size() const { return modules.size() + projectives.size(); }
};

// Decomposes m and sorts the summands canonically. Throws if m is not basic.
TauPair make_tau_pair(const BoundAlgebra& algebra, const Representation& m, std::vector<std::size_t> projectives);
TauPair normalized(TauPair pair);

Representation pair_module(const BoundAlgebra& algebra, const TauPair& pair);
bool same_pair(const TauPair& a, const TauPair& b);

// Hom(M, tau M) = 0, cross-checked against surjectivity of Hom(f, M) for the
// minimal presentation f; disagreement raises ConsistencyError.
bool is_tau_rigid(const Representation& m);
bool is_tau_rigid_pair(const BoundAlgebra& algebra, const TauPair& pair);
bool is_support_tau_tilting(const BoundAlgebra& algebra, const TauPair& pair);

// Index of the unique vertex i with m = P(i), if m is an indecomposable projective.
std::optional<std::size_t> projective_vertex(const Representation& m);

struct PairPosition {
  bool projective = false;  // selects projectives[index] instead of modules[index]
  std::size_t index = 0;
};

enum class Direction { Up, Down };

struct PairMutation {
  TauPair result;
  Direction direction = Direction::Down;
  PairPosition introduced;  // position of the new summand in `result`
};

PairMutation mutate_pair(const BoundAlgebra& algebra, const TauPair& pair, PairPosition position);

// Fac M_a is contained in Fac M_b.
bool fac_leq(const BoundAlgebra& algebra, const TauPair& a, const TauPair& b);

// (M, P) over the algebra to (Tr M_np (+) P*, M_pr*) over the opposite algebra.
TauPair dual_pair(const BoundAlgebra& algebra, const TauPair& pair);

std::string pair_label(const BoundAlgebra& algebra, const TauPair& pair, ModuleCatalog& catalog);

struct TauExchangeGraph {
  std::vector<TauPair> nodes;
  std::vector<std::string> labels;
  std::vector<GraphEdge> edges;
  OrderMatrix leq;
};

TauExchangeGraph exchange_graph(const BoundAlgebra& algebra, std::size_t budget = 10000);

}  // namespace relrigid
