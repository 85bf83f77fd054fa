#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "relrigid/decompose.hpp"
#include "relrigid/homological.hpp"
#include "relrigid/poset.hpp"
#include "relrigid/tau_tilting.hpp"

namespace relrigid {

// A basic rigid module R without projective summands and with Ext^1(R, Lambda) = 0.
struct RigidSetting {
  BoundAlgebra algebra;
  std::vector<Representation> r;            // indecomposable summands R_1..R_n
  Representation r_sum;
  std::vector<ProjectiveCover> r_covers;    // Omega R_i >-> P_i ->> R_i
  std::vector<Representation> omega;       // Omega R_i
  std::vector<Representation> projectives;  // P(v) for every vertex
  std::vector<Representation> generators;   // R_1..R_n, then the P(v): add of these is R
  // gamma_basis[i][j]: maps Omega R_i -> Omega R_j whose classes are a basis
  // of the stable Hom space.
  std::vector<std::vector<std::vector<ModuleMap>>> gamma_basis;

  std::size_t rank() const { return r.size(); }
  std::size_t gamma_dim(std::size_t i, std::size_t j) const { return gamma_basis.at(i).at(j).size(); }
};

RigidSetting validate_setting(const BoundAlgebra& algebra, const Representation& r);

// Whether m is in add(R + Lambda).
bool in_R(const RigidSetting& s, const Representation& m);

// A conflation X >-> R1 ->> R2 with R1, R2 in add(R + Lambda), via the minimal
// left approximation.
std::optional<Conflation> in_H(const RigidSetting& s, const Representation& x);
// Search over all R1 with summand multiplicities bounded by dim Hom(X, -),
// using seeded random maps. Independent of the approximation code.
std::optional<Conflation> in_H_bruteforce(const RigidSetting& s, const Representation& x, unsigned tries = 3);

struct RelRigidObject {
  Representation module;
  std::vector<Representation> summands;
  std::optional<Conflation> witness;
};

RelRigidObject make_object(const RigidSetting& s, const Representation& x);

// Every map X -> R0 -> Sigma X with R0 in add R lifts along I_X ->> Sigma X.
bool is_R_rigid_def(const RigidSetting& s, const Representation& x);
// Surjectivity of stable Hom(f, X) for the syzygy map f: Omega R1 -> K of a witness.
bool is_R_rigid_syz(const RigidSetting& s, const Representation& x);
bool is_R_rigid_syz(const RigidSetting& s, const Conflation& witness);

// Ext^1(R0, X0) = 0, cross-checked against rigidity of X0 + R0.
bool rigid_sum_check(const RigidSetting& s, const Representation& x0, const Representation& r0);

struct FImage {
  std::vector<std::size_t> gamma_dims;       // dim stable Hom(Omega R_i, X0)
  std::vector<std::size_t> projective_part;  // i with R_i a summand of X
  std::vector<Representation> module_part;   // summands of X0
};

FImage F_image(const RigidSetting& s, const Representation& x);

// Stable Hom(Omega R, X) as a right module over the stable endomorphism ring
// of Omega R, acting by precomposition.
struct GammaModule {
  std::vector<std::size_t> dims;
  // action[i][j][k]: dims[i] x dims[j] matrix of x |-> x * gamma_k, gamma_k: Omega R_i -> Omega R_j.
  std::vector<std::vector<std::vector<Matrix>>> action;
};

GammaModule gamma_module(const RigidSetting& s, const Representation& x);
// Flattened homomorphisms, block i row-major.
std::vector<Matrix> gamma_hom_basis(const GammaModule& a, const GammaModule& b, const Field& field);
std::size_t gamma_hom_dim(const GammaModule& a, const GammaModule& b, const Field& field);
bool gamma_isomorphic(const GammaModule& a, const GammaModule& b, const Field& field);
// Whether a is a quotient of a sum of copies of n.
bool gamma_in_fac(const GammaModule& a, const GammaModule& n, const Field& field);

// dim of Hom(X, Y) modulo maps factoring through add(R + Lambda).
std::size_t hbar_hom_dim(const RigidSetting& s, const Representation& x, const Representation& y);

// Rigid, in H, and exactly n indecomposable summands.
bool is_maximal_R_rigid(const RigidSetting& s, const Representation& x);
// No non-projective Z in the library, Z in H and outside add X, keeps X + Z rigid.
bool is_maximal_by_definition(const RigidSetting& s, const Representation& x,
                              const std::vector<Representation>& library);

// X in M*[R]: the stable maps Omega R_i -> X are covered by maps through add M.
bool in_M_star_R(const RigidSetting& s, const Representation& x, const Representation& m);
// M >= N.
bool rel_leq(const RigidSetting& s, const Representation& n, const Representation& m);

struct RigidMutation {
  Representation complement;           // Y
  Conflation sequence;                 // Y >-> U1 ->> X (up) or X >-> U2 ->> Y (down)
  Direction direction = Direction::Up;
  std::vector<Representation> result;  // summands of the new object, projectives stripped
};

// Mutates the basic maximal object with the given summands at summands[index].
RigidMutation mutate_max_rigid(const RigidSetting& s, const std::vector<Representation>& summands, std::size_t index);
RigidMutation mutate_max_rigid(const RigidSetting& s, const Representation& m, const Representation& x);

struct RigidExchangeGraph {
  std::vector<std::vector<Representation>> nodes;  // non-projective summands, sorted
  std::vector<std::string> labels;
  std::vector<GraphEdge> edges;                    // from < to
  std::vector<Direction> directions;               // from `from` to `to`
  OrderMatrix leq;                                 // leq[a][b]: node a <= node b
  std::vector<Representation> sums;
};

RigidExchangeGraph enumerate_max_rigid(const RigidSetting& s, std::size_t budget = 10000);

std::string object_label(const std::vector<Representation>& summands, ModuleCatalog& catalog);

struct BijectionRow {
  std::string label;
  FImage image;
};

struct BijectionReport {
  std::vector<BijectionRow> rows;
  std::vector<std::string> violations;
  std::size_t transport_pairs = 0;

  bool ok() const { return violations.empty(); }
};

BijectionReport verify_bijection(const RigidSetting& s, const RigidExchangeGraph& graph);

struct TiltingReport {
  bool pd_le_1 = false;
  bool ideal_vanishes = false;
  bool is_tilting = false;

  bool consistent() const { return pd_le_1 == ideal_vanishes; }
};

TiltingReport tilting_check(const RigidSetting& s, const Representation& x);

// dim Ext^i(X, X) for i = 1..d.
std::vector<std::size_t> d_rigid_report(const RigidSetting& s, const Representation& x, std::size_t d);

}  // namespace relrigid
