#pragma once

#include <cstddef>
#include <vector>

#include "relrigid/covers.hpp"
#include "relrigid/linalg.hpp"
#include "relrigid/representation.hpp"

namespace relrigid {

// P1 --f--> P0 --p--> M -> 0, both steps minimal.
struct ProjectivePresentation {
  ProjectiveCover cover0;  // P0 ->> M
  ProjectiveCover cover1;  // P1 ->> Omega M
  ModuleMap f;             // P1 -> P0

  const Representation& p0() const { return cover0.module(); }
  const Representation& p1() const { return cover1.module(); }
};

ProjectivePresentation min_proj_presentation(const Representation& m);

// Covers of M, Omega M, Omega^2 M, ... and differentials d_i: P_i -> P_(i-1).
struct ProjectiveResolution {
  std::vector<ProjectiveCover> covers;
  std::vector<ModuleMap> differentials;  // differentials[i - 1] = d_i
};

ProjectiveResolution projective_resolution(const Representation& m, std::size_t length);

Representation syzygy(const Representation& m, std::size_t times = 1);
Representation cosyzygy(const Representation& m, std::size_t times = 1);

// A map between sums of indecomposable projectives, written as the matrix of
// algebra elements x_jk (paths from target vertex j to source vertex k).
struct ProjectiveMatrix {
  std::vector<std::size_t> source_vertices;
  std::vector<std::size_t> target_vertices;
  std::vector<std::vector<SparseVector>> entries;  // entries[j][k]
};

ProjectiveMatrix projective_matrix(const ModuleMap& f, const std::vector<std::size_t>& source_vertices,
                                   const DirectSum& source, const std::vector<std::size_t>& target_vertices,
                                   const DirectSum& target);

// Hom(-, N) applied to the map: a linear map (+) N_tj -> (+) N_sk.
Matrix hom_into(const ProjectiveMatrix& f, const Representation& n);

// The Nakayama functor applied to the map: (+) I(s_k) -> (+) I(t_j).
ModuleMap nakayama(const BoundAlgebra& algebra, const ProjectiveMatrix& f);

// tau M = ker(nu f) for the minimal presentation f.
Representation ar_translate(const Representation& m);
// tau^- M = D tau D M, computed over the opposite algebra.
Representation inverse_ar_translate(const Representation& m);

// Homology of Hom(P_., N) in degree i >= 1.
std::size_t ext_dim(const Representation& m, const Representation& n, std::size_t i = 1);
// dim Hom(Omega M, N) - dim Hom(P0, N) + dim Hom(M, N).
std::size_t ext1_dim_shift(const Representation& m, const Representation& n);
// dim Hom(M, Sigma N) minus the maps that lift through the injective envelope.
std::size_t ext1_dim_envelope(const Representation& m, const Representation& n);

// Hom(M, N) modulo a subspace of maps (factoring through projectives, or
// through add X for ideal_hom).
class StableHom {
 public:
  StableHom() = default;
  StableHom(HomSpace ambient, Subspace subspace);

  const HomSpace& ambient() const noexcept { return ambient_; }
  const Subspace& subspace() const noexcept { return subspace_; }
  std::size_t dim() const noexcept { return subspace_.codim(); }

  bool is_zero_class(const ModuleMap& f) const;
  Matrix class_of(const ModuleMap& f) const;
  // Maps whose classes form a basis of the quotient.
  std::vector<ModuleMap> representatives() const;

 private:
  HomSpace ambient_;
  Subspace subspace_;
};

StableHom stable_hom(const Representation& m, const Representation& n);
// Hom(M, N) modulo [X](M, N), where X ranges over the given objects.
StableHom ideal_hom(const std::vector<Representation>& through, const Representation& m, const Representation& n);
// The subspace [X](M, N) in coordinates of `ambient`.
Subspace ideal_subspace(const std::vector<Representation>& through, const HomSpace& ambient);

// Whether j: M -> Sigma N lies in the image of Hom(M, I_N) -> Hom(M, Sigma N).
bool factors_through_envelope(const ModuleMap& j, const InjectiveEnvelope& envelope);

}  // namespace relrigid
