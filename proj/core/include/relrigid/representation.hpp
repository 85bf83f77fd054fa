#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "relrigid/algebra.hpp"
#include "relrigid/matrix.hpp"

namespace relrigid {

struct Unchecked {};
inline constexpr Unchecked unchecked{};

// A finite-dimensional left module: one vector space per vertex and one
// matrix (target dim x source dim) per arrow. Copies share immutable data.
class Representation {
 public:
  Representation() = default;
  // Validates shapes and all relations.
  Representation(BoundAlgebra algebra, std::vector<std::size_t> dims, std::vector<Matrix> arrow_maps);
  // Shapes are still checked; relations are trusted.
  Representation(Unchecked, BoundAlgebra algebra, std::vector<std::size_t> dims, std::vector<Matrix> arrow_maps);

  static Representation zero(const BoundAlgebra& algebra);

  bool valid() const noexcept { return static_cast<bool>(data_); }
  const BoundAlgebra& algebra() const { return data_->algebra; }
  const Field& field() const { return data_->algebra.field(); }
  std::size_t vertex_count() const { return data_->dims.size(); }
  const std::vector<std::size_t>& dims() const { return data_->dims; }
  std::size_t dim(std::size_t v) const { return data_->dims.at(v); }
  std::size_t total_dim() const;
  bool is_zero() const { return total_dim() == 0; }
  const Matrix& arrow_map(std::size_t a) const { return data_->maps.at(a); }
  const std::vector<Matrix>& arrow_maps() const { return data_->maps; }

  Matrix path_matrix(const Path& p) const;
  bool satisfies_relations() const;

  // The vector-space dual, a module over the opposite algebra.
  Representation dual() const;

  bool same_data(const Representation& other) const { return data_ == other.data_; }

 private:
  struct Data {
    BoundAlgebra algebra;
    std::vector<std::size_t> dims;
    std::vector<Matrix> maps;
  };
  std::shared_ptr<const Data> data_;
};

class ModuleMap {
 public:
  ModuleMap() = default;
  // Validates shapes and the intertwining identities.
  ModuleMap(Representation source, Representation target, std::vector<Matrix> components);
  ModuleMap(Unchecked, Representation source, Representation target, std::vector<Matrix> components);

  static ModuleMap zero(const Representation& source, const Representation& target);
  static ModuleMap identity(const Representation& m);

  const Representation& source() const noexcept { return source_; }
  const Representation& target() const noexcept { return target_; }
  const Matrix& component(std::size_t v) const { return components_.at(v); }
  const std::vector<Matrix>& components() const noexcept { return components_; }

  bool is_intertwining() const;
  bool is_zero() const;
  bool is_injective() const;
  bool is_surjective() const;
  bool is_isomorphism() const;

  // All components, vertex by vertex, each row-major, as one column vector.
  Matrix flatten() const;
  ModuleMap dual() const;
  ModuleMap scaled(const Rational& s) const;

  friend ModuleMap operator+(const ModuleMap& a, const ModuleMap& b);
  friend ModuleMap operator-(const ModuleMap& a, const ModuleMap& b);

 private:
  Representation source_;
  Representation target_;
  std::vector<Matrix> components_;
};

// g after f.
ModuleMap compose(const ModuleMap& g, const ModuleMap& f);

// A short exact sequence A >-> B ->> C.
struct Conflation {
  ModuleMap inflation;
  ModuleMap deflation;

  const Representation& first() const { return inflation.source(); }
  const Representation& middle() const { return inflation.target(); }
  const Representation& last() const { return deflation.target(); }
  bool is_exact() const;
};

class HomSpace {
 public:
  HomSpace() = default;
  HomSpace(const Representation& source, const Representation& target);

  const Representation& source() const noexcept { return source_; }
  const Representation& target() const noexcept { return target_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<ModuleMap>& basis() const noexcept { return basis_; }
  const ModuleMap& operator[](std::size_t i) const { return basis_.at(i); }

  Matrix coordinates(const ModuleMap& f) const;
  ModuleMap combination(const Matrix& coeffs) const;

 private:
  Representation source_;
  Representation target_;
  std::vector<ModuleMap> basis_;
  Matrix coordinate_map_;  // dim x flattened size
};

std::vector<ModuleMap> hom_basis(const Representation& m, const Representation& n);
std::size_t hom_dim(const Representation& m, const Representation& n);

struct Submodule {
  Representation module;
  ModuleMap inclusion;
};

struct QuotientModule {
  Representation module;
  ModuleMap projection;
  std::vector<Matrix> section;  // vertexwise linear splittings of the projection
};

// Per-vertex spanning columns of an invariant subspace.
Submodule submodule(const Representation& m, const std::vector<Matrix>& spanning);
QuotientModule quotient(const Representation& m, const std::vector<Matrix>& spanning);

Submodule kernel(const ModuleMap& f);
Submodule image(const ModuleMap& f);
QuotientModule cokernel(const ModuleMap& f);

Submodule radical(const Representation& m);
QuotientModule top(const Representation& m);
Submodule socle(const Representation& m);

// Sum of the images of all maps x -> n.
Submodule trace_submodule(const Representation& x, const Representation& n);
bool in_fac(const Representation& n, const Representation& x);

struct DirectSum {
  Representation sum;
  std::vector<ModuleMap> injections;
  std::vector<ModuleMap> projections;
  std::vector<std::vector<std::size_t>> offsets;  // offsets[k][v]: start of summand k at vertex v
};

DirectSum direct_sum(const BoundAlgebra& algebra, const std::vector<Representation>& parts);

// [f_1 ... f_k]: (+) sources -> common target.
ModuleMap map_from_sum(const DirectSum& sum, const std::vector<ModuleMap>& maps, const Representation& target);
// (f_1; ...; f_k): common source -> (+) targets.
ModuleMap map_into_sum(const DirectSum& sum, const std::vector<ModuleMap>& maps, const Representation& source);
// (+) f_k between two sums.
ModuleMap diagonal_map(const DirectSum& from, const DirectSum& to, const std::vector<ModuleMap>& maps);

}  // namespace relrigid
