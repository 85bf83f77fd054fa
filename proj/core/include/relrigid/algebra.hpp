#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "relrigid/field.hpp"
#include "relrigid/quiver.hpp"

namespace relrigid {

// Sparse coordinates over the path-class basis, sorted by basis index.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

// kQ/I for an admissible ideal I, with an explicit basis of path classes.
// Cheap to copy; copies share the same immutable data.
class BoundAlgebra {
 public:
  static constexpr std::size_t kDefaultMaxLength = 30;

  BoundAlgebra() = default;
  static BoundAlgebra build(const Quiver& quiver, const std::vector<Relation>& relations,
                            Field field = {}, std::size_t max_length = kDefaultMaxLength);

  bool valid() const noexcept { return static_cast<bool>(self_); }
  const Quiver& quiver() const { return self_->quiver; }
  const std::vector<Relation>& relations() const { return self_->relations; }
  const Field& field() const { return self_->field; }
  std::size_t vertex_count() const { return self_->quiver.vertex_count(); }

  std::size_t dimension() const { return self_->basis.size(); }
  const std::vector<Path>& basis() const { return self_->basis; }
  // Basis indices of the path classes from `from` to `to`, in basis order.
  const std::vector<std::size_t>& basis_between(std::size_t from, std::size_t to) const {
    return self_->between.at(from).at(to);
  }
  // Position of a basis element inside basis_between(source, target).
  std::size_t block_position(std::size_t basis_index) const { return self_->block_pos.at(basis_index); }
  std::size_t idempotent(std::size_t v) const { return self_->idempotents.at(v); }
  // Every path of at least this length lies in the ideal.
  std::size_t vanishing_length() const { return self_->vanishing_length; }

  SparseVector normal_form(const Path& p) const;
  // The class of "basis[first], then basis[then]".
  SparseVector multiply(std::size_t first, std::size_t then) const;

  BoundAlgebra opposite() const;

  friend bool operator==(const BoundAlgebra& a, const BoundAlgebra& b) { return a.self_ == b.self_; }

 private:
  struct Data {
    Quiver quiver;
    std::vector<Relation> relations;
    Field field;
    std::size_t vanishing_length = 0;
    std::vector<Path> basis;
    std::vector<std::vector<std::vector<std::size_t>>> between;
    std::vector<std::size_t> block_pos;
    std::vector<std::size_t> idempotents;
    std::map<Path, SparseVector> normal_forms;  // every path shorter than vanishing_length
  };

  static std::shared_ptr<const Data> compute(const Quiver& quiver, const std::vector<Relation>& relations,
                                             Field field, std::size_t max_length);

  std::shared_ptr<const Data> self_;
  std::shared_ptr<const Data> op_;
};

}  // namespace relrigid
