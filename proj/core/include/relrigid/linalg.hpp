#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "relrigid/matrix.hpp"

namespace relrigid {

struct RowEchelon {
  Matrix reduced;                    // reduced row echelon form, zero rows last
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

// Gauss-Jordan elimination; the pivot in each column is the first usable row.
RowEchelon row_reduce(Matrix m);

std::size_t rank(const Matrix& m);

// Columns form a basis of {v : m v = 0}, one vector per free column.
Matrix kernel_basis(const Matrix& m);

// The pivot columns of m, a basis of its column space.
Matrix image_basis(const Matrix& m);

std::optional<Matrix> solve(const Matrix& m, const Matrix& b);

bool in_column_span(const Matrix& spanning, const Matrix& v);

std::optional<Matrix> inverse(const Matrix& m);

bool is_invertible(const Matrix& m);

// Standard basis vectors completing the columns of `basis` to a basis of the
// ambient space, chosen at the non-pivot rows.
Matrix complement_basis(const Matrix& basis);

// A matrix L with L * basis = identity, for basis of full column rank.
Matrix left_inverse(const Matrix& basis);

// Characteristic polynomial coefficients c_0..c_n of det(x I - m), monic.
std::vector<Rational> characteristic_polynomial(const Matrix& m);

// Distinct rational roots of a polynomial with rational coefficients (c_0 first).
// Root candidates whose numerators or denominators exceed `search_limit` are skipped.
std::vector<Rational> rational_roots(const std::vector<Rational>& coeffs,
                                     unsigned long search_limit = 1000000UL);

// A subspace of k^n, held in reduced row echelon form.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient, Field field = {});
  // Spanned by the columns of `spanning`.
  Subspace(const Matrix& spanning, std::size_t ambient);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return pivots_.size(); }
  std::size_t codim() const noexcept { return ambient_ - pivots_.size(); }
  const Field& field() const noexcept { return field_; }

  bool contains(const Matrix& v) const;
  bool contains(const Subspace& other) const;
  bool is_full() const noexcept { return dim() == ambient_; }

  void add(const Matrix& v);
  void add_columns(const Matrix& spanning);

  // Columns are a basis of the subspace.
  Matrix basis() const;
  // Coordinates of v in the quotient k^n / W, w.r.t. the non-pivot positions.
  Matrix quotient_coordinates(const Matrix& v) const;
  // Row map whose kernel is exactly the subspace.
  Matrix quotient_map() const;
  const std::vector<std::size_t>& free_positions() const noexcept { return free_; }

 private:
  Matrix reduce(const Matrix& v) const;
  void refresh_free();

  std::size_t ambient_ = 0;
  Field field_;
  std::vector<std::vector<Rational>> rows_;  // echelon rows
  std::vector<std::size_t> pivots_;          // pivot position of each row
  std::vector<std::size_t> free_;
};

}  // namespace relrigid
