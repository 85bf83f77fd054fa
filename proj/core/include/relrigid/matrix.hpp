#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "relrigid/field.hpp"

namespace relrigid {

// Dense row-major matrix over a Field. Shape is fixed at construction.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, Field field = {});

  static Matrix identity(std::size_t n, Field field = {});
  static Matrix from_rows(std::initializer_list<std::initializer_list<long>> rows,
                          Field field = {});
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols,
                          Field field = {});
  static Matrix column_vector(const std::vector<Rational>& entries, Field field = {});

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const Field& field() const noexcept { return field_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Rational& value);
  // Caller guarantees `value` is already reduced for the field.
  Rational& raw(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  bool is_zero() const;
  bool is_square() const noexcept { return rows_ == cols_; }

  Matrix transpose() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& m);
  Matrix column(std::size_t c) const;
  Matrix select_columns(const std::vector<std::size_t>& cols) const;
  Matrix select_rows(const std::vector<std::size_t>& rows) const;

  static Matrix hstack(const std::vector<Matrix>& parts, std::size_t rows, Field field = {});
  static Matrix vstack(const std::vector<Matrix>& parts, std::size_t cols, Field field = {});
  static Matrix block_diagonal(const std::vector<Matrix>& parts, Field field = {});

  Matrix operator-() const;
  Matrix scaled(const Rational& s) const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Field field_;
  std::vector<Rational> data_;
};

}  // namespace relrigid
