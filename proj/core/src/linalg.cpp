#include "relrigid/linalg.hpp"

#include <algorithm>
#include <numeric>

#include "relrigid/error.hpp"

namespace relrigid {

RowEchelon row_reduce(Matrix m) {
  const Field f = m.field();
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  Rational t;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(m(p, c)) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = c; j < cols; ++j) std::swap(m.raw(p, j), m.raw(r, j));
    }
    const Rational inv = f.inverse(m(r, c));
    for (std::size_t j = c; j < cols; ++j) m.raw(r, j) = f.mul(m(r, j), inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      const Rational factor = m(i, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (sgn(m(r, j)) == 0) continue;
        t = f.mul(factor, m(r, j));
        m.raw(i, j) = f.sub(m(i, j), t);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

Matrix kernel_basis(const Matrix& m) {
  const RowEchelon e = row_reduce(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < cols; ++c) {
    if (!is_pivot[c]) free.push_back(c);
  }
  Matrix k(cols, free.size(), m.field());
  for (std::size_t j = 0; j < free.size(); ++j) {
    k.raw(free[j], j) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      k.raw(e.pivots[r], j) = m.field().neg(e.reduced(r, free[j]));
    }
  }
  return k;
}

Matrix image_basis(const Matrix& m) { return m.select_columns(row_reduce(m).pivots); }

std::optional<Matrix> solve(const Matrix& m, const Matrix& b) {
  if (b.rows() != m.rows() || b.cols() != 1) throw InputError("solve: dimension mismatch");
  Matrix aug = Matrix::hstack({m, b}, m.rows(), m.field());
  const RowEchelon e = row_reduce(std::move(aug));
  const std::size_t n = m.cols();
  if (!e.pivots.empty() && e.pivots.back() == n) return std::nullopt;
  Matrix x(n, 1, m.field());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x.raw(e.pivots[r], 0) = e.reduced(r, n);
  return x;
}

bool in_column_span(const Matrix& spanning, const Matrix& v) {
  if (spanning.cols() == 0) return v.is_zero();
  return solve(spanning, v).has_value();
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) return std::nullopt;
  const std::size_t n = m.rows();
  Matrix aug = Matrix::hstack({m, Matrix::identity(n, m.field())}, n, m.field());
  const RowEchelon e = row_reduce(std::move(aug));
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
  return e.reduced.block(0, n, n, n);
}

bool is_invertible(const Matrix& m) { return m.is_square() && rank(m) == m.rows(); }

Matrix complement_basis(const Matrix& basis) {
  const std::size_t n = basis.rows();
  const RowEchelon e = row_reduce(basis.transpose());
  std::vector<bool> used(n, false);
  for (auto p : e.pivots) used[p] = true;
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < n; ++i) {
    if (!used[i]) rest.push_back(i);
  }
  Matrix c(n, rest.size(), basis.field());
  for (std::size_t j = 0; j < rest.size(); ++j) c.raw(rest[j], j) = 1;
  return c;
}

Matrix left_inverse(const Matrix& basis) {
  const std::size_t k = basis.cols();
  const RowEchelon e = row_reduce(basis.transpose());
  if (e.pivots.size() != k) throw ConsistencyError("left_inverse: columns are dependent");
  const Matrix square = basis.select_rows(e.pivots);
  const auto inv = inverse(square);
  if (!inv) throw ConsistencyError("left_inverse: singular selection");
  Matrix l(k, basis.rows(), basis.field());
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < k; ++i) l.raw(i, e.pivots[j]) = (*inv)(i, j);
  }
  return l;
}

std::vector<Rational> characteristic_polynomial(const Matrix& m) {
  if (!m.is_square()) throw InputError("characteristic polynomial of a non-square matrix");
  if (!m.field().is_rational()) throw FieldError("characteristic polynomial requires characteristic 0");
  const std::size_t n = m.rows();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  Matrix acc(n, n, m.field());
  const Matrix id = Matrix::identity(n, m.field());
  for (std::size_t k = 1; k <= n; ++k) {
    acc = m * acc + id.scaled(c[n - k + 1]);
    const Matrix am = m * acc;
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    c[n - k] = -tr / Rational(static_cast<long>(k));
  }
  return c;
}

namespace {

Rational evaluate(const std::vector<mpz_class>& coeffs, const Rational& x) {
  Rational acc = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + Rational(coeffs[i]);
  return acc;
}

std::vector<mpz_class> divisors(const mpz_class& n, unsigned long limit) {
  std::vector<mpz_class> out;
  mpz_class a = abs(n);
  if (a == 0 || a > mpz_class(limit) * mpz_class(limit)) return out;
  for (mpz_class d = 1; d * d <= a; ++d) {
    if (a % d == 0) {
      out.push_back(d);
      if (d * d != a) out.push_back(a / d);
    }
  }
  return out;
}

}  // namespace

std::vector<Rational> rational_roots(const std::vector<Rational>& coeffs, unsigned long search_limit) {
  std::vector<Rational> roots;
  std::size_t lo = 0;
  std::size_t hi = coeffs.size();
  while (hi > 0 && sgn(coeffs[hi - 1]) == 0) --hi;
  if (hi == 0) return roots;
  while (lo < hi && sgn(coeffs[lo]) == 0) ++lo;
  if (lo > 0) roots.emplace_back(0);
  if (hi - lo <= 1) return roots;
  mpz_class lcm = 1;
  for (std::size_t i = lo; i < hi; ++i) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), coeffs[i].get_den_mpz_t());
  }
  std::vector<mpz_class> ints;
  for (std::size_t i = lo; i < hi; ++i) {
    Rational scaled = coeffs[i] * Rational(lcm);
    ints.push_back(scaled.get_num());
  }
  const auto ps = divisors(ints.front(), search_limit);
  const auto qs = divisors(ints.back(), search_limit);
  for (const auto& p : ps) {
    for (const auto& q : qs) {
      for (int sign : {1, -1}) {
        const mpz_class num = p * sign;
        Rational cand(num, q);
        cand.canonicalize();
        if (std::find(roots.begin(), roots.end(), cand) != roots.end()) continue;
        if (sgn(evaluate(ints, cand)) == 0) roots.push_back(cand);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

Subspace::Subspace(std::size_t ambient, Field field) : ambient_(ambient), field_(field) {
  refresh_free();
}

Subspace::Subspace(const Matrix& spanning, std::size_t ambient)
    : ambient_(ambient), field_(spanning.field()) {
  if (spanning.rows() != ambient) throw InputError("Subspace: spanning vectors of wrong length");
  if (spanning.cols() > 0) {
    const RowEchelon e = row_reduce(spanning.transpose());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      std::vector<Rational> row(ambient);
      for (std::size_t j = 0; j < ambient; ++j) row[j] = e.reduced(r, j);
      rows_.push_back(std::move(row));
      pivots_.push_back(e.pivots[r]);
    }
  }
  refresh_free();
}

void Subspace::refresh_free() {
  free_.clear();
  std::vector<bool> used(ambient_, false);
  for (auto p : pivots_) used[p] = true;
  for (std::size_t i = 0; i < ambient_; ++i) {
    if (!used[i]) free_.push_back(i);
  }
}

Matrix Subspace::reduce(const Matrix& v) const {
  if (v.rows() != ambient_ || v.cols() != 1) throw InputError("Subspace: vector of wrong length");
  Matrix w = v;
  Rational t;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rational c = w(pivots_[r], 0);
    if (sgn(c) == 0) continue;
    for (std::size_t j = 0; j < ambient_; ++j) {
      if (sgn(rows_[r][j]) == 0) continue;
      t = field_.mul(c, rows_[r][j]);
      w.raw(j, 0) = field_.sub(w(j, 0), t);
    }
  }
  return w;
}

bool Subspace::contains(const Matrix& v) const { return reduce(v).is_zero(); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) return false;
  for (const auto& row : other.rows_) {
    if (!contains(Matrix::column_vector(row, field_))) return false;
  }
  return true;
}

void Subspace::add(const Matrix& v) {
  Matrix w = reduce(v);
  std::size_t p = 0;
  while (p < ambient_ && sgn(w(p, 0)) == 0) ++p;
  if (p == ambient_) return;
  const Rational inv = field_.inverse(w(p, 0));
  std::vector<Rational> row(ambient_);
  for (std::size_t j = 0; j < ambient_; ++j) row[j] = field_.mul(w(j, 0), inv);
  for (auto& other : rows_) {
    const Rational c = other[p];
    if (sgn(c) == 0) continue;
    for (std::size_t j = 0; j < ambient_; ++j) other[j] = field_.sub(other[j], field_.mul(c, row[j]));
  }
  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
  rows_.insert(rows_.begin() + pos, std::move(row));
  pivots_.insert(pivots_.begin() + pos, p);
  refresh_free();
}

void Subspace::add_columns(const Matrix& spanning) {
  for (std::size_t c = 0; c < spanning.cols(); ++c) {
    if (is_full()) return;
    add(spanning.column(c));
  }
}

Matrix Subspace::basis() const {
  Matrix b(ambient_, rows_.size(), field_);
  for (std::size_t c = 0; c < rows_.size(); ++c) {
    for (std::size_t i = 0; i < ambient_; ++i) b.raw(i, c) = rows_[c][i];
  }
  return b;
}

Matrix Subspace::quotient_coordinates(const Matrix& v) const {
  const Matrix w = reduce(v);
  Matrix q(free_.size(), 1, field_);
  for (std::size_t i = 0; i < free_.size(); ++i) q.raw(i, 0) = w(free_[i], 0);
  return q;
}

Matrix Subspace::quotient_map() const {
  Matrix q(free_.size(), ambient_, field_);
  for (std::size_t j = 0; j < ambient_; ++j) {
    Matrix e(ambient_, 1, field_);
    e.raw(j, 0) = 1;
    q.set_block(0, j, quotient_coordinates(e));
  }
  return q;
}

}  // namespace relrigid
