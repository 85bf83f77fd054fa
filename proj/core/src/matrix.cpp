#include "relrigid/matrix.hpp"

#include <sstream>

#include "relrigid/error.hpp"

namespace relrigid {

namespace {

void require_same_field(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field())) {
    throw InputError("matrices over different fields: " + a.field().name() + " and " +
                     b.field().name());
  }
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, Field field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols) {}

Matrix Matrix::identity(std::size_t n, Field field) {
  Matrix m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
  return m;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<long>> rows, Field field) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  Matrix m(r, c, field);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw InputError("ragged matrix literal");
    std::size_t j = 0;
    for (long v : row) m.set(i, j++, Rational(v));
    ++i;
  }
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols,
                         Field field) {
  Matrix m(rows.size(), cols, field);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw InputError("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

Matrix Matrix::column_vector(const std::vector<Rational>& entries, Field field) {
  Matrix m(entries.size(), 1, field);
  for (std::size_t i = 0; i < entries.size(); ++i) m.set(i, 0, entries[i]);
  return m;
}

const Rational& Matrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw InputError("matrix index out of range");
  return data_[r * cols_ + c];
}

void Matrix::set(std::size_t r, std::size_t c, const Rational& value) {
  if (r >= rows_ || c >= cols_) throw InputError("matrix index out of range");
  data_[r * cols_ + c] = field_.reduce(value);
}

bool Matrix::is_zero() const {
  for (const auto& x : data_) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, field_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t.data_[j * rows_ + i] = data_[i * cols_ + j];
  }
  return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw InputError("matrix block out of range");
  Matrix b(nr, nc, field_);
  for (std::size_t i = 0; i < nr; ++i) {
    for (std::size_t j = 0; j < nc; ++j) b.data_[i * nc + j] = data_[(r0 + i) * cols_ + c0 + j];
  }
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& m) {
  require_same_field(*this, m);
  if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_) throw InputError("matrix block out of range");
  for (std::size_t i = 0; i < m.rows_; ++i) {
    for (std::size_t j = 0; j < m.cols_; ++j) data_[(r0 + i) * cols_ + c0 + j] = m.data_[i * m.cols_ + j];
  }
}

Matrix Matrix::column(std::size_t c) const { return block(0, c, rows_, 1); }

Matrix Matrix::select_columns(const std::vector<std::size_t>& cols) const {
  Matrix s(rows_, cols.size(), field_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) s.data_[i * cols.size() + j] = at(i, cols[j]);
  }
  return s;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& rows) const {
  Matrix s(rows.size(), cols_, field_);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols_; ++j) s.data_[i * cols_ + j] = at(rows[i], j);
  }
  return s;
}

Matrix Matrix::hstack(const std::vector<Matrix>& parts, std::size_t rows, Field field) {
  std::size_t cols = 0;
  for (const auto& p : parts) {
    if (p.rows_ != rows) throw InputError("hstack row mismatch");
    cols += p.cols_;
  }
  Matrix m(rows, cols, field);
  std::size_t c = 0;
  for (const auto& p : parts) {
    m.set_block(0, c, p);
    c += p.cols_;
  }
  return m;
}

Matrix Matrix::vstack(const std::vector<Matrix>& parts, std::size_t cols, Field field) {
  std::size_t rows = 0;
  for (const auto& p : parts) {
    if (p.cols_ != cols) throw InputError("vstack column mismatch");
    rows += p.rows_;
  }
  Matrix m(rows, cols, field);
  std::size_t r = 0;
  for (const auto& p : parts) {
    m.set_block(r, 0, p);
    r += p.rows_;
  }
  return m;
}

Matrix Matrix::block_diagonal(const std::vector<Matrix>& parts, Field field) {
  std::size_t rows = 0, cols = 0;
  for (const auto& p : parts) {
    rows += p.rows_;
    cols += p.cols_;
  }
  Matrix m(rows, cols, field);
  std::size_t r = 0, c = 0;
  for (const auto& p : parts) {
    m.set_block(r, c, p);
    r += p.rows_;
    c += p.cols_;
  }
  return m;
}

Matrix Matrix::operator-() const {
  Matrix m(rows_, cols_, field_);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = field_.neg(data_[i]);
  return m;
}

Matrix Matrix::scaled(const Rational& s) const {
  Matrix m(rows_, cols_, field_);
  const Rational t = field_.reduce(s);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = field_.mul(data_[i], t);
  return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("matrix sum shape mismatch");
  Matrix m(a.rows_, a.cols_, a.field_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) m.data_[i] = a.field_.add(a.data_[i], b.data_[i]);
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("matrix difference shape mismatch");
  Matrix m(a.rows_, a.cols_, a.field_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) m.data_[i] = a.field_.sub(a.data_[i], b.data_[i]);
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.cols_ != b.rows_) {
    throw InputError("matrix product shape mismatch: " + std::to_string(a.rows_) + "x" +
                     std::to_string(a.cols_) + " * " + std::to_string(b.rows_) + "x" +
                     std::to_string(b.cols_));
  }
  Matrix m(a.rows_, b.cols_, a.field_);
  Rational t;
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a.data_[i * a.cols_ + k];
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rational& y = b.data_[k * b.cols_ + j];
        if (sgn(y) == 0) continue;
        t = x * y;
        m.data_[i * b.cols_ + j] += t;
      }
    }
  }
  if (!a.field_.is_rational()) {
    for (auto& x : m.data_) x = a.field_.reduce(x);
  }
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ' ';
      os << data_[i * cols_ + j].get_str();
    }
    os << "]\n";
  }
  return os.str();
}

}  // namespace relrigid
