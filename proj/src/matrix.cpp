#include "nvl/matrix.hpp"

#include "nvl/errors.hpp"

#include <sstream>

namespace nvl {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw PreconditionError(what);
}

} // namespace

Vector::Vector(FieldSpec field, std::size_t n) : field_(field), e_(n, field.zero()) {}

Vector::Vector(FieldSpec field, std::vector<Scalar> entries) : field_(field), e_(std::move(entries)) {
  for (const auto& x : e_) require(x.field() == field_, "vector entry field mismatch");
}

Vector Vector::unit(FieldSpec field, std::size_t n, std::size_t k) {
  Vector v(field, n);
  v[k] = field.one();
  return v;
}

Vector Vector::from_ints(FieldSpec field, std::initializer_list<long long> values) {
  std::vector<Scalar> e;
  e.reserve(values.size());
  for (long long x : values) e.push_back(field.from_int(x));
  return {field, std::move(e)};
}

bool Vector::is_zero() const {
  for (const auto& x : e_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Vector& Vector::operator+=(const Vector& o) {
  require(size() == o.size(), "vector size mismatch");
  for (std::size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
  return *this;
}

Vector& Vector::operator-=(const Vector& o) {
  require(size() == o.size(), "vector size mismatch");
  for (std::size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
  return *this;
}

Vector& Vector::operator*=(const Scalar& c) {
  for (auto& x : e_) x *= c;
  return *this;
}

Vector Vector::operator-() const {
  Vector r = *this;
  for (auto& x : r.e_) x = -x;
  return r;
}

bool operator==(const Vector& a, const Vector& b) { return a.field_ == b.field_ && a.e_ == b.e_; }

std::size_t Vector::leading_index() const {
  for (std::size_t k = 0; k < e_.size(); ++k) {
    if (!e_[k].is_zero()) return k;
  }
  return e_.size();
}

Vector Vector::slice(std::size_t begin, std::size_t len) const {
  require(begin + len <= size(), "vector slice out of range");
  return {field_, std::vector<Scalar>(e_.begin() + static_cast<std::ptrdiff_t>(begin),
                                      e_.begin() + static_cast<std::ptrdiff_t>(begin + len))};
}

std::string Vector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < e_.size(); ++k) os << (k ? ", " : "") << e_[k].to_string();
  os << ')';
  return os.str();
}

Scalar dot(const Vector& a, const Vector& b) {
  require(a.size() == b.size(), "dot: size mismatch");
  Scalar s = a.field().zero();
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), e_(rows * cols, field.zero()) {}

Matrix Matrix::identity(FieldSpec field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = field.one();
  return m;
}

Matrix Matrix::unit(FieldSpec field, std::size_t n, std::size_t r, std::size_t c) {
  Matrix m(field, n, n);
  m(r, c) = field.one();
  return m;
}

Matrix Matrix::from_ints(FieldSpec field, std::initializer_list<std::initializer_list<long long>> rows) {
  std::size_t nr = rows.size();
  std::size_t nc = nr == 0 ? 0 : rows.begin()->size();
  Matrix m(field, nr, nc);
  std::size_t r = 0;
  for (const auto& row : rows) {
    require(row.size() == nc, "ragged matrix literal");
    std::size_t c = 0;
    for (long long x : row) m(r, c++) = field.from_int(x);
    ++r;
  }
  return m;
}

Matrix Matrix::from_columns(FieldSpec field, std::size_t rows, const std::vector<Vector>& cols) {
  Matrix m(field, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) m.set_col(c, cols[c]);
  return m;
}

Matrix Matrix::from_rows(FieldSpec field, std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
  return m;
}

Matrix Matrix::outer(const Vector& u, const Vector& v) {
  Matrix m(u.field(), u.size(), v.size());
  for (std::size_t r = 0; r < u.size(); ++r) {
    if (u[r].is_zero()) continue;
    for (std::size_t c = 0; c < v.size(); ++c) m(r, c) = u[r] * v[c];
  }
  return m;
}

Matrix Matrix::jordan_block(FieldSpec field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t k = 0; k + 1 < n; ++k) m(k, k + 1) = field.one();
  return m;
}

Vector Matrix::row(std::size_t r) const {
  std::vector<Scalar> e(e_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                        e_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  return {field_, std::move(e)};
}

Vector Matrix::col(std::size_t c) const {
  Vector v(field_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Matrix::set_row(std::size_t r, const Vector& v) {
  require(v.size() == cols_, "set_row: size mismatch");
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = v[c];
}

void Matrix::set_col(std::size_t c, const Vector& v) {
  require(v.size() == rows_, "set_col: size mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  require(r0 + nr <= rows_ && c0 + nc <= cols_, "block out of range");
  Matrix b(field_, nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  require(r0 + b.rows_ <= rows_ && c0 + b.cols_ <= cols_, "set_block out of range");
  for (std::size_t r = 0; r < b.rows_; ++r)
    for (std::size_t c = 0; c < b.cols_; ++c) (*this)(r0 + r, c0 + c) = b(r, c);
}

bool Matrix::is_zero() const {
  for (const auto& x : e_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

bool Matrix::is_upper_triangular() const {
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < r && c < cols_; ++c)
      if (!(*this)(r, c).is_zero()) return false;
  return true;
}

bool Matrix::is_strictly_upper_triangular() const {
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c <= r && c < cols_; ++c)
      if (!(*this)(r, c).is_zero()) return false;
  return true;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  require(rows_ == o.rows_ && cols_ == o.cols_, "matrix shape mismatch");
  for (std::size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  require(rows_ == o.rows_ && cols_ == o.cols_, "matrix shape mismatch");
  for (std::size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& c) {
  for (auto& x : e_) x *= c;
  return *this;
}

Matrix Matrix::operator-() const {
  Matrix r = *this;
  for (auto& x : r.e_) x = -x;
  return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require(a.cols_ == b.rows_, "matrix product shape mismatch");
  Matrix m(a.field_, a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(r, k);
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) {
        if (!b(k, c).is_zero()) m(r, c) += x * b(k, c);
      }
    }
  }
  return m;
}

Vector operator*(const Matrix& m, const Vector& v) {
  require(m.cols_ == v.size(), "matrix-vector shape mismatch");
  Vector out(m.field_, m.rows_);
  for (std::size_t r = 0; r < m.rows_; ++r) {
    for (std::size_t c = 0; c < m.cols_; ++c) {
      if (!m(r, c).is_zero() && !v[c].is_zero()) out[r] += m(r, c) * v[c];
    }
  }
  return out;
}

Vector operator*(const Vector& v, const Matrix& m) {
  require(m.rows_ == v.size(), "vector-matrix shape mismatch");
  Vector out(m.field_, m.cols_);
  for (std::size_t r = 0; r < m.rows_; ++r) {
    if (v[r].is_zero()) continue;
    for (std::size_t c = 0; c < m.cols_; ++c) {
      if (!m(r, c).is_zero()) out[c] += v[r] * m(r, c);
    }
  }
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", " : "") << '[';
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c).to_string();
    os << ']';
  }
  os << ']';
  return os.str();
}

Matrix power(const Matrix& m, std::size_t k) {
  require(m.is_square(), "power of a non-square matrix");
  Matrix result = Matrix::identity(m.field(), m.rows());
  Matrix base = m;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

} // namespace nvl
