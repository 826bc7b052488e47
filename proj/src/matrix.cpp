#include "weylkit/matrix.hpp"

#include <sstream>

namespace weylkit {

Matrix::Matrix(Ring ring, int rows, int cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols) {
  if (rows < 1 || cols < 1) throw UsageError("matrix dimensions must be positive");
  a_.assign(static_cast<size_t>(rows) * cols, ring_.zero());
}

Matrix Matrix::identity(const Ring& ring, int n) {
  Matrix m(ring, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = ring.one();
  return m;
}

Matrix Matrix::from_rows(const Ring& ring, const std::vector<std::vector<Elem>>& rows) {
  if (rows.empty() || rows[0].empty()) throw UsageError("matrix cannot be empty");
  Matrix m(ring, static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows[0].size()) throw UsageError("ragged matrix rows");
    for (size_t j = 0; j < rows[i].size(); ++j) m.at(int(i), int(j)) = rows[i][j];
  }
  return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw UsageError("matrix shape mismatch in +");
  Matrix r(ring_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + (-o); }

Matrix Matrix::operator-() const {
  Matrix r(ring_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_)
    throw UsageError("matrix shape mismatch in *: " + std::to_string(cols_) + " vs " +
                     std::to_string(o.rows_));
  Matrix r(ring_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Elem& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) += aik * o.at(k, j);
    }
  return r;
}

Matrix Matrix::scaled(const Elem& k) const {
  Matrix r(ring_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * k;
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(ring_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (size_t i = 0; i < a_.size(); ++i)
    if (a_[i] != o.a_[i]) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  return *this == identity(ring_, rows_);
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

std::vector<Elem> Matrix::apply(const std::vector<Elem>& v) const {
  if (static_cast<int>(v.size()) != cols_) throw UsageError("matrix/vector shape mismatch");
  std::vector<Elem> r(static_cast<size_t>(rows_), ring_.zero());
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
  return r;
}

void Matrix::check_square() const {
  if (rows_ != cols_) throw UsageError("square matrix required");
}

// Berkowitz: char polys of leading principal submatrices, extended one row
// and column at a time through Toeplitz convolutions. No divisions, so the
// result is exact over rings with zero divisors.
std::vector<Elem> Matrix::char_poly() const {
  check_square();
  const int n = rows_;
  std::vector<Elem> v{ring_.one()};
  for (int r = 1; r <= n; ++r) {
    // t[0..r]: 1, -a_{rr}, -R S, -R M S, -R M^2 S, ...
    std::vector<Elem> t;
    t.reserve(r + 1);
    t.push_back(ring_.one());
    t.push_back(-at(r - 1, r - 1));
    std::vector<Elem> vec(static_cast<size_t>(r - 1), ring_.zero());
    for (int i = 0; i < r - 1; ++i) vec[i] = at(i, r - 1);  // S
    for (int k = 2; k <= r; ++k) {
      Elem dot = ring_.zero();
      for (int i = 0; i < r - 1; ++i) dot += at(r - 1, i) * vec[i];
      t.push_back(-dot);
      if (k == r) break;
      std::vector<Elem> next(static_cast<size_t>(r - 1), ring_.zero());
      for (int i = 0; i < r - 1; ++i)
        for (int j = 0; j < r - 1; ++j) next[i] += at(i, j) * vec[j];
      vec = std::move(next);
    }
    std::vector<Elem> next(static_cast<size_t>(r + 1), ring_.zero());
    for (size_t i = 0; i < next.size(); ++i)
      for (size_t j = 0; j < v.size(); ++j)
        if (i >= j && i - j < t.size()) next[i] += t[i - j] * v[j];
    v = std::move(next);
  }
  return v;
}

Elem Matrix::det() const {
  check_square();
  auto c = char_poly();
  Elem d = c.back();
  if (rows_ % 2 != 0) d = -d;  // det(A) = (-1)^n * c_n
  return d;
}

std::optional<Matrix> Matrix::try_inverse() const {
  check_square();
  const int n = rows_;
  auto c = char_poly();
  // Cayley-Hamilton: A (A^{n-1} + c_1 A^{n-2} + ... + c_{n-1}) = -c_n
  Elem neg_cn = -c[n];
  auto unit = try_invert(neg_cn);
  if (!unit) return std::nullopt;
  Matrix b = identity(ring_, n).scaled(c[0]);
  for (int k = 1; k <= n - 1; ++k) {
    b = (*this) * b;
    Matrix shift = identity(ring_, n).scaled(c[k]);
    b = b + shift;
  }
  return b.scaled(*unit);
}

std::string Matrix::str() const {
  std::ostringstream out;
  out << "[";
  for (int i = 0; i < rows_; ++i) {
    if (i) out << "; ";
    for (int j = 0; j < cols_; ++j) {
      if (j) out << ",";
      out << at(i, j).str();
    }
  }
  out << "]";
  return out.str();
}

}  // namespace weylkit
