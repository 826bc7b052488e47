#ifndef WEYLKIT_MATRIX_HPP_
#define WEYLKIT_MATRIX_HPP_

#include <optional>
#include <string>
#include <vector>

#include "weylkit/ring.hpp"

namespace weylkit {

// Dense matrix over an exact ring. Vectors act on the right as columns.
class Matrix {
 public:
  Matrix(Ring ring, int rows, int cols);
  static Matrix identity(const Ring& ring, int n);
  static Matrix from_rows(const Ring& ring, const std::vector<std::vector<Elem>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Ring& ring() const { return ring_; }

  Elem& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Elem& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator-() const;
  Matrix operator*(const Matrix& o) const;
  Matrix scaled(const Elem& k) const;
  Matrix transpose() const;

  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }
  bool is_identity() const;
  bool is_zero() const;

  std::vector<Elem> apply(const std::vector<Elem>& v) const;

  // Characteristic polynomial det(tI - A) as coefficients c[0..n],
  // c[0] = 1, computed without division (valid over rings with zero
  // divisors). Square matrices only.
  std::vector<Elem> char_poly() const;

  Elem det() const;

  // Adjugate-based inverse: defined exactly when det is a unit.
  std::optional<Matrix> try_inverse() const;

  std::string str() const;

 private:
  Ring ring_;
  int rows_, cols_;
  std::vector<Elem> a_;
  void check_square() const;
};

}  // namespace weylkit

#endif
