#ifndef WEYLKIT_ALBERT_HPP_
#define WEYLKIT_ALBERT_HPP_

#include <array>
#include <optional>
#include <string>

#include "weylkit/composition.hpp"
#include "weylkit/matrix.hpp"

namespace weylkit {

// Split Albert algebra element: the Hermitian matrix
//   ( a1   c3   conj(c2) )
//   ( conj(c3)   a2   c1 )
//   ( c2   conj(c1)   a3 )
// stored by its three scalars and three octonion entries.
struct Albert {
  Elem a1, a2, a3;
  Zorn c1, c2, c3;

  static Albert zero(const Ring& R);
  static Albert one(const Ring& R);
  static Albert diag(const Elem& d1, const Elem& d2, const Elem& d3);

  const Ring& ring() const { return a1.ring(); }

  Albert operator+(const Albert& o) const;
  Albert operator-(const Albert& o) const;
  Albert operator-() const;
  Albert scaled(const Elem& k) const;
  bool operator==(const Albert& o) const;
  bool operator!=(const Albert& o) const { return !(*this == o); }

  // basis order: a1, a2, a3, then the 8 Zorn coordinates of c1, c2, c3
  std::vector<Elem> coords() const;
  static Albert from_coords(const Ring& R, const std::vector<Elem>& c);

  std::string str() const;
};

Albert albert_sharp(const Albert& x);
Albert albert_cross(const Albert& x, const Albert& y);  // (x+y)# - x# - y#
Elem albert_norm(const Albert& x);
Elem albert_trace(const Albert& x, const Albert& y);
Elem albert_trace_one(const Albert& x);  // T(1, x)
Albert u_operator(const Albert& x, const Albert& y);
std::optional<Albert> albert_try_invert(const Albert& x);
Albert albert_sample(const Ring& R, Rng& rng);

// Gram matrix of T in the standard 27-coordinate basis; involutive.
Matrix trace_gram(const Ring& R);

// A linear map on the 27-dimensional module known to preserve the cubic
// norm, either by construction or by the symbolic check.
class NormPreservingMap {
 public:
  static NormPreservingMap identity(const Ring& R);

  // diag action a_i -> mu_i^{-2} a_i, c_i -> mu_i c_i; needs mu1 mu2 mu3 = 1
  static NormPreservingMap e6_torus(const Elem& mu1, const Elem& mu2, const Elem& mu3);

  // Accepts iff N(m x) - N(x) vanishes identically in 27 indeterminates.
  // On rejection returns nullopt and, when given, a monomial witness.
  static std::optional<NormPreservingMap> validate(const Matrix& m,
                                                   std::string* witness = nullptr);

  const Matrix& matrix() const { return m_; }
  const Ring& ring() const { return m_.ring(); }

  Albert apply(const Albert& x) const;
  NormPreservingMap dagger() const;          // adjoint for T
  NormPreservingMap inverse() const;
  NormPreservingMap inverse_dagger() const;  // g^{-dagger}
  NormPreservingMap compose(const NormPreservingMap& inner) const;

  bool operator==(const NormPreservingMap& o) const { return m_ == o.m_; }

 private:
  explicit NormPreservingMap(Matrix m) : m_(std::move(m)) {}
  Matrix m_;
};

}  // namespace weylkit

#endif
