#ifndef WEYLKIT_COMPOSITION_HPP_
#define WEYLKIT_COMPOSITION_HPP_

#include <array>
#include <string>
#include <vector>

#include "weylkit/ring.hpp"

namespace weylkit {

// Split octonions: ( a11  x ; y  a22 ) with x, y three-dimensional columns.
struct Zorn {
  Elem a11;
  std::array<Elem, 3> x;
  std::array<Elem, 3> y;
  Elem a22;

  static Zorn zero(const Ring& R);
  static Zorn one(const Ring& R);

  const Ring& ring() const { return a11.ring(); }

  Zorn operator+(const Zorn& o) const;
  Zorn operator-(const Zorn& o) const;
  Zorn operator-() const;
  Zorn operator*(const Zorn& o) const;  // Zorn multiplication
  Zorn scaled(const Elem& k) const;
  bool operator==(const Zorn& o) const;
  bool operator!=(const Zorn& o) const { return !(*this == o); }

  std::array<Elem, 8> coords() const;  // (a11, x1, x2, x3, y1, y2, y3, a22)
  static Zorn from_coords(const std::array<Elem, 8>& c);

  std::string str() const;
};

Elem zorn_q(const Zorn& p);                      // a11*a22 - x.y
Zorn zorn_conj(const Zorn& p);                   // (a22, -x, -y, a11)
Elem zorn_bilin(const Zorn& p, const Zorn& q);   // q(p+q) - q(p) - q(q)
Zorn zorn_sample(const Ring& R, Rng& rng);

std::array<Elem, 3> cross3(const std::array<Elem, 3>& a, const std::array<Elem, 3>& b);
Elem dot3(const std::array<Elem, 3>& a, const std::array<Elem, 3>& b);

// The four split composition algebras over a common coordinate interface;
// rank 1, 2, 4 and 8.
enum class CompKind { Base, Doubled, Matrix2, Zorn };

struct CompAlgebra {
  Ring ring;
  CompKind kind;

  int dim() const;
  std::vector<Elem> zero() const;
  std::vector<Elem> one() const;
  std::vector<Elem> add(const std::vector<Elem>& u, const std::vector<Elem>& v) const;
  std::vector<Elem> mul(const std::vector<Elem>& u, const std::vector<Elem>& v) const;
  std::vector<Elem> conj(const std::vector<Elem>& u) const;
  Elem q(const std::vector<Elem>& u) const;
  Elem bilin(const std::vector<Elem>& u, const std::vector<Elem>& v) const;
  std::vector<Elem> sample(Rng& rng) const;
};

}  // namespace weylkit

#endif
