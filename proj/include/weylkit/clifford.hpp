#ifndef WEYLKIT_CLIFFORD_HPP_
#define WEYLKIT_CLIFFORD_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "weylkit/ring.hpp"

namespace weylkit {

// Free quadratic module with a fixed basis: q on basis vectors plus the
// polarized form B on distinct pairs. Generators multiply under
// e_i e_j + e_j e_i = B(i,j) and e_i^2 = q(i).
struct QuadraticSpace {
  Ring ring;
  std::vector<Elem> q_diag;
  std::vector<std::vector<Elem>> b_off;  // symmetric, diagonal unused

  int dim() const { return static_cast<int>(q_diag.size()); }
  const Elem& q(int i) const { return q_diag[static_cast<size_t>(i)]; }
  const Elem& b(int i, int j) const { return b_off[static_cast<size_t>(i)][static_cast<size_t>(j)]; }

  Elem q_of(const std::vector<Elem>& coords) const;
  Elem b_of(const std::vector<Elem>& x, const std::vector<Elem>& y) const;
};

using QuadSpacePtr = std::shared_ptr<const QuadraticSpace>;

QuadSpacePtr make_quadratic_space(const Ring& R, const std::vector<Elem>& q_diag,
                                  const std::vector<std::vector<Elem>>& b_off);

// K e_- + M0 + K e_+ with q = x_- x_+ + q0; M0 is split of the given rank,
// hyperbolic pairs followed by one square term when the rank is odd.
// Label order: e_- = 0, M0 = 1..rank, e_+ = rank+1.
QuadSpacePtr make_split_bd_space(const Ring& R, int m0_rank);

// Hyperbolic sum for the D realization: labels 0..d-1 are e_{-1}..e_{-d},
// labels d..2d-1 are e_1..e_d, with B(e_{-i}, e_i) = 1.
QuadSpacePtr make_hyperbolic_space(const Ring& R, int d);

// Sparse element of the Clifford algebra in the sorted-monomial basis; the
// key's bit i marks generator i, factors in increasing label order.
class Cliff {
 public:
  Cliff(QuadSpacePtr space, std::map<std::uint32_t, Elem> terms);

  static Cliff zero(QuadSpacePtr space);
  static Cliff scalar(QuadSpacePtr space, const Elem& v);
  static Cliff one(QuadSpacePtr space);
  static Cliff gen(QuadSpacePtr space, int i);
  static Cliff vector(QuadSpacePtr space, const std::vector<Elem>& coords);

  const QuadSpacePtr& space() const { return space_; }
  const std::map<std::uint32_t, Elem>& terms() const { return terms_; }

  Cliff operator+(const Cliff& o) const;
  Cliff operator-(const Cliff& o) const;
  Cliff operator-() const;
  Cliff operator*(const Cliff& o) const;
  Cliff scaled(const Elem& k) const;
  bool operator==(const Cliff& o) const;
  bool operator!=(const Cliff& o) const { return !(*this == o); }

  bool is_even() const;
  bool is_scalar() const;
  Elem scalar_part() const;

  // degree-1 coordinates if the element lies in the generating module
  std::optional<std::vector<Elem>> as_vector() const;

  std::string str() const;

 private:
  QuadSpacePtr space_;
  std::map<std::uint32_t, Elem> terms_;  // no zero coefficients
};

// anti-automorphism reversing monomials, trivial on the module
Cliff main_involution(const Cliff& a);

// invertible even element with alpha(g) g = g alpha(g) = 1 whose
// conjugation preserves the generating module
bool spin_check(const Cliff& g);

// coordinates of g m g^{-1}; requires spin_check(g)
std::vector<Elem> conjugate_vector(const Cliff& g, const std::vector<Elem>& m);

}  // namespace weylkit

#endif
