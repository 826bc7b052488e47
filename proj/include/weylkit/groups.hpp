#ifndef WEYLKIT_GROUPS_HPP_
#define WEYLKIT_GROUPS_HPP_

#include <array>
#include <variant>

#include "weylkit/clifford.hpp"
#include "weylkit/freudenthal.hpp"
#include "weylkit/matrix.hpp"

namespace weylkit {

enum class RealKind { SL, Sp, SpinB, SpinD1, SpinDd, E7, SO3adj, SL3BC1 };

// 2-step parameter of the ultrashort root subgroup in the SL3 model; the
// middle coordinate is central.
struct Triple {
  Elem x, y, z;
  bool operator==(const Triple& o) const { return x == o.x && y == o.y && z == o.z; }
  bool operator!=(const Triple& o) const { return !(*this == o); }
};

// Root-subgroup parameter: matrix (SL/Sp/SpinDd), module vector
// (SpinB/SpinD1), Albert element (E7), scalar (SO3adj) or triple (SL3BC1).
using Param = std::variant<Matrix, std::vector<Elem>, Albert, Elem, Triple>;

struct GroupElement {
  std::variant<Matrix, Cliff, FAutomorphism> payload;

  const Matrix& mat() const { return std::get<Matrix>(payload); }
  const Cliff& cliff() const { return std::get<Cliff>(payload); }
  const FAutomorphism& fauto() const { return std::get<FAutomorphism>(payload); }
  bool operator==(const GroupElement& o) const;
  bool operator!=(const GroupElement& o) const { return !(*this == o); }
  std::string str() const;
};

class Realization {
 public:
  // size is d for SL/Sp/SpinDd, n for SpinB/SpinD1, ignored otherwise
  static Realization make(RealKind kind, int size, const Ring& R);
  static Realization parse(const std::string& selector, const Ring& R);  // e.g. "sl:2"

  RealKind kind() const { return kind_; }
  int size() const { return size_; }
  const Ring& ring() const { return ring_; }
  const QuadSpacePtr& space() const { return space_; }
  std::string name() const;

  GroupElement identity() const;
  GroupElement mul(const GroupElement& a, const GroupElement& b) const;
  GroupElement inverse(const GroupElement& a) const;

  GroupElement root_element(int sign, const Param& p) const;
  GroupElement torus_element(const Elem& lambda) const;

  bool in_parabolic(const GroupElement& g, int sign) const;
  bool is_member(const GroupElement& g) const;

  // parameter-module helpers
  Param zero_param() const;
  Param one_param() const;  // a canonical nonzero point (identity matrix, 1, ...)
  Param sample_param(Rng& rng) const;
  // parameter-group operation of U_sign; sign only matters for the 2-step
  // SL3BC1 module, where the central correction follows the triangle side
  Param param_add(const Param& p, const Param& q, int sign = 1) const;
  Param param_neg(const Param& p, int sign = 1) const;
  Param param_scale(const Param& p, const Elem& k) const;
  bool param_eq(const Param& p, const Param& q) const;
  std::string param_str(const Param& p) const;
  void validate_param(const Param& p) const;
  Param parse_param(const std::string& text) const;

  // unit condition making t_+(x) a Weyl factor in this realization
  bool constructible(const Param& x) const;
  // the matching middle factor: -x^{-1} or q0(x)^{-1} x
  Param weyl_partner(const Param& x) const;

  // parameter of a unipotent element, if g lies in U_sign
  std::optional<Param> unipotent_param(const GroupElement& g, int sign) const;

  // q0 for the Spin kinds (on M0 coordinates)
  Elem m0_q(const std::vector<Elem>& coords) const;
  Elem m0_b(const std::vector<Elem>& x, const std::vector<Elem>& y) const;

  int m0_rank() const;

 private:
  Realization(RealKind k, int s, Ring R) : kind_(k), size_(s), ring_(std::move(R)) {}
  RealKind kind_;
  int size_;
  Ring ring_;
  QuadSpacePtr space_;  // Spin kinds only

  Matrix sl_block(int sign, const Matrix& p) const;
  std::vector<Elem> m0_to_full(const std::vector<Elem>& coords) const;
  std::vector<Elem> full_to_m0(const std::vector<Elem>& coords) const;
};

}  // namespace weylkit

#endif
