#ifndef WEYLKIT_WEYL_HPP_
#define WEYLKIT_WEYL_HPP_

#include "weylkit/groups.hpp"
#include "weylkit/rootdata.hpp"

namespace weylkit {

// Closed-form Weyl-triple criterion of the realization, cross-checked
// extensionally by conjugating sampled root elements into the opposite
// subgroup. Throws InternalError when the two routes disagree.
bool is_weyl_triple(const Realization& R, const Param& x, const Param& y, const Param& z,
                    int trials, Rng& rng);

// w = t_+(x) t_-(y) t_+(x) with y the realization's partner of x, when the
// unit condition holds.
std::optional<GroupElement> build_weyl(const Realization& R, const Param& x);

// The unique completion (t_-(y), t_+(z)) of t_+(x) to a Weyl triple.
std::optional<std::pair<Param, Param>> unique_extension(const Realization& R, const Param& x);

// Parameter f(p) with w t_sign(p) w^{-1} = t_{-sign}(f(p)), extracted from
// the realization and verified against the closed form for x.
Param weyl_conjugate_root(const Realization& R, const GroupElement& w, const Param& x, int sign,
                          const Param& p);
// same, with the inverse of w precomputed by the caller
Param weyl_conjugate_root(const Realization& R, const GroupElement& w, const GroupElement& w_inv,
                          const Param& x, int sign, const Param& p);

// The central element alpha_vee(-1) in the realization's model.
GroupElement alpha_vee_minus_one(const Realization& R);

struct WeylSquareResult {
  GroupElement square;
  bool canonical;  // equals alpha_vee(-1)
  bool central;    // commutes with sampled root elements
};
WeylSquareResult weyl_square(const Realization& R, const Param& x, int trials, Rng& rng);

struct IdentityCheckResult {
  bool inverse_factorization;  // w^{-1} = g3^{-1} g2^{-1} g1^{-1}, again a Weyl triple
  bool refactor_left;          // w = g2 g3 (g1 conjugated by w)
  bool refactor_right;         // w = (g3 conjugated by w) g1 g2
  bool torus_inversion;        // w T(lam) w^{-1} = T(lam^{-1})
  bool pass() const {
    return inverse_factorization && refactor_left && refactor_right && torus_inversion;
  }
};
IdentityCheckResult weyl_identities_check(const Realization& R, const Param& x, int trials,
                                          Rng& rng);

// Square formula in the rank-2 playgrounds.
struct SquareFormulaPairResult {
  Root alpha, beta;
  long parity;
  std::string case_tag;  // even | odd-reduced | odd-doubled
  bool pass;
};
std::vector<SquareFormulaPairResult> square_formula_check_sl3(const Ring& R, int trials,
                                                              std::uint64_t seed);
std::vector<SquareFormulaPairResult> square_formula_check_bc1(const Ring& R, int trials,
                                                              std::uint64_t seed);

struct BraidCheckResult {
  bool braid_m3;       // w_a w_b w_a = w_b w_a w_b in SL(3), sampled unit parameters
  bool commute_m2;     // orthogonal roots commute in SL(4)
  bool parameter_free; // no sampled parameter pair violated the relation
};
BraidCheckResult braid_check_sl3(const Ring& R, int trials, std::uint64_t seed);

struct So3NormalizerResult {
  bool predicate_matches;   // t_-(a) normalizes U_+ iff a^2 = 2a = 0, on samples
  bool displayed_w;         // product matches the displayed w matrix
  bool displayed_w_square;  // and its square
  bool found_nontrivial;    // some a != 0 qualified (2-torsion rings only)
};
So3NormalizerResult so3_normalizer_check(const Ring& R, int trials, std::uint64_t seed);

struct Bc1Result {
  bool constructible;       // x y z - y^2 is a unit
  bool weyl_extensional;    // w swaps the unipotent subgroups on samples
  bool displayed_w;         // product matches the displayed w
  bool displayed_w_square;  // and the displayed diagonal square
  bool square_central;      // w^2 commutes with sampled root elements
  std::string w_str, w_sq_str;
};
Bc1Result bc1_counterexample(const Ring& R, const Elem& x, const Elem& y, const Elem& z,
                             int trials, std::uint64_t seed);

}  // namespace weylkit

#endif
