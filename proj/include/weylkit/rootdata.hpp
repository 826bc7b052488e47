#ifndef WEYLKIT_ROOTDATA_HPP_
#define WEYLKIT_ROOTDATA_HPP_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "weylkit/ring.hpp"

namespace weylkit {

// Root coordinates scaled by 2, so half-integer entries stay integral.
using Root = std::vector<long>;

long dot_x4(const Root& a, const Root& b);
bool is_zero_root(const Root& a);
Root negate(const Root& a);
Root add(const Root& a, const Root& b);
std::string root_str(const Root& a);

// s_alpha(beta) = beta - <beta, alpha^vee> alpha
Root reflect(const Root& alpha, const Root& beta);

// <beta, alpha^vee> = 2 (alpha . beta) / (alpha . alpha); always an integer
// for roots of a crystallographic system.
long coroot_pairing(const Root& beta, const Root& alpha);

// 2 alpha / (alpha . alpha)
Root coroot(const Root& alpha);

enum class RootType { A, B, C, D, BC, E7 };

struct RootSystem {
  RootType type;
  int rank;
  int ambient;
  std::vector<Root> roots;
  std::set<Root> root_set;

  bool contains(const Root& r) const { return root_set.count(r) != 0; }
};

RootSystem build_root_system(RootType type, int rank);

bool is_closed_subsystem(const std::vector<Root>& psi, const RootSystem& phi);

// Rational degree per ambient coordinate; a root's grade is the linear
// extension evaluated on its coordinates.
struct GradingFunction {
  std::vector<Elem> deg;  // over Ring::rationals()

  Elem grade(const Root& r) const;
  long grade_int(const Root& r) const;  // throws InternalError if fractional
};

enum class TitsFamily { A1Inner, A2Outer, B, C, D1, D2, E7 };

struct TitsIndexId {
  TitsFamily family;
  int d = 0;
  int n = 0;

  static TitsIndexId parse(const std::string& text, int d, int n);
  std::string str() const;
};

// A validated Tits-index instance: absolute root system plus grading.
// table is 1 for relative type A1 and 2 for relative type BC1.
struct GradedIndex {
  TitsIndexId id;
  RootSystem system;
  GradingFunction grading;
  int table = 0;
};

GradedIndex build_graded_index(const TitsIndexId& id);

std::map<long, std::vector<Root>> grading_layers(const GradedIndex& gi);

struct LemmaWitness {
  Root alpha;
  Root beta;
  std::optional<Root> gamma;
};

struct LemmaReport {
  bool applicable = false;
  std::string reason;  // set when not applicable
  bool pass = false;
  std::vector<LemmaWitness> witnesses;
  std::vector<Root> gaps;  // alphas with no admissible witness
};

// Witness predicates shared by the exhaustive checks and the table tests.
bool lemma3_witness_ok(const GradedIndex& gi, const Root& alpha, const Root& beta);
bool lemma5_witness_ok(const GradedIndex& gi, const Root& alpha, const Root& beta,
                       const Root& gamma);

LemmaReport check_lemma_nondeg3(const TitsIndexId& id);
LemmaReport check_lemma_nondeg5(const TitsIndexId& id);

}  // namespace weylkit

#endif
