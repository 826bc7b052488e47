#include "weylkit/rootdata.hpp"

#include <algorithm>
#include <sstream>

#include "weylkit/matrix.hpp"

namespace weylkit {

long dot_x4(const Root& a, const Root& b) {
  if (a.size() != b.size()) throw UsageError("roots from different ambient spaces");
  long s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero_root(const Root& a) {
  return std::all_of(a.begin(), a.end(), [](long c) { return c == 0; });
}

Root negate(const Root& a) {
  Root r(a);
  for (auto& c : r) c = -c;
  return r;
}

Root add(const Root& a, const Root& b) {
  if (a.size() != b.size()) throw UsageError("roots from different ambient spaces");
  Root r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

std::string root_str(const Root& a) {
  std::ostringstream out;
  out << "(";
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) out << ",";
    if (a[i] % 2 == 0)
      out << a[i] / 2;
    else
      out << a[i] << "/2";
  }
  out << ")";
  return out.str();
}

long coroot_pairing(const Root& beta, const Root& alpha) {
  if (is_zero_root(alpha)) throw UsageError("zero root in coroot pairing");
  long num = 2 * dot_x4(alpha, beta);
  long den = dot_x4(alpha, alpha);
  if (num % den != 0)
    throw InternalError("non-integer coroot pairing: crystallographic invariant violated for " +
                        root_str(alpha) + ", " + root_str(beta));
  return num / den;
}

Root reflect(const Root& alpha, const Root& beta) {
  if (is_zero_root(alpha)) throw UsageError("reflection in a zero root");
  long k = coroot_pairing(beta, alpha);
  Root r(beta);
  for (size_t i = 0; i < r.size(); ++i) r[i] -= k * alpha[i];
  return r;
}

Root coroot(const Root& alpha) {
  if (is_zero_root(alpha)) throw UsageError("coroot of the zero vector");
  long den = dot_x4(alpha, alpha);
  Root r(alpha);
  for (auto& c : r) {
    long num = 8 * c;
    if (num % den != 0) throw InternalError("coroot leaves the denominator-2 lattice");
    c = num / den;
  }
  return r;
}

namespace {

Root unit_x2(int ambient, int i, long value_x2) {
  Root r(static_cast<size_t>(ambient), 0);
  r[static_cast<size_t>(i)] = value_x2;
  return r;
}

void push(std::vector<Root>& out, Root r) { out.push_back(std::move(r)); }

std::vector<Root> e7_roots() {
  std::vector<Root> out;
  // +-e_i +- e_j for 0 <= i < j <= 5
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      for (long si : {2L, -2L})
        for (long sj : {2L, -2L}) {
          Root r(8, 0);
          r[static_cast<size_t>(i)] = si;
          r[static_cast<size_t>(j)] = sj;
          push(out, r);
        }
  // +-(e_7 - e_8)
  {
    Root r(8, 0);
    r[6] = 2;
    r[7] = -2;
    push(out, r);
    push(out, negate(r));
  }
  // (1/2)(sum eps_i e_i + s e_7 - s e_8), eps in {+-1}^6 with product -1
  for (long s : {1L, -1L})
    for (int mask = 0; mask < 64; ++mask) {
      int minus = __builtin_popcount(static_cast<unsigned>(mask));
      if (minus % 2 == 0) continue;
      Root r(8, 0);
      for (int i = 0; i < 6; ++i) r[static_cast<size_t>(i)] = (mask >> i) & 1 ? -1 : 1;
      r[6] = s;
      r[7] = -s;
      push(out, r);
    }
  return out;
}

}  // namespace

RootSystem build_root_system(RootType type, int rank) {
  RootSystem rs;
  rs.type = type;
  rs.rank = rank;
  int max_rank = type == RootType::A ? 12 : 11;
  if (type != RootType::E7 && (rank < 1 || rank > max_rank))
    throw ConfigError("unsupported rank " + std::to_string(rank));
  switch (type) {
    case RootType::A: {
      rs.ambient = rank + 1;
      for (int i = 0; i <= rank; ++i)
        for (int j = 0; j <= rank; ++j)
          if (i != j) push(rs.roots, add(unit_x2(rs.ambient, i, 2), unit_x2(rs.ambient, j, -2)));
      break;
    }
    case RootType::B:
    case RootType::C:
    case RootType::D:
    case RootType::BC: {
      rs.ambient = rank;
      if (type == RootType::D && rank < 2) throw ConfigError("type D needs rank >= 2");
      for (int i = 0; i < rank; ++i)
        for (int j = i + 1; j < rank; ++j)
          for (long si : {2L, -2L})
            for (long sj : {2L, -2L})
              push(rs.roots, add(unit_x2(rank, i, si), unit_x2(rank, j, sj)));
      if (type == RootType::B || type == RootType::BC)
        for (int i = 0; i < rank; ++i) {
          push(rs.roots, unit_x2(rank, i, 2));
          push(rs.roots, unit_x2(rank, i, -2));
        }
      if (type == RootType::C || type == RootType::BC)
        for (int i = 0; i < rank; ++i) {
          push(rs.roots, unit_x2(rank, i, 4));
          push(rs.roots, unit_x2(rank, i, -4));
        }
      break;
    }
    case RootType::E7: {
      if (rank != 7) throw ConfigError("type E7 has rank 7");
      rs.ambient = 8;
      rs.roots = e7_roots();
      break;
    }
  }
  rs.root_set.insert(rs.roots.begin(), rs.roots.end());
  if (rs.root_set.size() != rs.roots.size()) throw InternalError("duplicate roots generated");
  return rs;
}

bool is_closed_subsystem(const std::vector<Root>& psi, const RootSystem& phi) {
  std::set<Root> pset(psi.begin(), psi.end());
  for (const auto& a : psi)
    if (!phi.contains(a)) throw UsageError("subset is not contained in the root system");
  for (const auto& a : psi)
    if (!pset.count(negate(a))) return false;
  for (const auto& a : psi)
    for (const auto& b : psi) {
      Root s = add(a, b);
      if (phi.contains(s) && !pset.count(s)) return false;
    }
  return true;
}

Elem GradingFunction::grade(const Root& r) const {
  if (r.size() != deg.size()) throw UsageError("root does not match grading dimension");
  Ring Q = Ring::rationals();
  Elem half = Q.parse_scalar("1/2");
  Elem acc = Q.zero();
  for (size_t i = 0; i < r.size(); ++i) acc += deg[i] * Q.from_int(r[i]) * half;
  return acc;
}

long GradingFunction::grade_int(const Root& r) const {
  Elem g = grade(r);
  Ring Q = Ring::rationals();
  for (long k = -4; k <= 4; ++k)
    if (g == Q.from_int(k)) return k;
  throw InternalError("grade of " + root_str(r) + " is not a small integer: " + g.str());
}

TitsIndexId TitsIndexId::parse(const std::string& text, int d, int n) {
  TitsIndexId id;
  id.d = d;
  id.n = n;
  if (text == "1A")
    id.family = TitsFamily::A1Inner;
  else if (text == "2A")
    id.family = TitsFamily::A2Outer;
  else if (text == "B")
    id.family = TitsFamily::B;
  else if (text == "C")
    id.family = TitsFamily::C;
  else if (text == "1D")
    id.family = TitsFamily::D1;
  else if (text == "2D")
    id.family = TitsFamily::D2;
  else if (text == "E7" || text == "e7")
    id.family = TitsFamily::E7;
  else
    throw ConfigError("unknown Tits index family '" + text +
                      "' (exceptional BC1 indices are out of scope here)");
  return id;
}

std::string TitsIndexId::str() const {
  std::ostringstream out;
  switch (family) {
    case TitsFamily::A1Inner: out << "1A(" << d << ")_{" << 2 * d - 1 << ",1}"; break;
    case TitsFamily::A2Outer: out << "2A(" << d << ")_{" << n << ",1}"; break;
    case TitsFamily::B: out << "B_{" << n << ",1}"; break;
    case TitsFamily::C: out << "C(" << d << ")_{" << n << ",1}"; break;
    case TitsFamily::D1: out << "1D(" << d << ")_{" << n << ",1}"; break;
    case TitsFamily::D2: out << "2D(" << d << ")_{" << n << ",1}"; break;
    case TitsFamily::E7: out << "E7_{7,1}^{78}"; break;
  }
  return out.str();
}

namespace {

bool power_of_two(int v) { return v >= 1 && (v & (v - 1)) == 0; }

std::vector<Elem> constant_deg(int ambient, const char* frac) {
  Ring Q = Ring::rationals();
  return std::vector<Elem>(static_cast<size_t>(ambient), Q.parse_scalar(frac));
}

std::vector<Elem> step_deg(int ambient, int low_count, const char* low, const char* high) {
  Ring Q = Ring::rationals();
  std::vector<Elem> deg;
  for (int i = 0; i < ambient; ++i) deg.push_back(Q.parse_scalar(i < low_count ? low : high));
  return deg;
}

GradedIndex build_e7_index(const TitsIndexId& id) {
  GradedIndex gi;
  gi.id = id;
  gi.table = 1;
  gi.system = build_root_system(RootType::E7, 7);
  // positive roots under a generic functional with base-5 weights
  auto key = [](const Root& r) {
    long s = 0, p = 1;
    for (long c : r) {
      s += p * c;
      p *= 5;
    }
    return s;
  };
  std::vector<Root> pos;
  for (const auto& r : gi.system.roots)
    if (key(r) > 0) pos.push_back(r);
  std::set<Root> posset(pos.begin(), pos.end());
  std::vector<Root> simple;
  for (const auto& a : pos) {
    bool decomposable = false;
    for (const auto& b : pos) {
      if (b == a) continue;
      Root c(a);
      for (size_t i = 0; i < c.size(); ++i) c[i] -= b[i];
      if (posset.count(c)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) simple.push_back(a);
  }
  if (simple.size() != 7) throw InternalError("E7 base has wrong size");

  // Fundamental coweights solve (x2 . w) = 2 delta_ij inside the span of
  // the roots; the span's complement is the e7+e8 line.
  Ring Q = Ring::rationals();
  Matrix m(Q, 8, 8);
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 8; ++j) m.at(i, j) = Q.from_int(simple[static_cast<size_t>(i)][static_cast<size_t>(j)]);
  m.at(7, 6) = Q.from_int(2);
  m.at(7, 7) = Q.from_int(2);
  auto minv = m.try_inverse();
  if (!minv) throw InternalError("E7 base matrix is singular");

  int found = -1;
  std::vector<Elem> chosen;
  for (int j = 0; j < 7; ++j) {
    std::vector<Elem> w;
    for (int i = 0; i < 8; ++i) w.push_back(minv->at(i, j) * Q.from_int(2));
    GradingFunction g{w};
    bool ok = true;
    bool has_plus = false;
    for (const auto& r : gi.system.roots) {
      Elem gr = g.grade(r);
      if (gr == Q.one())
        has_plus = true;
      else if (!(gr.is_zero() || gr == Q.from_int(-1))) {
        ok = false;
        break;
      }
    }
    if (ok && has_plus) {
      if (found >= 0) throw InternalError("E7 3-grading is not unique among fundamental coweights");
      found = j;
      chosen = w;
    }
  }
  if (found < 0) throw InternalError("no 3-grading coweight found for E7");
  gi.grading.deg = chosen;
  return gi;
}

}  // namespace

GradedIndex build_graded_index(const TitsIndexId& id) {
  GradedIndex gi;
  gi.id = id;
  const int d = id.d, n = id.n;
  switch (id.family) {
    case TitsFamily::A1Inner: {
      if (d < 1 || d > 6) throw ConfigError("1A needs 1 <= d <= 6");
      gi.system = build_root_system(RootType::A, 2 * d - 1);
      gi.grading.deg = step_deg(2 * d, d, "-1/2", "1/2");
      gi.table = 1;
      break;
    }
    case TitsFamily::A2Outer: {
      if (d < 1) throw ConfigError("2A needs d >= 1");
      if (n == 2 * d - 1) {
        if (d < 2) throw ConfigError("2A table-1 form needs d >= 2");
        gi.system = build_root_system(RootType::A, n);
        gi.grading.deg = step_deg(n + 1, d, "-1/2", "1/2");
        gi.table = 1;
      } else {
        if ((n + 1) % d != 0 || 2 * d > n)
          throw ConfigError("2A(d)_{n,1} needs d | n+1 and 2d <= n");
        gi.system = build_root_system(RootType::A, n);
        Ring Q = Ring::rationals();
        std::vector<Elem> deg;
        for (int i = 0; i <= n; ++i) deg.push_back(Q.from_int(i < d ? -1 : (i <= n - d ? 0 : 1)));
        gi.grading.deg = deg;
        gi.table = 2;
      }
      break;
    }
    case TitsFamily::B: {
      if (n < 1) throw ConfigError("B needs n >= 1");
      gi.system = build_root_system(RootType::B, n);
      gi.grading.deg = step_deg(n, n - 1, "0", "1");
      gi.table = 1;
      break;
    }
    case TitsFamily::C: {
      if (!power_of_two(d)) throw ConfigError("C(d) needs d a power of two");
      if (n == 0 || n == d) {
        gi.system = build_root_system(RootType::C, d);
        gi.grading.deg = constant_deg(d, "1/2");
        gi.table = 1;
      } else {
        if (d < 2 || (2 * n) % d != 0 || d + 1 > n)
          throw ConfigError("C(d)_{n,1} needs 2 <= d = 2^k | 2n and d+1 <= n");
        gi.system = build_root_system(RootType::C, n);
        gi.grading.deg = step_deg(n, n - d, "0", "1");
        gi.table = 2;
      }
      break;
    }
    case TitsFamily::D1:
    case TitsFamily::D2: {
      bool inner = id.family == TitsFamily::D1;
      if (inner && d == n && d != 1) {
        if (!power_of_two(d) || d < 4) throw ConfigError("1D(d)_{d,1} needs d = 2^k >= 4");
        gi.system = build_root_system(RootType::D, d);
        gi.grading.deg = constant_deg(d, "1/2");
        gi.table = 1;
      } else if (d == 1) {
        if (n < 3) throw ConfigError("D(1)_{n,1} needs n >= 3");
        gi.system = build_root_system(RootType::D, n);
        gi.grading.deg = step_deg(n, n - 1, "0", "1");
        gi.table = 1;
      } else {
        int min_n = inner ? d + 2 : d + 1;
        if (d < 2 || !power_of_two(d) || (2 * n) % d != 0 || n < min_n)
          throw ConfigError(id.str() + " parameter restrictions violated");
        gi.system = build_root_system(RootType::D, n);
        gi.grading.deg = step_deg(n, n - d, "0", "1");
        gi.table = 2;
      }
      break;
    }
    case TitsFamily::E7: return build_e7_index(id);
  }
  return gi;
}

std::map<long, std::vector<Root>> grading_layers(const GradedIndex& gi) {
  std::map<long, std::vector<Root>> layers;
  for (const auto& r : gi.system.roots) layers[gi.grading.grade_int(r)].push_back(r);
  long bound = gi.table == 1 ? 1 : 2;
  for (const auto& [g, v] : layers) {
    (void)v;
    if (g < -bound || g > bound)
      throw InternalError("grade " + std::to_string(g) + " out of range for " + gi.id.str());
  }
  return layers;
}

bool lemma3_witness_ok(const GradedIndex& gi, const Root& alpha, const Root& beta) {
  if (!gi.system.contains(alpha) || !gi.system.contains(beta)) return false;
  if (gi.grading.grade_int(beta) != 1) return false;
  if (!gi.system.contains(add(alpha, beta))) return false;
  return dot_x4(alpha, beta) != 0;
}

bool lemma5_witness_ok(const GradedIndex& gi, const Root& alpha, const Root& beta,
                       const Root& gamma) {
  if (!gi.system.contains(alpha) || !gi.system.contains(beta) || !gi.system.contains(gamma))
    return false;
  if (gi.grading.grade_int(alpha) != -1) return false;
  if (gi.grading.grade_int(beta) != 2 || gi.grading.grade_int(gamma) != 1) return false;
  if (!gi.system.contains(add(alpha, beta)) || !gi.system.contains(add(alpha, gamma))) return false;
  if (dot_x4(alpha, beta) == 0 || dot_x4(alpha, gamma) == 0) return false;
  // alpha+gamma must be a sum of a grade -2 root and a grade 2 root
  auto layers = grading_layers(gi);
  Root target = add(alpha, gamma);
  for (const auto& dlt : layers[-2])
    for (const auto& eps : layers[2])
      if (add(dlt, eps) == target) return true;
  return false;
}

LemmaReport check_lemma_nondeg3(const TitsIndexId& id) {
  LemmaReport rep;
  GradedIndex gi = build_graded_index(id);
  if (gi.table != 1) {
    rep.reason = "relative type is BC1; the 3-graded lemma does not apply";
    return rep;
  }
  bool excluded = (id.family == TitsFamily::A1Inner && id.d == 1) ||
                  (id.family == TitsFamily::B && id.n == 1) ||
                  (id.family == TitsFamily::C && id.d == 1);
  if (excluded) {
    rep.reason = "index 1A(1)_{1,1} ~ B_{1,1} ~ C(1)_{1,1} is excluded";
    return rep;
  }
  rep.applicable = true;
  auto layers = grading_layers(gi);
  rep.pass = true;
  for (long g : {-1L, 0L}) {
    for (const auto& alpha : layers[g]) {
      bool found = false;
      for (const auto& beta : layers[1]) {
        if (lemma3_witness_ok(gi, alpha, beta)) {
          rep.witnesses.push_back({alpha, beta, std::nullopt});
          found = true;
          break;
        }
      }
      if (!found) {
        rep.pass = false;
        rep.gaps.push_back(alpha);
      }
    }
  }
  return rep;
}

LemmaReport check_lemma_nondeg5(const TitsIndexId& id) {
  LemmaReport rep;
  GradedIndex gi = build_graded_index(id);
  if (gi.table != 2) {
    rep.reason = "relative type is A1; the 5-graded lemma does not apply";
    return rep;
  }
  auto layers = grading_layers(gi);
  if (layers[2].size() < 2) {
    rep.reason = "layer 2 has fewer than two roots";
    return rep;
  }
  rep.applicable = true;
  rep.pass = true;
  for (const auto& alpha : layers[-1]) {
    std::optional<Root> beta_found;
    for (const auto& beta : layers[2])
      if (gi.system.contains(add(alpha, beta)) && dot_x4(alpha, beta) != 0) {
        beta_found = beta;
        break;
      }
    std::optional<Root> gamma_found;
    if (beta_found)
      for (const auto& gamma : layers[1])
        if (lemma5_witness_ok(gi, alpha, *beta_found, gamma)) {
          gamma_found = gamma;
          break;
        }
    if (beta_found && gamma_found) {
      rep.witnesses.push_back({alpha, *beta_found, gamma_found});
    } else {
      rep.pass = false;
      rep.gaps.push_back(alpha);
    }
  }
  return rep;
}

}  // namespace weylkit
