#include "weylkit/weyl.hpp"

namespace weylkit {

namespace {

bool weyl_criterion(const Realization& R, const Param& x, const Param& y, const Param& z) {
  switch (R.kind()) {
    case RealKind::SL:
    case RealKind::Sp:
    case RealKind::SpinDd:
    case RealKind::SpinB:
    case RealKind::SpinD1:
    case RealKind::E7: {
      if (!R.param_eq(x, z)) return false;
      if (!R.constructible(x)) return false;
      return R.param_eq(y, R.weyl_partner(x));
    }
    case RealKind::SO3adj: {
      const Elem& b = std::get<Elem>(y);
      auto bi = try_invert(b);
      if (!bi) return false;
      Elem x0 = -*bi;
      Elem u = std::get<Elem>(x) - x0, v = std::get<Elem>(z) - x0;
      return (u * u).is_zero() && (u + u).is_zero() && (v * v).is_zero() && (v + v).is_zero();
    }
    case RealKind::SL3BC1: {
      const Triple &a = std::get<Triple>(x), &b = std::get<Triple>(y), &c = std::get<Triple>(z);
      if (!is_unit(a.x * a.y * a.z - a.y * a.y)) return false;
      Elem yi = invert(a.y);
      Elem d = a.x * a.z - a.y;
      Elem di = invert(d);
      return b.x == -(a.z * di) && b.y == di && b.z == -(a.x * yi) && c.x == a.x * d * yi &&
             c.y == a.y && c.z == a.y * a.z * di;
    }
  }
  throw InternalError("unreachable realization kind");
}

bool weyl_extensional(const Realization& R, const GroupElement& w, int trials, Rng& rng) {
  GroupElement wi = R.inverse(w);
  std::vector<Param> probes = {R.one_param()};
  for (int i = 0; i < trials; ++i) probes.push_back(R.sample_param(rng));
  for (const Param& p : probes) {
    GroupElement cp = R.mul(R.mul(w, R.root_element(1, p)), wi);
    if (!R.unipotent_param(cp, -1)) return false;
    GroupElement cm = R.mul(R.mul(w, R.root_element(-1, p)), wi);
    if (!R.unipotent_param(cm, 1)) return false;
  }
  return true;
}

std::pair<Param, Param> bc1_completion(const Realization& R, const Triple& a) {
  Elem yi = invert(a.y);
  Elem d = a.x * a.z - a.y;
  Elem di = invert(d);
  Triple p2{-(a.z * di), di, -(a.x * yi)};
  Triple p3{a.x * d * yi, a.y, a.y * a.z * di};
  (void)R;
  return {p2, p3};
}

}  // namespace

bool is_weyl_triple(const Realization& R, const Param& x, const Param& y, const Param& z,
                    int trials, Rng& rng) {
  bool crit = weyl_criterion(R, x, y, z);
  GroupElement w =
      R.mul(R.mul(R.root_element(1, x), R.root_element(-1, y)), R.root_element(1, z));
  bool ext = weyl_extensional(R, w, trials, rng);
  if (crit != ext)
    throw InternalError("Weyl criterion and extensional check disagree on " + R.name() +
                        " for x=" + R.param_str(x) + " y=" + R.param_str(y) +
                        " z=" + R.param_str(z));
  return crit;
}

std::optional<GroupElement> build_weyl(const Realization& R, const Param& x) {
  if (!R.constructible(x)) return std::nullopt;
  if (R.kind() == RealKind::SL3BC1) {
    auto [p2, p3] = bc1_completion(R, std::get<Triple>(x));
    return R.mul(R.mul(R.root_element(1, x), R.root_element(-1, p2)), R.root_element(1, p3));
  }
  Param y = R.weyl_partner(x);
  return R.mul(R.mul(R.root_element(1, x), R.root_element(-1, y)), R.root_element(1, x));
}

std::optional<std::pair<Param, Param>> unique_extension(const Realization& R, const Param& x) {
  if (!R.constructible(x)) return std::nullopt;
  if (R.kind() == RealKind::SL3BC1) return bc1_completion(R, std::get<Triple>(x));
  return std::make_pair(R.weyl_partner(x), x);
}

namespace {

Param conjugation_closed_form(const Realization& R, const Param& x, int sign, const Param& p) {
  switch (R.kind()) {
    case RealKind::SL:
    case RealKind::Sp:
    case RealKind::SpinDd: {
      const Matrix& xm = std::get<Matrix>(x);
      const Matrix& pm = std::get<Matrix>(p);
      if (sign > 0) {
        Matrix xi = *xm.try_inverse();
        return -(xi * pm * xi);
      }
      return -(xm * pm * xm);
    }
    case RealKind::SpinB:
    case RealKind::SpinD1: {
      const auto& xv = std::get<std::vector<Elem>>(x);
      const auto& pv = std::get<std::vector<Elem>>(p);
      Elem q0 = R.m0_q(xv);
      Elem b = R.m0_b(xv, pv);
      std::vector<Elem> out;
      if (sign > 0) {
        Elem qi = invert(q0);
        Elem coef = qi * qi * b;
        for (size_t k = 0; k < xv.size(); ++k) out.push_back(coef * xv[k] - qi * pv[k]);
      } else {
        for (size_t k = 0; k < xv.size(); ++k) out.push_back(b * xv[k] - q0 * pv[k]);
      }
      return out;
    }
    case RealKind::E7: {
      const Albert& xa = std::get<Albert>(x);
      const Albert& pa = std::get<Albert>(p);
      if (sign > 0) return -u_operator(*albert_try_invert(xa), pa);
      return -u_operator(xa, pa);
    }
    case RealKind::SO3adj: {
      const Elem& xe = std::get<Elem>(x);
      const Elem& pe = std::get<Elem>(p);
      Elem xi = invert(xe);
      if (sign > 0) return -(xi * xi * pe);
      return -(xe * xe * pe);
    }
    case RealKind::SL3BC1:
      throw UsageError("no closed conjugation form for the ultrashort model");
  }
  throw InternalError("unreachable realization kind");
}

}  // namespace

Param weyl_conjugate_root(const Realization& R, const GroupElement& w, const Param& x, int sign,
                          const Param& p) {
  return weyl_conjugate_root(R, w, R.inverse(w), x, sign, p);
}

Param weyl_conjugate_root(const Realization& R, const GroupElement& w, const GroupElement& w_inv,
                          const Param& x, int sign, const Param& p) {
  GroupElement conj = R.mul(R.mul(w, R.root_element(sign, p)), w_inv);
  auto extracted = R.unipotent_param(conj, -sign);
  if (!extracted)
    throw InternalError("Weyl conjugate of a root element is not in the opposite subgroup");
  Param closed = conjugation_closed_form(R, x, sign, p);
  if (!R.param_eq(*extracted, closed))
    throw InternalError("extracted Weyl action disagrees with the closed form on " + R.name() +
                        ": got " + R.param_str(*extracted) + ", closed form " +
                        R.param_str(closed));
  return *extracted;
}

GroupElement alpha_vee_minus_one(const Realization& R) {
  const Ring& ring = R.ring();
  switch (R.kind()) {
    case RealKind::SL:
    case RealKind::Sp: return {-Matrix::identity(ring, 2 * R.size())};
    case RealKind::SpinB:
    case RealKind::SpinD1: return {Cliff::scalar(R.space(), ring.from_int(-1))};
    case RealKind::SpinDd: {
      int d = R.size();
      Cliff acc = Cliff::one(R.space());
      for (int i = 0; i < d; ++i) {
        Cliff emi = Cliff::gen(R.space(), i), epi = Cliff::gen(R.space(), d + i);
        acc = acc * (emi * epi - epi * emi);
      }
      return {acc};
    }
    case RealKind::E7: return {FAutomorphism::dilation(ring.from_int(-1))};
    case RealKind::SO3adj:
      // adjoint coroot: alpha_vee(t) = diag(t^2, 1, t^-2), so the value is 1
      return {Matrix::identity(ring, 3)};
    case RealKind::SL3BC1:
      throw UsageError("alpha_vee(-1) is not modeled for the ultrashort realization");
  }
  throw InternalError("unreachable realization kind");
}

WeylSquareResult weyl_square(const Realization& R, const Param& x, int trials, Rng& rng) {
  auto w = build_weyl(R, x);
  if (!w) throw UsageError("parameter is not a Weyl factor: " + R.param_str(x));
  GroupElement wsq = R.mul(*w, *w);
  bool canonical = wsq == alpha_vee_minus_one(R);
  bool central = true;
  if (R.kind() == RealKind::E7) {
    // commutation sampled on vectors; the exact statement w^2 = d(-1) is
    // already covered by the canonical comparison
    const FAutomorphism& sq = wsq.fauto();
    for (int i = 0; i < trials && central; ++i) {
      Albert a = albert_sample(R.ring(), rng);
      FVector v = f_sample(R.ring(), rng);
      for (int sign : {1, -1}) {
        FVector lhs = sq.apply(sign > 0 ? t_plus_action(a, v) : t_minus_action(a, v));
        FVector rhs = sign > 0 ? t_plus_action(a, sq.apply(v)) : t_minus_action(a, sq.apply(v));
        if (lhs != rhs) central = false;
      }
    }
  } else {
    for (int i = 0; i < trials && central; ++i) {
      Param p = R.sample_param(rng);
      for (int sign : {1, -1}) {
        GroupElement t = R.root_element(sign, p);
        if (R.mul(wsq, t) != R.mul(t, wsq)) central = false;
      }
    }
  }
  return {wsq, canonical, central};
}

IdentityCheckResult weyl_identities_check(const Realization& R, const Param& x, int trials,
                                          Rng& rng) {
  IdentityCheckResult res{false, false, false, false};
  auto ext = unique_extension(R, x);
  if (!ext) throw UsageError("parameter is not a Weyl factor");
  GroupElement g1 = R.root_element(1, x);
  GroupElement g2 = R.root_element(-1, ext->first);
  GroupElement g3 = R.root_element(1, ext->second);
  GroupElement w = R.mul(R.mul(g1, g2), g3);
  GroupElement wi = R.inverse(w);

  // w^{-1} = g3^{-1} g2^{-1} g1^{-1}, and that triple is Weyl again
  GroupElement wi2 = R.mul(R.mul(R.inverse(g3), R.inverse(g2)), R.inverse(g1));
  bool inverse_ok = wi == wi2;
  if (inverse_ok) {
    Param nx = R.param_neg(ext->second, 1);
    Param ny = R.param_neg(ext->first, -1);
    Param nz = R.param_neg(x, 1);
    inverse_ok = is_weyl_triple(R, nx, ny, nz, trials, rng);
  }
  res.inverse_factorization = inverse_ok;

  // refactorizations w = g2 g3 (g1^w) = (^w g3) g1 g2
  GroupElement g1w = R.mul(R.mul(wi, g1), w);
  res.refactor_left = w == R.mul(R.mul(g2, g3), g1w);
  GroupElement wg3 = R.mul(R.mul(w, g3), wi);
  res.refactor_right = w == R.mul(R.mul(wg3, g1), g2);

  // w inverts the standard torus
  res.torus_inversion = true;
  for (int i = 0; i < trials && res.torus_inversion; ++i) {
    Elem lam = sample_unit(R.ring(), rng);
    GroupElement t = R.torus_element(lam);
    GroupElement conj = R.mul(R.mul(w, t), wi);
    if (conj != R.torus_element(invert(lam))) res.torus_inversion = false;
  }
  return res;
}

namespace {

Matrix elementary(const Ring& R, int n, int i, int j, const Elem& v) {
  Matrix m = Matrix::identity(R, n);
  m.at(i, j) = v;
  return m;
}

Matrix sl_weyl(const Ring& R, int n, int i, int j, const Elem& u) {
  return elementary(R, n, i, j, u) * elementary(R, n, j, i, -invert(u)) *
         elementary(R, n, i, j, u);
}

Root aij_root(int n, int i, int j) {
  Root r(static_cast<size_t>(n), 0);
  r[static_cast<size_t>(i)] = 2;
  r[static_cast<size_t>(j)] = -2;
  return r;
}

}  // namespace

std::vector<SquareFormulaPairResult> square_formula_check_sl3(const Ring& R, int trials,
                                                              std::uint64_t seed) {
  Rng rng(seed);
  auto a2 = build_root_system(RootType::A, 2);
  std::vector<SquareFormulaPairResult> out;
  for (int ai = 0; ai < 3; ++ai)
    for (int aj = 0; aj < 3; ++aj) {
      if (ai == aj) continue;
      for (int bi = 0; bi < 3; ++bi)
        for (int bj = 0; bj < 3; ++bj) {
          if (bi == bj) continue;
          Root alpha = aij_root(3, ai, aj), beta = aij_root(3, bi, bj);
          long parity = coroot_pairing(beta, alpha);
          SquareFormulaPairResult res{alpha, beta, parity,
                                      parity % 2 == 0 ? "even" : "odd-reduced", true};
          for (int t = 0; t < trials && res.pass; ++t) {
            Elem u = sample_unit(R, rng);
            Elem p = R.sample(rng);
            Matrix w = sl_weyl(R, 3, ai, aj, u);
            Matrix wsq = w * w;
            Matrix conj = wsq * elementary(R, 3, bi, bj, p) * *wsq.try_inverse();
            Matrix expect = elementary(R, 3, bi, bj, parity % 2 == 0 ? p : -p);
            if (conj != expect) res.pass = false;
          }
          out.push_back(res);
        }
    }
  return out;
}

std::vector<SquareFormulaPairResult> square_formula_check_bc1(const Ring& R, int trials,
                                                              std::uint64_t seed) {
  Rng rng(seed);
  auto bc1 = build_root_system(RootType::BC, 1);
  Realization real = Realization::make(RealKind::SL3BC1, 0, R);
  Root ultra = {2}, lng = {4};
  std::vector<SquareFormulaPairResult> out;

  auto wsq_of = [&](const Elem& u) {
    GroupElement wl =
        real.mul(real.mul(real.root_element(1, Triple{R.zero(), u, R.zero()}),
                          real.root_element(-1, Triple{R.zero(), -invert(u), R.zero()})),
                 real.root_element(1, Triple{R.zero(), u, R.zero()}));
    return real.mul(wl, wl);
  };

  for (int betasign : {1, -1}) {
    Root beta = betasign > 0 ? ultra : negate(ultra);
    long parity = coroot_pairing(beta, lng);
    bool doubled = bc1.contains(add(beta, beta));
    SquareFormulaPairResult res{lng, beta, parity,
                                parity % 2 != 0 && doubled ? "odd-doubled" : "odd-reduced", true};
    for (int t = 0; t < trials && res.pass; ++t) {
      Elem u = sample_unit(R, rng);
      GroupElement wsq = wsq_of(u);
      Param p = real.sample_param(rng);
      GroupElement conj =
          real.mul(real.mul(wsq, real.root_element(betasign, p)), real.inverse(wsq));
      // x . (-1) on the 2-step parameter
      GroupElement expect = real.root_element(betasign, real.param_scale(p, R.from_int(-1)));
      if (conj != expect) res.pass = false;
    }
    out.push_back(res);
  }

  // beta = alpha: even parity, w^2 fixes the long root subgroup
  {
    long parity = coroot_pairing(lng, lng);
    SquareFormulaPairResult res{lng, lng, parity, "even", true};
    for (int t = 0; t < trials && res.pass; ++t) {
      Elem u = sample_unit(R, rng);
      GroupElement wsq = wsq_of(u);
      Triple p{R.zero(), R.sample(rng), R.zero()};
      GroupElement tl = real.root_element(1, p);
      if (real.mul(real.mul(wsq, tl), real.inverse(wsq)) != tl) res.pass = false;
    }
    out.push_back(res);
  }
  return out;
}

BraidCheckResult braid_check_sl3(const Ring& R, int trials, std::uint64_t seed) {
  Rng rng(seed);
  BraidCheckResult res{true, true, true};
  for (int t = 0; t < trials; ++t) {
    Elem u = sample_unit(R, rng), v = sample_unit(R, rng);
    Matrix wa = sl_weyl(R, 3, 0, 1, u), wb = sl_weyl(R, 3, 1, 2, v);
    if (wa * wb * wa != wb * wa * wb) {
      res.braid_m3 = false;
      res.parameter_free = false;
    }
    // m = 2: orthogonal roots in SL(4) commute
    Matrix wc = sl_weyl(R, 4, 0, 1, u), wd = sl_weyl(R, 4, 2, 3, v);
    if (wc * wd != wd * wc) res.commute_m2 = false;
  }
  return res;
}

So3NormalizerResult so3_normalizer_check(const Ring& R, int trials, std::uint64_t seed) {
  Rng rng(seed);
  Realization real = Realization::make(RealKind::SO3adj, 0, R);
  So3NormalizerResult res{true, true, true, false};

  // candidate a values: all residues for a small modular ring, otherwise
  // small literals plus samples
  std::vector<Elem> cands;
  if (R.kind() == RingKind::Modular && R.modulus() <= 64) {
    for (mpz_class v = 0; v < R.modulus(); ++v) cands.push_back(R.from_mpz(v));
  } else {
    for (long v : {0L, 1L, 2L, -2L}) cands.push_back(R.from_int(v));
    for (int i = 0; i < trials; ++i) cands.push_back(R.sample(rng));
  }

  std::vector<Elem> qualifying;
  for (const Elem& a : cands) {
    bool rhs = (a * a).is_zero() && (a + a).is_zero();
    // X = {1} generates M = K, so conjugating t_+(1) decides membership
    GroupElement tm = real.root_element(-1, a);
    GroupElement conj =
        real.mul(real.mul(tm, real.root_element(1, R.one())), real.inverse(tm));
    bool lhs = real.unipotent_param(conj, 1).has_value();
    if (lhs != rhs) res.predicate_matches = false;
    if (rhs) {
      qualifying.push_back(a);
      if (!a.is_zero()) res.found_nontrivial = true;
      // and then every t_+(x) stays in U_+
      for (int i = 0; i < trials; ++i) {
        GroupElement c2 = real.mul(
            real.mul(tm, real.root_element(1, R.sample(rng))), real.inverse(tm));
        if (!real.unipotent_param(c2, 1).has_value()) res.predicate_matches = false;
      }
    }
  }

  // displayed w and w^2 for qualifying u, v and unit x
  std::vector<Elem> xs = {R.one()};
  for (int i = 0; i < 4; ++i) xs.push_back(sample_unit(R, rng));
  for (const Elem& u : qualifying)
    for (const Elem& v : qualifying)
      for (const Elem& x : xs) {
        Elem xi = invert(x);
        Elem xi2 = xi * xi;
        GroupElement w = real.mul(
            real.mul(real.root_element(1, x + u), real.root_element(-1, -xi)),
            real.root_element(1, x + v));
        Matrix expw(R, 3, 3);
        expw.at(0, 2) = -(x * x);
        expw.at(1, 0) = u * xi2;
        expw.at(1, 1) = R.from_int(-1);
        expw.at(1, 2) = v;
        expw.at(2, 0) = -xi2;
        if (w.mat() != expw) res.displayed_w = false;
        Matrix expsq = Matrix::identity(R, 3);
        expsq.at(1, 0) = (u + v) * xi2;
        expsq.at(1, 2) = u + v;
        if (w.mat() * w.mat() != expsq) res.displayed_w_square = false;
      }
  return res;
}

Bc1Result bc1_counterexample(const Ring& R, const Elem& x, const Elem& y, const Elem& z,
                             int trials, std::uint64_t seed) {
  Rng rng(seed);
  Realization real = Realization::make(RealKind::SL3BC1, 0, R);
  Bc1Result res{false, true, true, true, true, "", ""};
  Triple a{x, y, z};
  if (!real.constructible(a)) return res;
  res.constructible = true;

  auto w = build_weyl(real, a);
  GroupElement wsq = real.mul(*w, *w);
  res.w_str = w->mat().str();
  res.w_sq_str = wsq.mat().str();

  res.weyl_extensional = true;
  GroupElement wi = real.inverse(*w);
  for (int i = 0; i < trials && res.weyl_extensional; ++i) {
    Param p = real.sample_param(rng);
    if (!real.unipotent_param(real.mul(real.mul(*w, real.root_element(1, p)), wi), -1))
      res.weyl_extensional = false;
    if (!real.unipotent_param(real.mul(real.mul(*w, real.root_element(-1, p)), wi), 1))
      res.weyl_extensional = false;
  }

  Elem d = x * z - y;
  Elem di = invert(d), yi = invert(y);
  Matrix expw(R, 3, 3);
  expw.at(0, 2) = y;
  expw.at(1, 1) = (y - x * z) * yi;
  expw.at(2, 0) = di;
  res.displayed_w = w->mat() == expw;

  Matrix expsq(R, 3, 3);
  expsq.at(0, 0) = y * di;
  expsq.at(1, 1) = d * d * yi * yi;
  expsq.at(2, 2) = y * di;
  res.displayed_w_square = wsq.mat() == expsq;

  res.square_central = true;
  for (int i = 0; i < trials && res.square_central; ++i) {
    Param p = real.sample_param(rng);
    for (int sign : {1, -1}) {
      GroupElement t = real.root_element(sign, p);
      if (real.mul(wsq, t) != real.mul(t, wsq)) res.square_central = false;
    }
  }
  return res;
}

}  // namespace weylkit
