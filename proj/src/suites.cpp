#include "weylkit/suites.hpp"

#include <functional>

#include "json.hpp"
#include "weylkit/weyl.hpp"

namespace weylkit {

namespace {

using Json = nlohmann::ordered_json;

struct Check {
  std::string name;
  std::function<std::pair<bool, std::string>(Rng&)> body;
};

// runs trials samples of a property; f returns a witness string on failure
template <typename F>
std::pair<bool, std::string> forall(int trials, Rng& rng, F f) {
  for (int i = 0; i < trials; ++i) {
    std::optional<std::string> w = f(rng);
    if (w) return {false, "trial " + std::to_string(i) + ": " + *w};
  }
  return {true, ""};
}

std::string vec_str(const std::vector<Elem>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  return s + ")";
}

// ---------------------------------------------------------------- composition

std::vector<Elem> corrupted_zorn_mul(const std::vector<Elem>& u, const std::vector<Elem>& v) {
  std::array<Elem, 8> a = {u[0], u[1], u[2], u[3], u[4], u[5], u[6], u[7]};
  std::array<Elem, 8> b = {v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7]};
  Zorn p = Zorn::from_coords(a), o = Zorn::from_coords(b);
  auto yy = cross3(p.y, o.y);
  auto xx = cross3(p.x, o.x);
  Zorn r{p.a11 * o.a11 + dot3(p.x, o.y),
         {p.x[0] * o.a22 + o.x[0] * p.a11 + yy[0], p.x[1] * o.a22 + o.x[1] * p.a11 + yy[1],
          p.x[2] * o.a22 + o.x[2] * p.a11 + yy[2]},
         {p.y[0] * o.a11 + o.y[0] * p.a22 + xx[0], p.y[1] * o.a11 + o.y[1] * p.a22 + xx[1],
          p.y[2] * o.a11 + o.y[2] * p.a22 + xx[2]},
         p.a22 * o.a22 + dot3(p.y, o.x)};
  auto c = r.coords();
  return std::vector<Elem>(c.begin(), c.end());
}

std::vector<Check> composition_checks(const Ring& R, int trials, const std::string& mutation) {
  std::vector<Check> out;
  struct Variant {
    const char* name;
    CompKind kind;
  };
  for (Variant var : {Variant{"base", CompKind::Base}, Variant{"doubled", CompKind::Doubled},
                      Variant{"matrix2", CompKind::Matrix2}, Variant{"zorn", CompKind::Zorn}}) {
    CompAlgebra C{R, var.kind};
    bool corrupt = var.kind == CompKind::Zorn && mutation == "zorn-cross-flip";
    auto mul = [C, corrupt](const std::vector<Elem>& u, const std::vector<Elem>& v) {
      return corrupt ? corrupted_zorn_mul(u, v) : C.mul(u, v);
    };
    auto scale = [C](std::vector<Elem> u, const Elem& k) {
      for (auto& e : u) e = e * k;
      return u;
    };
    std::string pfx = var.name;

    auto add_pair_check = [&](const std::string& name, auto f) {
      out.push_back({pfx + "/" + name, [C, mul, scale, trials, f](Rng& rng) {
                       return forall(trials, rng, [&](Rng& r) -> std::optional<std::string> {
                         auto x = C.sample(r), y = C.sample(r), z = C.sample(r);
                         return f(C, mul, scale, x, y, z);
                       });
                     }});
    };

    using V = std::vector<Elem>;
    using MulFn = std::function<V(const V&, const V&)>;
    using ScaleFn = std::function<V(V, const Elem&)>;

    add_pair_check("q-multiplicative",
                   [](const CompAlgebra& C, const MulFn& mul, const ScaleFn&, const V& x,
                      const V& y, const V&) -> std::optional<std::string> {
                     if (C.q(mul(x, y)) == C.q(x) * C.q(y)) return std::nullopt;
                     return "x=" + vec_str(x) + " y=" + vec_str(y);
                   });
    add_pair_check("bilinear-left-adjoint",
                   [](const CompAlgebra& C, const MulFn& mul, const ScaleFn&, const V& x,
                      const V& y, const V& z) -> std::optional<std::string> {
                     if (C.bilin(mul(x, y), z) == C.bilin(y, mul(C.conj(x), z)))
                       return std::nullopt;
                     return "x=" + vec_str(x) + " y=" + vec_str(y) + " z=" + vec_str(z);
                   });
    add_pair_check("bilinear-right-adjoint",
                   [](const CompAlgebra& C, const MulFn& mul, const ScaleFn&, const V& x,
                      const V& y, const V& z) -> std::optional<std::string> {
                     if (C.bilin(mul(x, y), z) == C.bilin(x, mul(z, C.conj(y))))
                       return std::nullopt;
                     return "x=" + vec_str(x) + " y=" + vec_str(y) + " z=" + vec_str(z);
                   });
    add_pair_check("q-conjugation",
                   [](const CompAlgebra& C, const MulFn&, const ScaleFn&, const V& x, const V&,
                      const V&) -> std::optional<std::string> {
                     if (C.q(C.conj(x)) == C.q(x)) return std::nullopt;
                     return "x=" + vec_str(x);
                   });
    add_pair_check("left-alternative",
                   [](const CompAlgebra&, const MulFn& mul, const ScaleFn&, const V& x,
                      const V& y, const V&) -> std::optional<std::string> {
                     if (mul(mul(x, x), y) == mul(x, mul(x, y))) return std::nullopt;
                     return "x=" + vec_str(x) + " y=" + vec_str(y);
                   });
    add_pair_check("right-alternative",
                   [](const CompAlgebra&, const MulFn& mul, const ScaleFn&, const V& x,
                      const V& y, const V&) -> std::optional<std::string> {
                     if (mul(x, mul(y, y)) == mul(mul(x, y), y)) return std::nullopt;
                     return "x=" + vec_str(x) + " y=" + vec_str(y);
                   });
    add_pair_check("conjugation-antihomomorphism",
                   [](const CompAlgebra& C, const MulFn& mul, const ScaleFn&, const V& x,
                      const V& y, const V&) -> std::optional<std::string> {
                     if (mul(C.conj(x), C.conj(y)) == C.conj(mul(y, x))) return std::nullopt;
                     return "x=" + vec_str(x) + " y=" + vec_str(y);
                   });
    add_pair_check("conj-cancellation",
                   [](const CompAlgebra& C, const MulFn& mul, const ScaleFn& scale, const V& x,
                      const V& y, const V&) -> std::optional<std::string> {
                     if (mul(x, mul(C.conj(x), y)) == scale(y, C.q(x))) return std::nullopt;
                     return "x=" + vec_str(x) + " y=" + vec_str(y);
                   });
    add_pair_check("norm-form",
                   [](const CompAlgebra& C, const MulFn& mul, const ScaleFn& scale, const V& x,
                      const V&, const V&) -> std::optional<std::string> {
                     V lhs = mul(x, C.conj(x));
                     if (lhs == mul(C.conj(x), x) && lhs == scale(C.one(), C.q(x)))
                       return std::nullopt;
                     return "x=" + vec_str(x);
                   });
    add_pair_check("right-cancellation",
                   [](const CompAlgebra& C, const MulFn& mul, const ScaleFn& scale, const V& x,
                      const V& y, const V&) -> std::optional<std::string> {
                     if (mul(mul(x, y), C.conj(y)) == scale(x, C.q(y))) return std::nullopt;
                     return "x=" + vec_str(x) + " y=" + vec_str(y);
                   });
    add_pair_check("conj-involutive",
                   [](const CompAlgebra& C, const MulFn&, const ScaleFn&, const V& x, const V&,
                      const V&) -> std::optional<std::string> {
                     if (C.conj(C.conj(x)) == x && C.conj(C.one()) == C.one())
                       return std::nullopt;
                     return "x=" + vec_str(x);
                   });
  }

  out.push_back({"zorn/nonassociativity-witness", [R, trials](Rng& rng) {
                   CompAlgebra C{R, CompKind::Zorn};
                   for (int i = 0; i < std::max(trials, 50); ++i) {
                     auto x = C.sample(rng), y = C.sample(rng), z = C.sample(rng);
                     if (C.mul(C.mul(x, y), z) != C.mul(x, C.mul(y, z)))
                       return std::make_pair(true, std::string{});
                   }
                   return std::make_pair(false,
                                         std::string("no nonassociative triple found"));
                 }});
  return out;
}

// --------------------------------------------------------------------- albert

std::vector<Check> albert_checks(const Ring& R, int trials, const std::string& mutation) {
  bool corrupt = mutation == "albert-sharp-drop";
  auto sharp = [corrupt](const Albert& x) {
    Albert s = albert_sharp(x);
    if (corrupt) s.c3 = zorn_conj(x.c1 * x.c2);  // dropped -a3 c3 term
    return s;
  };
  std::vector<Check> out;
  auto add = [&](const std::string& name, auto f) {
    out.push_back({name, [R, trials, f](Rng& rng) {
                     return forall(trials, rng, [&](Rng& r) -> std::optional<std::string> {
                       Albert x = albert_sample(R, r), y = albert_sample(R, r);
                       return f(R, x, y);
                     });
                   }});
  };

  Albert one = Albert::one(R);

  add("axiom/sharp-one", [sharp, one](const Ring& R2, const Albert&, const Albert&)
                             -> std::optional<std::string> {
    (void)R2;
    if (sharp(one) == one) return std::nullopt;
    return "1# != 1";
  });
  add("axiom/one-cross", [one](const Ring&, const Albert& x, const Albert&)
                             -> std::optional<std::string> {
    if (albert_cross(one, x) == one.scaled(albert_trace(one, x)) - x) return std::nullopt;
    return "x=" + x.str();
  });
  add("axiom/norm-one", [one](const Ring& R2, const Albert&, const Albert&)
                            -> std::optional<std::string> {
    if (albert_norm(one) == R2.one()) return std::nullopt;
    return "N(1) != 1";
  });
  add("axiom/norm-expansion", [](const Ring&, const Albert& x, const Albert& y)
                                  -> std::optional<std::string> {
    Elem rhs = albert_norm(x) + albert_trace(albert_sharp(x), y) +
               albert_trace(x, albert_sharp(y)) + albert_norm(y);
    if (albert_norm(x + y) == rhs) return std::nullopt;
    return "x=" + x.str() + " y=" + y.str();
  });
  add("axiom/double-sharp", [sharp](const Ring&, const Albert& x, const Albert&)
                                -> std::optional<std::string> {
    if (sharp(sharp(x)) == x.scaled(albert_norm(x))) return std::nullopt;
    return "x=" + x.str();
  });
  add("axiom/norm-sharp", [sharp](const Ring&, const Albert& x, const Albert&)
                              -> std::optional<std::string> {
    if (albert_norm(sharp(x)) == albert_norm(x) * albert_norm(x)) return std::nullopt;
    return "x=" + x.str();
  });
  out.push_back({"derived/trilinear-symmetry", [R, trials](Rng& rng) {
                   return forall(trials, rng, [&](Rng& r) -> std::optional<std::string> {
                     Albert x = albert_sample(R, r), y = albert_sample(R, r),
                            z = albert_sample(R, r);
                     if (albert_trace(albert_cross(x, y), z) ==
                             albert_trace(x, albert_cross(y, z)) &&
                         albert_trace(albert_cross(x, y), z) ==
                             albert_trace(albert_cross(x, z), y))
                       return std::nullopt;
                     return "x=" + x.str() + " y=" + y.str() + " z=" + z.str();
                   });
                 }});
  add("derived/trace-of-cross", [one](const Ring&, const Albert& x, const Albert& y)
                                    -> std::optional<std::string> {
    if (albert_trace(one, albert_cross(x, y)) ==
        albert_trace(one, x) * albert_trace(one, y) - albert_trace(x, y))
      return std::nullopt;
    return "x=" + x.str() + " y=" + y.str();
  });
  add("derived/sharp-cross-left", [](const Ring&, const Albert& x, const Albert& y)
                                      -> std::optional<std::string> {
    Albert xs = albert_sharp(x);
    if (albert_cross(xs, albert_cross(x, y)) ==
        x.scaled(albert_trace(xs, y)) + y.scaled(albert_norm(x)))
      return std::nullopt;
    return "x=" + x.str() + " y=" + y.str();
  });
  add("derived/sharp-cross-right", [](const Ring&, const Albert& x, const Albert& y)
                                       -> std::optional<std::string> {
    Albert xs = albert_sharp(x);
    if (albert_cross(x, albert_cross(xs, y)) ==
        xs.scaled(albert_trace(x, y)) + y.scaled(albert_norm(x)))
      return std::nullopt;
    return "x=" + x.str() + " y=" + y.str();
  });
  add("derived/cross-sharp-sum", [](const Ring&, const Albert& x, const Albert& y)
                                     -> std::optional<std::string> {
    Albert xs = albert_sharp(x), ys = albert_sharp(y);
    if (albert_sharp(albert_cross(x, y)) + albert_cross(xs, ys) ==
        x.scaled(albert_trace(x, ys)) + y.scaled(albert_trace(xs, y)))
      return std::nullopt;
    return "x=" + x.str() + " y=" + y.str();
  });
  add("derived/trace-sharp", [](const Ring& R2, const Albert& x, const Albert&)
                                 -> std::optional<std::string> {
    if (albert_trace(albert_sharp(x), x) == albert_norm(x) * R2.from_int(3))
      return std::nullopt;
    return "x=" + x.str();
  });
  add("derived/norm-of-cross", [](const Ring&, const Albert& x, const Albert& y)
                                   -> std::optional<std::string> {
    Albert xs = albert_sharp(x), ys = albert_sharp(y);
    if (albert_norm(albert_cross(x, y)) ==
        albert_trace(xs, y) * albert_trace(x, ys) - albert_norm(x) * albert_norm(y))
      return std::nullopt;
    return "x=" + x.str() + " y=" + y.str();
  });
  add("derived/sharp-cross-closed", [one](const Ring&, const Albert& x, const Albert&)
                                        -> std::optional<std::string> {
    Albert xs = albert_sharp(x);
    Elem tx = albert_trace_one(x), txs = albert_trace_one(xs);
    if (albert_cross(xs, x) == one.scaled(tx * txs) - one.scaled(albert_norm(x)) -
                                   x.scaled(txs) - xs.scaled(tx))
      return std::nullopt;
    return "x=" + x.str();
  });
  add("jordan/u-composition", [](const Ring&, const Albert& x, const Albert& y)
                                  -> std::optional<std::string> {
    Elem nx = albert_norm(x);
    if (albert_norm(u_operator(x, y)) == nx * nx * albert_norm(y)) return std::nullopt;
    return "x=" + x.str() + " y=" + y.str();
  });
  add("jordan/u-inverse", [](const Ring& R2, const Albert& x, const Albert&)
                              -> std::optional<std::string> {
    auto xi = albert_try_invert(x);
    if (!xi) return std::nullopt;  // non-units are skipped, not failures
    if (u_operator(x, *xi) == x && albert_norm(x) * albert_norm(*xi) == R2.one())
      return std::nullopt;
    return "x=" + x.str();
  });
  return out;
}

// ---------------------------------------------------------------- freudenthal

std::vector<Check> freudenthal_checks(const Ring& R, int trials) {
  std::vector<Check> out;
  auto add = [&](const std::string& name, auto f) {
    out.push_back({name, [R, trials, f](Rng& rng) {
                     return forall(trials, rng, [&](Rng& r) -> std::optional<std::string> {
                       return f(R, r);
                     });
                   }});
  };

  add("dotplus/associative-with-identity", [](const Ring& R2, Rng& r)
                                               -> std::optional<std::string> {
    FVector v = f_sample(R2, r), w = f_sample(R2, r), u = f_sample(R2, r);
    if (f_dotplus(f_dotplus(v, w), u) == f_dotplus(v, f_dotplus(w, u)) &&
        f_dotplus(v, FVector::zero(R2)) == v && f_dotplus(FVector::zero(R2), v) == v)
      return std::nullopt;
    return "v=" + v.str();
  });
  add("dotplus/commutator-is-central", [](const Ring& R2, Rng& r)
                                           -> std::optional<std::string> {
    FVector v = f_sample(R2, r), w = f_sample(R2, r);
    FVector vw = f_dotplus(v, w), wv = f_dotplus(w, v);
    if (vw.r == wv.r && vw.b == wv.b && vw.c == wv.c && vw.t == wv.t) return std::nullopt;
    return "v=" + v.str() + " w=" + w.str();
  });
  add("scale/compatible", [](const Ring& R2, Rng& r) -> std::optional<std::string> {
    FVector v = f_sample(R2, r), w = f_sample(R2, r);
    Elem k = R2.sample(r), k2 = R2.sample(r);
    if (f_scale(f_scale(v, k), k2) == f_scale(v, k * k2) &&
        f_scale(f_dotplus(v, w), k) == f_dotplus(f_scale(v, k), f_scale(w, k)))
      return std::nullopt;
    return "v=" + v.str() + " k=" + k.str();
  });
  add("tau/splits-doubling", [](const Ring& R2, Rng& r) -> std::optional<std::string> {
    FVector v = f_sample(R2, r);
    if (f_scale(v, R2.from_int(2)) == f_dotplus(f_dotplus(v, v), f_tau(v)) &&
        f_dotplus(v, f_scale(v, R2.from_int(-1))) == f_tau(v))
      return std::nullopt;
    return "v=" + v.str();
  });
  add("theta/degree-four", [](const Ring& R2, Rng& r) -> std::optional<std::string> {
    FVector v = f_sample(R2, r);
    Elem k = R2.sample(r);
    if (f_theta(f_scale(v, k)) == f_theta(v) * k * k * k * k) return std::nullopt;
    return "v=" + v.str() + " k=" + k.str();
  });
  add("theta/invariant-under-t-plus", [](const Ring& R2, Rng& r)
                                          -> std::optional<std::string> {
    Albert a = albert_sample(R2, r);
    FVector v = f_sample(R2, r);
    if (f_theta(t_plus_action(a, v)) == f_theta(v)) return std::nullopt;
    return "a=" + a.str() + " v=" + v.str();
  });
  add("theta/invariant-under-t-minus", [](const Ring& R2, Rng& r)
                                           -> std::optional<std::string> {
    Albert a = albert_sample(R2, r);
    FVector v = f_sample(R2, r);
    if (f_theta(t_minus_action(a, v)) == f_theta(v)) return std::nullopt;
    return "a=" + a.str() + " v=" + v.str();
  });
  add("theta/invariant-under-d", [](const Ring& R2, Rng& r) -> std::optional<std::string> {
    Elem u = sample_unit(R2, r);
    FVector v = f_sample(R2, r);
    if (f_theta(dil_action(u, v)) == f_theta(v)) return std::nullopt;
    return "u=" + u.str() + " v=" + v.str();
  });

  out.push_back({"theta/invariant-under-torus-lmap", [R, trials](Rng& rng) {
                   Elem u1 = sample_unit(R, rng), u2 = sample_unit(R, rng);
                   auto g = NormPreservingMap::e6_torus(u1, u2, invert(u1 * u2));
                   auto gmd = g.inverse_dagger();
                   return forall(trials, rng, [&](Rng& r) -> std::optional<std::string> {
                     FVector v = f_sample(R, r);
                     if (f_theta(lmap_action(g, gmd, v)) == f_theta(v)) return std::nullopt;
                     return "v=" + v.str();
                   });
                 }});

  out.push_back({"tabulation/two-route-consistency", [R, trials](Rng& rng) {
                   return forall(trials, rng,
                                 [&](Rng& r) -> std::optional<std::string> {
                                   Albert a = albert_sample(R, r);
                                   FVector v = f_sample(R, r);
                                   if (FAutomorphism::root_plus(a).apply(v) ==
                                           t_plus_action(a, v) &&
                                       FAutomorphism::root_minus(a).apply(v) ==
                                           t_minus_action(a, v))
                                     return std::nullopt;
                                   return "a=" + a.str() + " v=" + v.str();
                                 });
                 }});
  out.push_back({"tabulation/dotplus-homomorphism", [R, trials](Rng& rng) {
                   Albert a = albert_sample(R, rng);
                   auto f = FAutomorphism::root_plus(a).compose(
                       FAutomorphism::root_minus(albert_sample(R, rng)));
                   return forall(std::max(1, trials / 4), rng,
                                 [&](Rng& r) -> std::optional<std::string> {
                                   FVector v = f_sample(R, r), w = f_sample(R, r);
                                   if (f.apply(f_dotplus(v, w)) ==
                                       f_dotplus(f.apply(v), f.apply(w)))
                                     return std::nullopt;
                                   return "v=" + v.str() + " w=" + w.str();
                                 });
                 }});
  out.push_back({"group/t-plus-additive", [R](Rng& rng) {
                   return forall(6, rng, [&](Rng& r) -> std::optional<std::string> {
                     Albert a = albert_sample(R, r), b = albert_sample(R, r);
                     if (FAutomorphism::root_plus(a).compose(FAutomorphism::root_plus(b)) ==
                         FAutomorphism::root_plus(a + b))
                       return std::nullopt;
                     return "a=" + a.str() + " b=" + b.str();
                   });
                 }});
  out.push_back({"conj/d-scales-by-u-squared", [R](Rng& rng) {
                   return forall(4, rng, [&](Rng& r) -> std::optional<std::string> {
                     Elem u = sample_unit(R, r);
                     Albert a = albert_sample(R, r);
                     auto d = FAutomorphism::dilation(u);
                     if (d.compose(FAutomorphism::root_plus(a)).compose(d.inverse()) ==
                         FAutomorphism::root_plus(a.scaled(u * u)))
                       return std::nullopt;
                     return "u=" + u.str() + " a=" + a.str();
                   });
                 }});
  return out;
}

// ------------------------------------------------------------------- clifford

std::vector<Check> clifford_checks(const Ring& R, int trials) {
  std::vector<Check> out;
  std::vector<QuadSpacePtr> spaces = {make_split_bd_space(R, 1), make_split_bd_space(R, 3),
                                      make_split_bd_space(R, 5), make_hyperbolic_space(R, 4)};

  auto rand_elem = [](const QuadSpacePtr& sp, Rng& rng) {
    std::map<std::uint32_t, Elem> t;
    for (int k = 0; k < 6; ++k) {
      std::uint32_t m = static_cast<std::uint32_t>(rng.below(1u << sp->dim()));
      Elem c = sp->ring.sample(rng);
      if (!c.is_zero()) t.emplace(m, c);
    }
    return Cliff(sp, std::move(t));
  };

  out.push_back({"relations/vector-squares", [R, trials, spaces](Rng& rng) {
                   return forall(trials, rng, [&](Rng& r) -> std::optional<std::string> {
                     for (const auto& sp : spaces) {
                       std::vector<Elem> coords;
                       for (int k = 0; k < sp->dim(); ++k) coords.push_back(R.sample(r));
                       Cliff v = Cliff::vector(sp, coords);
                       if (v * v != Cliff::scalar(sp, sp->q_of(coords)))
                         return "v=" + vec_str(coords);
                     }
                     return std::nullopt;
                   });
                 }});
  out.push_back({"relations/hyperbolic-pair", [R](Rng&) -> std::pair<bool, std::string> {
                   auto sp = make_split_bd_space(R, 1);
                   Cliff em = Cliff::gen(sp, 0), ep = Cliff::gen(sp, 2);
                   bool ok = (em * ep + ep * em) == Cliff::one(sp);
                   return {ok, ok ? "" : "e-e+ + e+e- != 1"};
                 }});
  out.push_back({"algebra/associative", [trials, spaces, rand_elem](Rng& rng) {
                   return forall(std::max(1, trials / 4), rng,
                                 [&](Rng& r) -> std::optional<std::string> {
                                   for (const auto& sp : spaces) {
                                     Cliff a = rand_elem(sp, r), b = rand_elem(sp, r),
                                           c = rand_elem(sp, r);
                                     if ((a * b) * c != a * (b * c)) return a.str();
                                   }
                                   return std::nullopt;
                                 });
                 }});
  out.push_back({"involution/anti-automorphism", [trials, spaces, rand_elem](Rng& rng) {
                   return forall(std::max(1, trials / 4), rng,
                                 [&](Rng& r) -> std::optional<std::string> {
                                   for (const auto& sp : spaces) {
                                     Cliff a = rand_elem(sp, r), b = rand_elem(sp, r);
                                     if (main_involution(a * b) !=
                                         main_involution(b) * main_involution(a))
                                       return a.str();
                                     if (main_involution(main_involution(a)) != a)
                                       return a.str();
                                   }
                                   return std::nullopt;
                                 });
                 }});
  // the two root-element shapes: 1 + p e_- on the B/D1 spaces (p in M0,
  // orthogonal to e_-+) and products of 1 + c e_{-i} e_{-j} on the
  // hyperbolic space
  std::vector<QuadSpacePtr> bd_spaces(spaces.begin(), spaces.end() - 1);
  QuadSpacePtr hyp = spaces.back();
  out.push_back({"spin/root-elements-pass", [R, trials, bd_spaces, hyp](Rng& rng) {
                   return forall(std::max(1, trials / 8), rng,
                                 [&](Rng& r) -> std::optional<std::string> {
                                   for (const auto& sp : bd_spaces) {
                                     std::vector<Elem> coords(
                                         static_cast<size_t>(sp->dim()), R.zero());
                                     for (int k = 1; k + 1 < sp->dim(); ++k)
                                       coords[static_cast<size_t>(k)] = R.sample(r);
                                     Cliff g = Cliff::one(sp) +
                                               Cliff::vector(sp, coords) * Cliff::gen(sp, 0);
                                     if (!spin_check(g)) return "p=" + vec_str(coords);
                                   }
                                   Cliff g = Cliff::one(hyp);
                                   for (int i = 0; i < 4; ++i)
                                     for (int j = i + 1; j < 4; ++j)
                                       g = g * (Cliff::one(hyp) +
                                                (Cliff::gen(hyp, i) * Cliff::gen(hyp, j))
                                                    .scaled(R.sample(r)));
                                   if (!spin_check(g)) return std::string("hyperbolic product");
                                   return std::nullopt;
                                 });
                 }});
  out.push_back({"spin/odd-elements-fail", [R, spaces](Rng&) -> std::pair<bool, std::string> {
                   for (const auto& sp : spaces)
                     if (spin_check(Cliff::gen(sp, 0))) return {false, "e0 accepted"};
                   return {true, ""};
                 }});
  out.push_back({"conjugation/preserves-module-and-q", [R, trials, bd_spaces](Rng& rng) {
                   return forall(std::max(1, trials / 8), rng,
                                 [&](Rng& r) -> std::optional<std::string> {
                                   for (const auto& sp : bd_spaces) {
                                     std::vector<Elem> pc(static_cast<size_t>(sp->dim()),
                                                          R.zero());
                                     for (int k = 1; k + 1 < sp->dim(); ++k)
                                       pc[static_cast<size_t>(k)] = R.sample(r);
                                     Cliff g = Cliff::one(sp) +
                                               Cliff::vector(sp, pc) * Cliff::gen(sp, 0);
                                     std::vector<Elem> m;
                                     for (int k = 0; k < sp->dim(); ++k)
                                       m.push_back(R.sample(r));
                                     auto conj = conjugate_vector(g, m);
                                     if (sp->q_of(conj) != sp->q_of(m))
                                       return "m=" + vec_str(m);
                                   }
                                   return std::nullopt;
                                 });
                 }});
  return out;
}

// ----------------------------------------------------------------------- weyl

Param sample_constructible(const Realization& real, Rng& rng) {
  for (int i = 0; i < 500; ++i) {
    Param p = real.sample_param(rng);
    if (real.constructible(p)) return p;
  }
  return real.one_param();
}

std::vector<Check> weyl_checks(const Ring& R, const std::string& selector, int trials) {
  Realization real = Realization::parse(selector, R);
  std::vector<Check> out;
  bool heavy = real.kind() == RealKind::E7;
  int xs_for_squares = 20;
  int conj_samples = trials;
  int ext_probes = heavy ? 3 : 6;

  out.push_back({"criterion/accepts-constructible", [real, ext_probes](Rng& rng) {
                   return forall(real.kind() == RealKind::E7 ? 2 : 8, rng,
                                 [&](Rng& r) -> std::optional<std::string> {
                                   Param x = sample_constructible(real, r);
                                   auto ext = unique_extension(real, x);
                                   if (!ext) return "no extension for " + real.param_str(x);
                                   if (is_weyl_triple(real, x, ext->first, ext->second,
                                                      ext_probes, r))
                                     return std::nullopt;
                                   return "rejected x=" + real.param_str(x);
                                 });
                 }});

  if (real.kind() != RealKind::SL3BC1 && real.kind() != RealKind::SO3adj) {
    out.push_back({"criterion/rejects-perturbed", [real, ext_probes](Rng& rng) {
                     return forall(real.kind() == RealKind::E7 ? 2 : 6, rng,
                                   [&](Rng& r) -> std::optional<std::string> {
                                     Param x = sample_constructible(real, r);
                                     Param y = real.weyl_partner(x);
                                     Param bad = real.param_add(y, real.one_param(), -1);
                                     if (!is_weyl_triple(real, x, bad, x, ext_probes, r))
                                       return std::nullopt;
                                     return "accepted perturbed y for x=" +
                                            real.param_str(x);
                                   });
                   }});
  }

  if (real.kind() != RealKind::SL3BC1) {
    out.push_back({"square/equals-coroot-minus-one", [real, xs_for_squares](Rng& rng) {
                     int found = 0;
                     for (int t = 0; t < 4000 && found < xs_for_squares; ++t) {
                       Param x = t == 0 ? real.one_param() : real.sample_param(rng);
                       if (!real.constructible(x)) continue;
                       ++found;
                       auto res = weyl_square(real, x, 6, rng);
                       if (!res.canonical)
                         return std::make_pair(false, "x=" + real.param_str(x));
                     }
                     if (found < xs_for_squares)
                       return std::make_pair(false, std::string("too few constructible x"));
                     return std::make_pair(true, std::string{});
                   }});
    out.push_back({"square/central-on-samples", [real](Rng& rng) {
                     int found = 0;
                     for (int t = 0; t < 2000 && found < 5; ++t) {
                       Param x = t == 0 ? real.one_param() : real.sample_param(rng);
                       if (!real.constructible(x)) continue;
                       ++found;
                       auto res = weyl_square(real, x, 10, rng);
                       if (!res.central)
                         return std::make_pair(false, "x=" + real.param_str(x));
                     }
                     return std::make_pair(true, std::string{});
                   }});
  }

  if (real.kind() != RealKind::SL3BC1) {
    out.push_back({"conjugation/matches-closed-form", [real, conj_samples](Rng& rng) {
                     Param x = real.one_param();
                     auto w = build_weyl(real, x);
                     GroupElement wi = real.inverse(*w);
                     Param x2 = sample_constructible(real, rng);
                     auto w2 = build_weyl(real, x2);
                     GroupElement wi2 = real.inverse(*w2);
                     return forall(conj_samples, rng,
                                   [&](Rng& r) -> std::optional<std::string> {
                                     Param p = real.sample_param(r);
                                     try {
                                       for (int sign : {1, -1}) {
                                         (void)weyl_conjugate_root(real, *w, wi, x, sign, p);
                                         (void)weyl_conjugate_root(real, *w2, wi2, x2, sign,
                                                                   p);
                                       }
                                     } catch (const InternalError& e) {
                                       return std::string(e.what());
                                     }
                                     return std::nullopt;
                                   });
                   }});
    out.push_back({"identities/inverse-refactor-torus", [real, ext_probes](Rng& rng) {
                     return forall(real.kind() == RealKind::E7 ? 1 : 4, rng,
                                   [&](Rng& r) -> std::optional<std::string> {
                                     Param x = sample_constructible(real, r);
                                     auto res = weyl_identities_check(real, x, ext_probes, r);
                                     if (res.pass()) return std::nullopt;
                                     return "x=" + real.param_str(x);
                                   });
                   }});
  }

  out.push_back({"extension/none-for-non-units", [real](Rng& rng) {
                   for (int t = 0; t < 2000; ++t) {
                     Param x = real.sample_param(rng);
                     if (real.constructible(x)) continue;
                     if (unique_extension(real, x))
                       return std::make_pair(false, "x=" + real.param_str(x));
                     return std::make_pair(true, std::string{});
                   }
                   // rings where every sampled x is constructible (e.g. fields
                   // with dense units): nothing to refute
                   return std::make_pair(true, std::string{});
                 }});
  return out;
}

// ------------------------------------------------------------- square formula

std::vector<Check> square_formula_checks(const Ring& R, int trials, std::uint64_t seed) {
  std::vector<Check> out;
  auto sl3 = square_formula_check_sl3(R, std::max(4, trials / 16), seed);
  for (size_t i = 0; i < sl3.size(); ++i) {
    auto r = sl3[i];
    out.push_back({"sl3/" + root_str(r.alpha) + "-" + root_str(r.beta) + "-" + r.case_tag,
                   [r](Rng&) {
                     return std::make_pair(r.pass, r.pass ? std::string{}
                                                          : "parity " + std::to_string(r.parity));
                   }});
  }
  auto bc1 = square_formula_check_bc1(R, std::max(4, trials / 16), seed ^ 1);
  for (size_t i = 0; i < bc1.size(); ++i) {
    auto r = bc1[i];
    out.push_back({"bc1/" + root_str(r.alpha) + "-" + root_str(r.beta) + "-" + r.case_tag,
                   [r](Rng&) {
                     return std::make_pair(r.pass, r.pass ? std::string{}
                                                          : "parity " + std::to_string(r.parity));
                   }});
  }
  out.push_back({"braid/sl3-and-orthogonal-commute", [R, trials, seed](Rng&) {
                   auto res = braid_check_sl3(R, std::max(4, trials / 16), seed ^ 2);
                   bool ok = res.braid_m3 && res.commute_m2 && res.parameter_free;
                   return std::make_pair(ok, ok ? std::string{} : "braid relation violated");
                 }});
  return out;
}

// ---------------------------------------------------------- lemma combinatorics

struct TableWitnessRow {
  TitsIndexId id;
  Root alpha, beta;
  std::optional<Root> gamma;
};

Root mk_root(int ambient, std::vector<std::pair<int, long>> entries) {
  Root r(static_cast<size_t>(ambient), 0);
  for (auto [i, v] : entries) r[static_cast<size_t>(i)] = 2 * v;
  return r;
}

std::vector<Check> lemma_checks() {
  std::vector<Check> out;
  std::vector<TitsIndexId> t1;
  for (int d = 2; d <= 4; ++d) t1.push_back(TitsIndexId::parse("1A", d, 0));
  for (int d = 2; d <= 4; ++d) t1.push_back(TitsIndexId::parse("2A", d, 2 * d - 1));
  for (int n = 2; n <= 6; ++n) t1.push_back(TitsIndexId::parse("B", 0, n));
  for (int d : {2, 4}) t1.push_back(TitsIndexId::parse("C", d, d));
  t1.push_back(TitsIndexId::parse("1D", 4, 4));
  for (int n = 3; n <= 6; ++n) t1.push_back(TitsIndexId::parse("1D", 1, n));
  for (int n = 3; n <= 6; ++n) t1.push_back(TitsIndexId::parse("2D", 1, n));
  t1.push_back(TitsIndexId::parse("E7", 0, 0));

  for (const auto& id : t1) {
    out.push_back({"lemma3/" + id.str(), [id](Rng&) {
                     auto rep = check_lemma_nondeg3(id);
                     bool ok = rep.applicable && rep.pass;
                     std::string why;
                     if (!rep.applicable) why = rep.reason;
                     for (const auto& g : rep.gaps) why += " gap " + root_str(g);
                     return std::make_pair(ok, why);
                   }});
  }

  out.push_back({"lemma3/e7-layer-sizes", [](Rng&) {
                   auto gi = build_graded_index(TitsIndexId::parse("E7", 0, 0));
                   auto layers = grading_layers(gi);
                   bool ok = layers[-1].size() == 27 && layers[0].size() == 72 &&
                             layers[1].size() == 27;
                   return std::make_pair(ok, ok ? std::string{} : "unexpected layer sizes");
                 }});

  for (int n = 1; n <= 8; ++n)
    for (int d = 1; d <= n; ++d)
      for (const char* fam : {"2A", "C", "1D", "2D"}) {
        TitsIndexId id = TitsIndexId::parse(fam, d, n);
        GradedIndex gi;
        try {
          gi = build_graded_index(id);
        } catch (const ConfigError&) {
          continue;
        }
        if (gi.table != 2) continue;
        auto rep = check_lemma_nondeg5(id);
        if (!rep.applicable) continue;  // single-root layer 2 is outside the lemma
        out.push_back({"lemma5/" + id.str(), [id](Rng&) {
                         auto r = check_lemma_nondeg5(id);
                         bool ok = r.applicable && r.pass;
                         std::string why = ok ? "" : r.reason;
                         for (const auto& g : r.gaps) why += " gap " + root_str(g);
                         return std::make_pair(ok, why);
                       }});
      }

  out.push_back({"tables/nondeg3-witness-rows", [](Rng&) -> std::pair<bool, std::string> {
                   std::vector<TableWitnessRow> rows;
                   for (int d : {2, 3, 4}) {
                     auto id = TitsIndexId::parse("1A", d, 0);
                     rows.push_back({id, mk_root(2 * d, {{0, 1}, {d, -1}}),
                                     mk_root(2 * d, {{d, 1}, {1, -1}}), std::nullopt});
                     rows.push_back({id, mk_root(2 * d, {{0, 1}, {1, -1}}),
                                     mk_root(2 * d, {{d, 1}, {0, -1}}), std::nullopt});
                     rows.push_back({id, mk_root(2 * d, {{d, 1}, {d + 1, -1}}),
                                     mk_root(2 * d, {{d + 1, 1}, {0, -1}}), std::nullopt});
                   }
                   for (int n : {2, 4, 6}) {
                     auto id = TitsIndexId::parse("B", 0, n);
                     rows.push_back({id, mk_root(n, {{n - 1, -1}}),
                                     mk_root(n, {{n - 1, 1}, {0, -1}}), std::nullopt});
                     rows.push_back({id, mk_root(n, {{0, 1}, {n - 1, -1}}),
                                     mk_root(n, {{n - 1, 1}}), std::nullopt});
                     rows.push_back({id, mk_root(n, {{0, 1}}),
                                     mk_root(n, {{n - 1, 1}, {0, -1}}), std::nullopt});
                   }
                   for (int d : {2, 4}) {
                     auto id = TitsIndexId::parse("C", d, d);
                     rows.push_back({id, mk_root(d, {{0, -1}, {1, -1}}), mk_root(d, {{0, 2}}),
                                     std::nullopt});
                     rows.push_back({id, mk_root(d, {{0, -2}}), mk_root(d, {{0, 1}, {1, 1}}),
                                     std::nullopt});
                     rows.push_back({id, mk_root(d, {{0, 1}, {1, -1}}), mk_root(d, {{1, 2}}),
                                     std::nullopt});
                   }
                   {
                     auto id = TitsIndexId::parse("1D", 4, 4);
                     rows.push_back({id, mk_root(4, {{0, -1}, {1, -1}}),
                                     mk_root(4, {{1, 1}, {2, 1}}), std::nullopt});
                     rows.push_back({id, mk_root(4, {{0, 1}, {1, -1}}),
                                     mk_root(4, {{1, 1}, {2, 1}}), std::nullopt});
                   }
                   for (int n : {3, 5}) {
                     auto id = TitsIndexId::parse("1D", 1, n);
                     rows.push_back({id, mk_root(n, {{0, 1}, {n - 1, -1}}),
                                     mk_root(n, {{n - 1, 1}, {1, -1}}), std::nullopt});
                     rows.push_back({id, mk_root(n, {{0, 1}, {1, -1}}),
                                     mk_root(n, {{n - 1, 1}, {0, -1}}), std::nullopt});
                   }
                   for (const auto& row : rows) {
                     auto gi = build_graded_index(row.id);
                     if (!lemma3_witness_ok(gi, row.alpha, row.beta))
                       return {false, row.id.str() + " alpha=" + root_str(row.alpha)};
                   }
                   return {true, ""};
                 }});

  out.push_back({"tables/nondeg5-witness-rows", [](Rng&) -> std::pair<bool, std::string> {
                   std::vector<TableWitnessRow> rows;
                   for (auto [d, n] : std::vector<std::pair<int, int>>{{2, 5}, {2, 7}, {3, 8}}) {
                     auto id = TitsIndexId::parse("2A", d, n);
                     rows.push_back({id, mk_root(n + 1, {{d, 1}, {n, -1}}),
                                     mk_root(n + 1, {{n, 1}, {0, -1}}),
                                     mk_root(n + 1, {{n - 1, 1}, {d, -1}})});
                     rows.push_back({id, mk_root(n + 1, {{0, 1}, {d, -1}}),
                                     mk_root(n + 1, {{n, 1}, {0, -1}}),
                                     mk_root(n + 1, {{d, 1}, {1, -1}})});
                   }
                   for (auto [d, n] : std::vector<std::pair<int, int>>{{2, 3}, {2, 8}, {4, 6}}) {
                     auto id = TitsIndexId::parse("C", d, n);
                     rows.push_back({id, mk_root(n, {{0, 1}, {n - 1, -1}}),
                                     mk_root(n, {{n - 1, 2}}),
                                     mk_root(n, {{n - 2, 1}, {0, -1}})});
                   }
                   for (auto [d, n] : std::vector<std::pair<int, int>>{{4, 6}, {4, 8}}) {
                     auto id = TitsIndexId::parse("2D", d, n);
                     rows.push_back({id, mk_root(n, {{0, 1}, {n - 1, -1}}),
                                     mk_root(n, {{n - 1, 1}, {n - 2, 1}}),
                                     mk_root(n, {{n - 2, 1}, {0, -1}})});
                   }
                   for (const auto& row : rows) {
                     auto gi = build_graded_index(row.id);
                     if (!lemma5_witness_ok(gi, row.alpha, row.beta, *row.gamma))
                       return {false, row.id.str() + " alpha=" + root_str(row.alpha)};
                   }
                   return {true, ""};
                 }});
  return out;
}

// --------------------------------------------------------- special-case suites

std::vector<Check> so3_checks(const Ring& R, int trials, std::uint64_t seed) {
  std::vector<Check> out;
  auto res = so3_normalizer_check(R, std::max(4, trials / 16), seed);
  out.push_back({"predicate/iff-square-and-double-vanish", [res](Rng&) {
                   return std::make_pair(res.predicate_matches, std::string{});
                 }});
  out.push_back({"displayed/w-matrix", [res](Rng&) {
                   return std::make_pair(res.displayed_w, std::string{});
                 }});
  out.push_back({"displayed/w-square", [res](Rng&) {
                   return std::make_pair(res.displayed_w_square, std::string{});
                 }});
  return out;
}

std::vector<Check> bc1_checks(const Ring& R, int trials, std::uint64_t seed) {
  std::vector<Check> out;
  int n = std::max(4, trials / 16);
  auto main_case = bc1_counterexample(R, R.one(), R.from_int(2), R.from_int(5), n, seed);
  out.push_back({"construct/x1-y2-z5", [main_case](Rng&) {
                   return std::make_pair(main_case.constructible, std::string{});
                 }});
  out.push_back({"weyl/extensional-swap", [main_case](Rng&) {
                   return std::make_pair(main_case.weyl_extensional, std::string{});
                 }});
  out.push_back({"displayed/w-matrix", [main_case](Rng&) {
                   return std::make_pair(main_case.displayed_w, main_case.w_str);
                 }});
  out.push_back({"displayed/w-square", [main_case](Rng&) {
                   return std::make_pair(main_case.displayed_w_square, main_case.w_sq_str);
                 }});
  out.push_back({"square/non-central", [main_case](Rng&) {
                   return std::make_pair(!main_case.square_central, main_case.w_sq_str);
                 }});
  auto degen = bc1_counterexample(R, R.one(), R.one(), R.from_int(2), n, seed ^ 1);
  out.push_back({"degenerate/x1-y1-z2-central", [degen](Rng&) {
                   bool ok = degen.constructible && degen.displayed_w &&
                             degen.displayed_w_square && degen.square_central;
                   return std::make_pair(ok, degen.w_sq_str);
                 }});
  auto rejected = bc1_counterexample(R, R.one(), R.one(), R.one(), n, seed ^ 2);
  out.push_back({"reject/x1-y1-z1", [rejected](Rng&) {
                   return std::make_pair(!rejected.constructible, std::string{});
                 }});
  return out;
}

}  // namespace

int SuiteReport::passed() const {
  int n = 0;
  for (const auto& c : checks) n += c.pass ? 1 : 0;
  return n;
}

int SuiteReport::failed() const { return static_cast<int>(checks.size()) - passed(); }

std::string SuiteReport::to_json() const {
  Json j;
  j["suite"] = config.suite;
  j["ring"] = config.ring_spec;
  j["trials"] = config.trials;
  j["seed"] = config.seed;
  if (!config.realization.empty()) j["realization"] = config.realization;
  if (!config.mutation.empty()) j["mutation"] = config.mutation;
  Json arr = Json::array();
  for (const auto& c : checks) {
    Json e;
    e["name"] = c.name;
    e["status"] = c.pass ? "pass" : "fail";
    if (!c.pass) e["witness"] = c.witness;
    arr.push_back(e);
  }
  j["checks"] = arr;
  j["summary"] = Json{{"pass", passed()}, {"fail", failed()}};
  return j.dump(2) + "\n";
}

std::vector<std::string> known_suites() {
  return {"composition",    "albert-identities", "freudenthal",
          "clifford",       "weyl:<realization>", "square-formula",
          "lemmas-root-combinatorics", "so3-normalizer", "bc1-counterexample"};
}

SuiteReport run_suite(const SuiteConfig& config) {
  if (config.trials < 1) throw UsageError("trials must be positive");
  Ring R = Ring::parse(config.ring_spec);

  std::string name = config.suite;
  std::string realization = config.realization;
  if (name.rfind("weyl:", 0) == 0) {
    realization = name.substr(5);
    name = "weyl";
  }
  if (!config.mutation.empty() && config.mutation != "zorn-cross-flip" &&
      config.mutation != "albert-sharp-drop")
    throw UsageError("unknown mutation '" + config.mutation + "'");

  std::vector<Check> checks;
  if (name == "composition") {
    checks = composition_checks(R, config.trials, config.mutation);
  } else if (name == "albert-identities") {
    checks = albert_checks(R, config.trials, config.mutation);
  } else if (name == "freudenthal") {
    checks = freudenthal_checks(R, config.trials);
  } else if (name == "clifford") {
    checks = clifford_checks(R, config.trials);
  } else if (name == "weyl") {
    if (realization.empty()) throw UsageError("the weyl suite needs a realization");
    checks = weyl_checks(R, realization, config.trials);
  } else if (name == "square-formula") {
    checks = square_formula_checks(R, config.trials, config.seed);
  } else if (name == "lemmas-root-combinatorics") {
    checks = lemma_checks();
  } else if (name == "so3-normalizer") {
    checks = so3_checks(R, config.trials, config.seed);
  } else if (name == "bc1-counterexample") {
    checks = bc1_checks(R, config.trials, config.seed);
  } else {
    throw UsageError("unknown suite '" + config.suite + "'");
  }

  SuiteReport report;
  report.config = config;
  report.config.realization = realization;
  report.checks.resize(checks.size());

  auto run_one = [&](size_t i) {
    CheckResult res;
    res.name = checks[i].name;
    Rng rng(config.seed ^ static_cast<std::uint64_t>(i));
    try {
      auto [pass, witness] = checks[i].body(rng);
      res.pass = pass;
      res.witness = pass ? "" : witness;
    } catch (const std::exception& e) {
      res.pass = false;
      res.witness = std::string("exception: ") + e.what();
    }
    report.checks[i] = res;
  };

#ifdef WEYLKIT_HAVE_OPENMP
  if (config.parallel) {
#pragma omp parallel for schedule(dynamic)
    for (size_t i = 0; i < checks.size(); ++i) run_one(i);
    return report;
  }
#endif
  for (size_t i = 0; i < checks.size(); ++i) run_one(i);
  return report;
}

}  // namespace weylkit
