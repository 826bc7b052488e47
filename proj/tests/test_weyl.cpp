#include <set>

#include "doctest.h"
#include "weylkit/weyl.hpp"

using namespace weylkit;

namespace {

Matrix m1(const Ring& R, long v) {
  Matrix m(R, 1, 1);
  m.at(0, 0) = R.from_int(v);
  return m;
}

}  // namespace

TEST_CASE("weyl triple criterion, SL(1)") {
  Ring Q = Ring::rationals();
  auto sl1 = Realization::make(RealKind::SL, 1, Q);
  Rng rng(1);
  CHECK(is_weyl_triple(sl1, m1(Q, 1), m1(Q, -1), m1(Q, 1), 10, rng));
  CHECK(!is_weyl_triple(sl1, m1(Q, 1), m1(Q, 1), m1(Q, 1), 10, rng));
  CHECK(!is_weyl_triple(sl1, m1(Q, 1), m1(Q, -1), m1(Q, 2), 10, rng));
  // over Z/2, -1 = 1 and (1,1,1) is a Weyl triple
  Ring z2 = Ring::modular(2);
  auto sl1z2 = Realization::make(RealKind::SL, 1, z2);
  CHECK(is_weyl_triple(sl1z2, m1(z2, 1), m1(z2, 1), m1(z2, 1), 4, rng));
}

TEST_CASE("weyl triple criterion, SL3BC1 displayed components") {
  Ring Q = Ring::rationals();
  auto bc = Realization::make(RealKind::SL3BC1, 0, Q);
  Rng rng(2);
  // (x,y,z) = (1,1,2): components (-2, 1, -1) and (1, 1, 2)
  Triple p1{Q.one(), Q.one(), Q.from_int(2)};
  Triple p2{Q.from_int(-2), Q.one(), Q.from_int(-1)};
  Triple p3{Q.one(), Q.one(), Q.from_int(2)};
  CHECK(is_weyl_triple(bc, p1, p2, p3, 10, rng));
  Triple bad{Q.from_int(-2), Q.one(), Q.one()};
  CHECK(!is_weyl_triple(bc, p1, bad, p3, 10, rng));

  auto ext = unique_extension(bc, p1);
  REQUIRE(ext.has_value());
  CHECK(bc.param_eq(ext->first, p2));
  CHECK(bc.param_eq(ext->second, p3));
}

TEST_CASE("build_weyl matrices and clifford elements") {
  Ring Q = Ring::rationals();
  auto sl1 = Realization::make(RealKind::SL, 1, Q);
  auto w = build_weyl(sl1, m1(Q, 1));
  REQUIRE(w.has_value());
  Matrix expect(Q, 2, 2);
  expect.at(0, 1) = Q.one();
  expect.at(1, 0) = Q.from_int(-1);
  CHECK(w->mat() == expect);
  CHECK(w->mat() * w->mat() == -Matrix::identity(Q, 2));

  CHECK(!build_weyl(sl1, m1(Q, 0)).has_value());
  auto sl1z = Realization::make(RealKind::SL, 1, Ring::integers());
  CHECK(!build_weyl(sl1z, m1(Ring::integers(), 2)).has_value());

  // SpinB n=1: w = x e_- + q0(x)^{-1} x e_+
  auto spin = Realization::make(RealKind::SpinB, 1, Q);
  std::vector<Elem> x = {Q.from_int(3)};
  auto ws = build_weyl(spin, x);
  REQUIRE(ws.has_value());
  auto sp = spin.space();
  Cliff xe = Cliff::vector(sp, {Q.zero(), Q.from_int(3), Q.zero()});
  Cliff expected = xe * Cliff::gen(sp, 0) + xe.scaled(Q.parse_scalar("1/9")) * Cliff::gen(sp, 2);
  CHECK(ws->cliff() == expected);
}

TEST_CASE("the E7 base point matches the displayed swap map") {
  Ring Q = Ring::rationals();
  auto e7 = Realization::make(RealKind::E7, 0, Q);
  auto w = build_weyl(e7, Albert::one(Q));
  REQUIRE(w.has_value());
  Rng rng(3);
  for (int i = 0; i < 30; ++i) {
    FVector v = f_sample(Q, rng);
    FVector img = w->fauto().apply(v);
    FVector expect{-v.t, -v.c, v.s + albert_trace(v.b, v.c) + v.r * v.t, v.b, v.r};
    CHECK(img == expect);
  }
}

TEST_CASE("the general E7 Weyl element acts by the U-operator display") {
  // w(r,b,s,c,t) = (-N(x) t, -N(x) U_{x^{-1}}(c), s + T(b,c) + rt,
  //                 N(x)^{-1} U_x(b), N(x)^{-1} r)
  Ring R = Ring::modular(97);
  auto e7 = Realization::make(RealKind::E7, 0, R);
  Rng rng(77);
  int found = 0;
  while (found < 3) {
    Albert x = albert_sample(R, rng);
    if (!is_unit(albert_norm(x))) continue;
    ++found;
    auto w = build_weyl(e7, x);
    REQUIRE(w.has_value());
    Elem nx = albert_norm(x);
    Elem nxi = invert(nx);
    Albert xi = *albert_try_invert(x);
    for (int i = 0; i < 10; ++i) {
      FVector v = f_sample(R, rng);
      FVector img = w->fauto().apply(v);
      FVector expect{-(nx * v.t), u_operator(xi, v.c).scaled(-nx),
                     v.s + albert_trace(v.b, v.c) + v.r * v.t, u_operator(x, v.b).scaled(nxi),
                     nxi * v.r};
      CHECK(img == expect);
    }
  }
}

TEST_CASE("conjugation closed forms") {
  Rng rng(4);
  Ring z97 = Ring::modular(97);

  // SL d=2, x = I: f(p) = -p both directions
  auto sl2 = Realization::make(RealKind::SL, 2, z97);
  auto w2 = build_weyl(sl2, Matrix::identity(z97, 2));
  for (int t = 0; t < 20; ++t) {
    Param p = sl2.sample_param(rng);
    Param f = weyl_conjugate_root(sl2, *w2, Matrix::identity(z97, 2), 1, p);
    CHECK(sl2.param_eq(f, sl2.param_neg(p)));
  }

  // every realization with a closed form, random constructible x
  for (const char* spec : {"zmod:97", "rat"}) {
    Ring R = Ring::parse(spec);
    std::vector<Realization> reals = {
        Realization::make(RealKind::SL, 2, R),     Realization::make(RealKind::Sp, 2, R),
        Realization::make(RealKind::SpinB, 2, R),  Realization::make(RealKind::SpinD1, 3, R),
        Realization::make(RealKind::SpinDd, 4, R), Realization::make(RealKind::E7, 0, R),
        Realization::make(RealKind::SO3adj, 0, R)};
    for (const auto& real : reals) {
      INFO(real.name(), " over ", spec);
      Param x = real.one_param();
      auto w = build_weyl(real, x);
      REQUIRE(w.has_value());
      int n = real.kind() == RealKind::E7 ? 4 : 12;
      for (int t = 0; t < n; ++t) {
        Param p = real.sample_param(rng);
        for (int sign : {1, -1})
          CHECK_NOTHROW((void)weyl_conjugate_root(real, *w, x, sign, p));
      }
    }
  }

  // E7 with x = 1: w t_+(a) w^{-1} = t_-(-a)
  Ring Q = Ring::rationals();
  auto e7 = Realization::make(RealKind::E7, 0, Q);
  auto we = build_weyl(e7, Albert::one(Q));
  for (int t = 0; t < 3; ++t) {
    Albert a = albert_sample(Q, rng);
    Param f = weyl_conjugate_root(e7, *we, Albert::one(Q), 1, a);
    CHECK(e7.param_eq(f, -a));
  }
}

TEST_CASE("weyl squares equal alpha_vee(-1)") {
  Rng rng(5);
  for (const char* spec : {"zmod:97", "rat"}) {
    Ring R = Ring::parse(spec);
    std::vector<Realization> reals = {
        Realization::make(RealKind::SL, 1, R),     Realization::make(RealKind::SL, 3, R),
        Realization::make(RealKind::Sp, 2, R),     Realization::make(RealKind::SpinB, 1, R),
        Realization::make(RealKind::SpinB, 2, R),  Realization::make(RealKind::SpinD1, 3, R),
        Realization::make(RealKind::SpinDd, 4, R), Realization::make(RealKind::E7, 0, R)};
    for (const auto& real : reals) {
      INFO(real.name(), " over ", spec);
      int wanted = real.kind() == RealKind::E7 ? 3 : 8;
      int found = 0;
      for (int t = 0; t < 200 && found < wanted; ++t) {
        Param x = t == 0 ? real.one_param() : real.sample_param(rng);
        if (!real.constructible(x)) continue;
        ++found;
        auto res = weyl_square(real, x, 6, rng);
        CHECK(res.canonical);
        CHECK(res.central);
      }
      CHECK(found == wanted);
    }
  }
}

TEST_CASE("weyl identities") {
  Rng rng(6);
  Ring z97 = Ring::modular(97);
  for (auto real : {Realization::make(RealKind::SL, 2, z97),
                    Realization::make(RealKind::Sp, 2, z97),
                    Realization::make(RealKind::SpinB, 2, z97)}) {
    INFO(real.name());
    for (int t = 0; t < 5; ++t) {
      Param x = t == 0 ? real.one_param() : real.sample_param(rng);
      if (!real.constructible(x)) continue;
      auto res = weyl_identities_check(real, x, 5, rng);
      CHECK(res.pass());
    }
  }
  Ring Q = Ring::rationals();
  auto e7 = Realization::make(RealKind::E7, 0, Q);
  auto res = weyl_identities_check(e7, Albert::one(Q), 2, rng);
  CHECK(res.pass());
}

TEST_CASE("square formula in SL(3)") {
  for (const char* spec : {"zmod:97", "rat", "zmod:4"}) {
    auto results = square_formula_check_sl3(Ring::parse(spec), 6, 42);
    CHECK(results.size() == 36);
    for (const auto& r : results) {
      INFO(root_str(r.alpha), " ", root_str(r.beta), " over ", spec);
      CHECK(r.pass);
      // parity exactly +-2 on the diagonal pairs, +-1 otherwise
      if (r.beta == r.alpha || r.beta == negate(r.alpha))
        CHECK(r.parity % 2 == 0);
      else
        CHECK(r.parity % 2 != 0);
    }
  }
}

TEST_CASE("square formula in the ultrashort model") {
  for (const char* spec : {"zmod:97", "rat"}) {
    auto results = square_formula_check_bc1(Ring::parse(spec), 8, 43);
    REQUIRE(results.size() == 3);
    CHECK(results[0].case_tag == "odd-doubled");
    CHECK(results[0].parity == 1);
    CHECK(results[1].case_tag == "odd-doubled");
    CHECK(results[2].case_tag == "even");
    CHECK(results[2].parity == 2);
    for (const auto& r : results) CHECK(r.pass);
  }
}

TEST_CASE("unique extensions") {
  Ring Q = Ring::rationals();
  auto sl1 = Realization::make(RealKind::SL, 1, Q);
  auto ext = unique_extension(sl1, m1(Q, 2));
  REQUIRE(ext.has_value());
  CHECK(std::get<Matrix>(ext->first).at(0, 0) == Q.parse_scalar("-1/2"));
  CHECK(std::get<Matrix>(ext->second).at(0, 0) == Q.from_int(2));

  Ring Z = Ring::integers();
  auto sl1z = Realization::make(RealKind::SL, 1, Z);
  CHECK(!unique_extension(sl1z, m1(Z, 2)).has_value());
}

TEST_CASE("unique extensions agree with brute force over tiny rings") {
  for (long mod : {2L, 3L}) {
    Ring R = Ring::modular(mod);
    auto sl1 = Realization::make(RealKind::SL, 1, R);
    std::vector<Elem> residues;
    for (long v = 0; v < mod; ++v) residues.push_back(R.from_int(v));

    for (const Elem& xe : residues) {
      Matrix x(R, 1, 1);
      x.at(0, 0) = xe;
      // exhaustive search over all (y, z)
      std::vector<std::pair<Elem, Elem>> found;
      for (const Elem& ye : residues)
        for (const Elem& ze : residues) {
          Matrix y(R, 1, 1), z(R, 1, 1);
          y.at(0, 0) = ye;
          z.at(0, 0) = ze;
          GroupElement w = sl1.mul(
              sl1.mul(sl1.root_element(1, x), sl1.root_element(-1, y)), sl1.root_element(1, z));
          GroupElement wi = sl1.inverse(w);
          bool ok = true;
          std::set<std::string> img_plus, img_minus;
          for (const Elem& pe : residues) {
            Matrix p(R, 1, 1);
            p.at(0, 0) = pe;
            auto cp = sl1.unipotent_param(
                sl1.mul(sl1.mul(w, sl1.root_element(1, p)), wi), -1);
            auto cm = sl1.unipotent_param(
                sl1.mul(sl1.mul(w, sl1.root_element(-1, p)), wi), 1);
            if (!cp || !cm) {
              ok = false;
              break;
            }
            img_plus.insert(sl1.param_str(*cp));
            img_minus.insert(sl1.param_str(*cm));
          }
          // conjugation must map U+ onto U- and vice versa
          if (ok && img_plus.size() == residues.size() && img_minus.size() == residues.size())
            found.push_back({ye, ze});
        }
      auto ext = unique_extension(sl1, x);
      if (ext) {
        REQUIRE(found.size() == 1);
        CHECK(found[0].first == std::get<Matrix>(ext->first).at(0, 0));
        CHECK(found[0].second == std::get<Matrix>(ext->second).at(0, 0));
      } else {
        CHECK(found.empty());
      }
    }
  }
}

TEST_CASE("braid relations") {
  for (const char* spec : {"zmod:97", "rat", "int"}) {
    auto res = braid_check_sl3(Ring::parse(spec), 10, 44);
    CHECK(res.braid_m3);
    CHECK(res.commute_m2);
    CHECK(res.parameter_free);
  }
}

TEST_CASE("SO3 normalizer exception") {
  auto z4res = so3_normalizer_check(Ring::modular(4), 8, 45);
  CHECK(z4res.predicate_matches);
  CHECK(z4res.displayed_w);
  CHECK(z4res.displayed_w_square);
  CHECK(z4res.found_nontrivial);  // a = 2 qualifies mod 4

  auto qres = so3_normalizer_check(Ring::rationals(), 8, 46);
  CHECK(qres.predicate_matches);
  CHECK(!qres.found_nontrivial);  // only a = 0 over the rationals

  auto z2res = so3_normalizer_check(Ring::modular(2), 8, 47);
  CHECK(z2res.predicate_matches);
  CHECK(!z2res.found_nontrivial);  // a^2 = a over Z/2

  // mod 4, u=2, v=0, x=1: w^2 = [[1,0,0],[2,1,2],[0,0,1]] != 1
  Ring z4 = Ring::modular(4);
  auto so3 = Realization::make(RealKind::SO3adj, 0, z4);
  GroupElement w = so3.mul(
      so3.mul(so3.root_element(1, z4.from_int(3)), so3.root_element(-1, z4.from_int(-1))),
      so3.root_element(1, z4.from_int(1)));
  Matrix wsq = w.mat() * w.mat();
  Matrix expect = Matrix::identity(z4, 3);
  expect.at(1, 0) = z4.from_int(2);
  expect.at(1, 2) = z4.from_int(2);
  CHECK(wsq == expect);
  CHECK(wsq != Matrix::identity(z4, 3));
}

TEST_CASE("ultrashort counterexample") {
  Ring Q = Ring::rationals();
  auto res = bc1_counterexample(Q, Q.one(), Q.from_int(2), Q.from_int(5), 10, 48);
  CHECK(res.constructible);
  CHECK(res.weyl_extensional);
  CHECK(res.displayed_w);
  CHECK(res.displayed_w_square);
  CHECK(!res.square_central);
  // frozen: w^2 = diag(2/3, 9/4, 2/3)
  CHECK(res.w_sq_str == "[2/3,0,0; 0,9/4,0; 0,0,2/3]");

  auto res2 = bc1_counterexample(Q, Q.one(), Q.one(), Q.from_int(2), 10, 49);
  CHECK(res2.constructible);
  CHECK(res2.displayed_w);
  CHECK(res2.displayed_w_square);
  CHECK(res2.square_central);  // w^2 = 1 here
  CHECK(res2.w_sq_str == "[1,0,0; 0,1,0; 0,0,1]");

  auto res3 = bc1_counterexample(Q, Q.one(), Q.one(), Q.one(), 10, 50);
  CHECK(!res3.constructible);  // x y z - y^2 = 0
}
