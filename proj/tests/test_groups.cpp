#include "doctest.h"
#include "weylkit/groups.hpp"

using namespace weylkit;

namespace {

std::vector<Realization> all_realizations(const Ring& R) {
  return {Realization::make(RealKind::SL, 2, R),     Realization::make(RealKind::Sp, 2, R),
          Realization::make(RealKind::SpinB, 2, R),  Realization::make(RealKind::SpinD1, 3, R),
          Realization::make(RealKind::SpinDd, 4, R), Realization::make(RealKind::E7, 0, R),
          Realization::make(RealKind::SO3adj, 0, R), Realization::make(RealKind::SL3BC1, 0, R)};
}

}  // namespace

TEST_CASE("realization construction and validation") {
  Ring Q = Ring::rationals();
  CHECK(Realization::make(RealKind::SL, 1, Q).name() == "sl:1");
  CHECK(Realization::make(RealKind::SpinB, 1, Ring::modular(97)).space()->dim() == 3);
  CHECK_THROWS_AS(Realization::make(RealKind::SpinDd, 3, Q), ConfigError);
  CHECK_THROWS_AS(Realization::make(RealKind::SL, 5, Q), ConfigError);
  CHECK_THROWS_AS(Realization::parse("su:2", Q), ConfigError);
  CHECK(Realization::parse("spindd:4", Q).kind() == RealKind::SpinDd);
}

TEST_CASE("zero parameter gives the identity, parameters add") {
  Ring R = Ring::modular(97);
  for (const auto& real : all_realizations(R)) {
    INFO(real.name());
    for (int sign : {1, -1}) {
      CHECK(real.root_element(sign, real.zero_param()) == real.identity());
      Rng rng(31);
      for (int i = 0; i < 12; ++i) {
        Param p = real.sample_param(rng), q = real.sample_param(rng);
        GroupElement prod = real.mul(real.root_element(sign, p), real.root_element(sign, q));
        CHECK(prod == real.root_element(sign, real.param_add(p, q, sign)));
        // inverse parameter gives the group inverse
        CHECK(real.mul(real.root_element(sign, p),
                       real.root_element(sign, real.param_neg(p, sign))) == real.identity());
      }
    }
  }
}

TEST_CASE("group membership invariants for constructed elements") {
  for (const char* spec : {"zmod:97", "zmod:4", "rat"}) {
    Ring R = Ring::parse(spec);
    for (const auto& real : all_realizations(R)) {
      INFO(real.name(), " over ", spec);
      CHECK(real.is_member(real.identity()));
      Rng rng(37);
      for (int i = 0; i < 6; ++i) {
        Param p = real.sample_param(rng);
        for (int sign : {1, -1}) CHECK(real.is_member(real.root_element(sign, p)));
      }
      for (long lam : {1L, 2L, 3L}) {
        Elem l = R.from_int(lam);
        if (!is_unit(l)) continue;
        CHECK(real.is_member(real.torus_element(l)));
      }
    }
  }
}

TEST_CASE("SL block convention") {
  Ring Z = Ring::integers();
  auto sl2 = Realization::make(RealKind::SL, 2, Z);
  GroupElement t = sl2.root_element(1, Matrix::identity(Z, 2));
  // fixes M_- pointwise, adds M_+ into M_-
  const Matrix& m = t.mat();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      CHECK(m.at(i, j) == (i == j ? Z.one() : Z.zero()));
      CHECK(m.at(2 + i, 2 + j) == (i == j ? Z.one() : Z.zero()));
      CHECK(m.at(2 + i, j) == Z.zero());
      CHECK(m.at(i, 2 + j) == (i == j ? Z.one() : Z.zero()));
    }
}

TEST_CASE("SO3adj root elements match the displayed matrices") {
  Ring z4 = Ring::modular(4);
  auto so3 = Realization::make(RealKind::SO3adj, 0, z4);
  GroupElement tm = so3.root_element(-1, z4.one());
  Matrix expect = Matrix::identity(z4, 3);
  expect.at(1, 0) = z4.from_int(-1);
  expect.at(2, 0) = z4.from_int(-1);
  expect.at(2, 1) = z4.from_int(2);
  CHECK(tm.mat() == expect);

  Ring Q = Ring::rationals();
  auto so3q = Realization::make(RealKind::SO3adj, 0, Q);
  GroupElement tp = so3q.root_element(1, Q.from_int(3));
  CHECK(tp.mat().at(0, 1) == Q.from_int(-6));
  CHECK(tp.mat().at(0, 2) == Q.from_int(-9));
  CHECK(tp.mat().at(1, 2) == Q.from_int(3));
}

TEST_CASE("parabolic membership") {
  Ring Q = Ring::rationals();
  for (const auto& real : all_realizations(Q)) {
    INFO(real.name());
    CHECK(real.in_parabolic(real.identity(), 1));
    CHECK(real.in_parabolic(real.identity(), -1));
    Rng rng(41);
    // unipotents lie in their own parabolic
    for (int i = 0; i < 5; ++i) {
      Param p = real.sample_param(rng);
      CHECK(real.in_parabolic(real.root_element(1, p), 1));
      CHECK(real.in_parabolic(real.root_element(-1, p), -1));
    }
    CHECK(real.in_parabolic(real.torus_element(Q.from_int(2)), 1));
    CHECK(real.in_parabolic(real.torus_element(Q.from_int(2)), -1));
  }

  // t_+(p) with p invertible is in P+ only
  auto sl1 = Realization::make(RealKind::SL, 1, Q);
  GroupElement t = sl1.root_element(1, Matrix::identity(Q, 1));
  CHECK(sl1.in_parabolic(t, 1));
  CHECK(!sl1.in_parabolic(t, -1));

  auto e7 = Realization::make(RealKind::E7, 0, Q);
  GroupElement te = e7.root_element(1, Albert::one(Q));
  CHECK(e7.in_parabolic(te, 1));
  CHECK(!e7.in_parabolic(te, -1));
}

TEST_CASE("torus conjugation scales root parameters by the root character") {
  for (const char* spec : {"zmod:97", "rat"}) {
    Ring R = Ring::parse(spec);
    Elem lam = R.from_int(2);
    Rng rng(43);
    for (const auto& real : all_realizations(R)) {
      INFO(real.name());
      GroupElement h = real.torus_element(lam);
      GroupElement hi = real.inverse(h);
      for (int i = 0; i < 5; ++i) {
        Param p = real.sample_param(rng);
        // alpha(lambda) on the plus side: lambda^2 for the simply connected
        // rank-1 realizations, lambda for the adjoint SO3 and the ultrashort
        // parameter of the BC1 model (whose center scales by lambda^2)
        Elem chi = (real.kind() == RealKind::SO3adj || real.kind() == RealKind::SL3BC1)
                       ? lam
                       : lam * lam;
        GroupElement conj = real.mul(real.mul(h, real.root_element(1, p)), hi);
        CHECK(conj == real.root_element(1, real.param_scale(p, chi)));
        GroupElement conj2 = real.mul(real.mul(hi, real.root_element(-1, p)), h);
        CHECK(conj2 == real.root_element(-1, real.param_scale(p, chi)));
      }
    }
  }
}

TEST_CASE("unipotent parameter extraction round-trips") {
  Ring R = Ring::modular(97);
  for (const auto& real : all_realizations(R)) {
    INFO(real.name());
    Rng rng(47);
    for (int i = 0; i < 8; ++i) {
      Param p = real.sample_param(rng);
      for (int sign : {1, -1}) {
        GroupElement g = real.root_element(sign, p);
        auto q = real.unipotent_param(g, sign);
        REQUIRE(q.has_value());
        CHECK(real.param_eq(*q, p));
        // a generic torus element is not unipotent
        CHECK(!real.unipotent_param(real.torus_element(R.from_int(2)), sign).has_value());
      }
    }
  }
}

TEST_CASE("SpinDd factor order independence") {
  Ring R = Ring::modular(97);
  auto dd = Realization::make(RealKind::SpinDd, 4, R);
  Rng rng(53);
  for (int t = 0; t < 10; ++t) {
    Param p = dd.sample_param(rng);
    const Matrix& m = std::get<Matrix>(p);
    // reversed-order product of the same commuting factors
    Cliff acc = Cliff::one(dd.space());
    for (int i = 4 - 1; i >= 0; --i)
      for (int j = 4 - 1; j > i; --j) {
        Cliff f = Cliff::one(dd.space()) +
                  (Cliff::gen(dd.space(), i) * Cliff::gen(dd.space(), j)).scaled(m.at(i, j));
        acc = acc * f;
      }
    CHECK(GroupElement{acc} == dd.root_element(1, p));
  }
}

TEST_CASE("SL3BC1 two-step parameter group matches matrix multiplication") {
  Ring R = Ring::modular(97);
  auto bc = Realization::make(RealKind::SL3BC1, 0, R);
  Rng rng(59);
  for (int t = 0; t < 20; ++t) {
    Param p = bc.sample_param(rng), q = bc.sample_param(rng);
    CHECK(bc.mul(bc.root_element(1, p), bc.root_element(1, q)) ==
          bc.root_element(1, bc.param_add(p, q)));
  }
  // central coordinate commutes: elements t_+(0, y, 0)
  Triple a{R.zero(), R.from_int(3), R.zero()}, b{R.zero(), R.from_int(5), R.zero()};
  CHECK(bc.mul(bc.root_element(1, a), bc.root_element(1, b)) ==
        bc.mul(bc.root_element(1, b), bc.root_element(1, a)));
  // scalar action: (x, y, z) . k = (xk, yk^2, zk)
  Triple c{R.one(), R.from_int(2), R.from_int(3)};
  Param scaled = bc.param_scale(c, R.from_int(5));
  const Triple& s = std::get<Triple>(scaled);
  CHECK(s.x == R.from_int(5));
  CHECK(s.y == R.from_int(50));
  CHECK(s.z == R.from_int(15));
}

TEST_CASE("parameter validation") {
  Ring Z = Ring::integers();
  auto sp2 = Realization::make(RealKind::Sp, 2, Z);
  Matrix nonsym(Z, 2, 2);
  nonsym.at(0, 1) = Z.one();
  CHECK_THROWS_AS(sp2.root_element(1, nonsym), UsageError);

  auto dd = Realization::make(RealKind::SpinDd, 4, Z);
  Matrix bad(Z, 4, 4);
  bad.at(0, 0) = Z.one();
  CHECK_THROWS_AS(dd.root_element(1, bad), UsageError);

  CHECK_THROWS_AS(sp2.torus_element(Z.from_int(2)), UsageError);  // 2 not a unit in Z
}

TEST_CASE("parameter literal parsing") {
  Ring Q = Ring::rationals();
  auto sl2 = Realization::make(RealKind::SL, 2, Q);
  Param p = sl2.parse_param("1,0;1/2,1");
  CHECK(std::get<Matrix>(p).at(1, 0) == Q.parse_scalar("1/2"));
  auto so3 = Realization::make(RealKind::SO3adj, 0, Q);
  CHECK(std::get<Elem>(so3.parse_param("-2/3")) == Q.parse_scalar("-2/3"));
  auto bc = Realization::make(RealKind::SL3BC1, 0, Q);
  CHECK(std::get<Triple>(bc.parse_param("1,2,5")).y == Q.from_int(2));
}
