#include "doctest.h"
#include "weylkit/albert.hpp"

using namespace weylkit;

TEST_CASE("sharp, norm, trace on simple elements") {
  Ring Z = Ring::integers();
  Albert one = Albert::one(Z);
  CHECK(albert_sharp(one) == one);
  CHECK(albert_norm(one) == Z.one());
  CHECK(albert_trace(one, one) == Z.from_int(3));

  Albert d = Albert::diag(Z.from_int(2), Z.from_int(3), Z.from_int(5));
  CHECK(albert_sharp(d) == Albert::diag(Z.from_int(15), Z.from_int(10), Z.from_int(6)));
  CHECK(albert_norm(d) == Z.from_int(30));

  // all zero diagonal, every octonion entry the identity: N = <1,1> = 2
  Albert j = Albert::zero(Z);
  j.c1 = j.c2 = j.c3 = Zorn::one(Z);
  CHECK(albert_norm(j) == Z.from_int(2));
}

TEST_CASE("trilinear trace form is association-independent") {
  // N uses <1, (c1 c2) c3>; the other association must agree even though
  // octonion multiplication is nonassociative
  for (const char* spec : {"int", "zmod:2", "zmod:97"}) {
    Ring R = Ring::parse(spec);
    Rng rng(21);
    for (int i = 0; i < 100; ++i) {
      Zorn u = zorn_sample(R, rng), v = zorn_sample(R, rng), w = zorn_sample(R, rng);
      Zorn left = (u * v) * w, right = u * (v * w);
      CHECK(left.a11 + left.a22 == right.a11 + right.a22);
    }
  }
}

TEST_CASE("cubic norm structure axioms") {
  for (const char* spec : {"zmod:97", "zmod:2", "int", "zmod:4"}) {
    Ring R = Ring::parse(spec);
    Rng rng(42);
    Albert one = Albert::one(R);
    for (int t = 0; t < 60; ++t) {
      Albert x = albert_sample(R, rng), y = albert_sample(R, rng);
      CHECK(albert_cross(one, x) == one.scaled(albert_trace(one, x)) - x);
      CHECK(albert_sharp(albert_sharp(x)) == x.scaled(albert_norm(x)));
      CHECK(albert_norm(x + y) == albert_norm(x) + albert_trace(albert_sharp(x), y) +
                                      albert_trace(x, albert_sharp(y)) + albert_norm(y));
      CHECK(albert_norm(albert_sharp(x)) == albert_norm(x) * albert_norm(x));
    }
  }
}

TEST_CASE("derived cubic identities") {
  for (const char* spec : {"zmod:97", "zmod:2"}) {
    Ring R = Ring::parse(spec);
    Rng rng(7);
    Albert one = Albert::one(R);
    for (int t = 0; t < 60; ++t) {
      Albert x = albert_sample(R, rng), y = albert_sample(R, rng), z = albert_sample(R, rng);
      Elem tx = albert_trace_one(x), txs = albert_trace_one(albert_sharp(x));
      CHECK(albert_trace_one(x) == albert_trace(one, x));

      // symmetry of the trilinear form
      CHECK(albert_trace(albert_cross(x, y), z) == albert_trace(x, albert_cross(y, z)));
      CHECK(albert_trace(albert_cross(x, y), z) == albert_trace(albert_cross(x, z), y));

      CHECK(albert_trace(one, albert_cross(x, y)) ==
            albert_trace(one, x) * albert_trace(one, y) - albert_trace(x, y));

      Albert xs = albert_sharp(x);
      CHECK(albert_cross(xs, albert_cross(x, y)) ==
            x.scaled(albert_trace(xs, y)) + y.scaled(albert_norm(x)));
      CHECK(albert_cross(x, albert_cross(xs, y)) ==
            xs.scaled(albert_trace(x, y)) + y.scaled(albert_norm(x)));
      CHECK(albert_sharp(albert_cross(x, y)) + albert_cross(xs, albert_sharp(y)) ==
            x.scaled(albert_trace(x, albert_sharp(y))) + y.scaled(albert_trace(xs, y)));
      CHECK(albert_trace(xs, x) == albert_norm(x) * R.from_int(3));
      CHECK(albert_norm(albert_cross(x, y)) ==
            albert_trace(xs, y) * albert_trace(x, albert_sharp(y)) -
                albert_norm(x) * albert_norm(y));
      CHECK(albert_cross(xs, x) == one.scaled(tx * txs) - one.scaled(albert_norm(x)) -
                                       x.scaled(txs) - xs.scaled(tx));
    }
  }
}

TEST_CASE("U operator and inversion") {
  Ring Q = Ring::rationals();
  Albert one = Albert::one(Q);
  Rng rng(11);
  for (int t = 0; t < 40; ++t) {
    Albert y = albert_sample(Q, rng);
    CHECK(u_operator(one, y) == y);
  }

  Albert d211 = Albert::diag(Q.from_int(2), Q.one(), Q.one());
  CHECK(u_operator(d211, one) == Albert::diag(Q.from_int(4), Q.one(), Q.one()));

  CHECK(albert_try_invert(one).value() == one);
  Albert d = Albert::diag(Q.from_int(2), Q.from_int(3), Q.from_int(5));
  Albert dinv = albert_try_invert(d).value();
  CHECK(dinv == Albert::diag(Q.parse_scalar("1/2"), Q.parse_scalar("1/3"), Q.parse_scalar("1/5")));

  // N = 2 is not a unit mod 4
  Ring z4 = Ring::modular(4);
  CHECK(!albert_try_invert(Albert::diag(z4.from_int(2), z4.one(), z4.one())).has_value());

  // Jordan composition and inverse laws on invertible samples
  for (const char* spec : {"zmod:97", "zmod:2", "rat"}) {
    Ring R = Ring::parse(spec);
    Rng rng2(3);
    int invertibles = 0;
    for (int t = 0; t < 80; ++t) {
      Albert x = albert_sample(R, rng2), y = albert_sample(R, rng2);
      Elem nx = albert_norm(x);
      CHECK(albert_norm(u_operator(x, y)) == nx * nx * albert_norm(y));
      auto xi = albert_try_invert(x);
      if (xi) {
        ++invertibles;
        CHECK(u_operator(x, *xi) == x);
        CHECK(albert_norm(x) * albert_norm(*xi) == R.one());
        CHECK(u_operator(x, u_operator(*xi, y)) == y);
      }
    }
    CHECK(invertibles > 10);
  }
}

TEST_CASE("trace gram matrix is involutive and matches T") {
  Ring Z = Ring::integers();
  Matrix g = trace_gram(Z);
  CHECK((g * g).is_identity());
  Rng rng(5);
  for (int t = 0; t < 30; ++t) {
    Albert x = albert_sample(Z, rng), y = albert_sample(Z, rng);
    auto cx = x.coords();
    auto gy = g.apply(y.coords());
    Elem dot = Z.zero();
    for (int i = 0; i < 27; ++i) dot += cx[static_cast<size_t>(i)] * gy[static_cast<size_t>(i)];
    CHECK(dot == albert_trace(x, y));
  }
}

TEST_CASE("dagger adjoint") {
  Ring Q = Ring::rationals();
  auto id = NormPreservingMap::identity(Q);
  CHECK(id.dagger() == id);

  auto g = NormPreservingMap::e6_torus(Q.from_int(2), Q.from_int(3), Q.parse_scalar("1/6"));
  auto gd = g.dagger();
  // T(g e_i, e_j) == T(e_i, g^dagger e_j) over all basis pairs
  for (int i = 0; i < 27; ++i)
    for (int j = 0; j < 27; ++j) {
      std::vector<Elem> ei, ej;
      for (int k = 0; k < 27; ++k) {
        ei.push_back(Q.from_int(k == i ? 1 : 0));
        ej.push_back(Q.from_int(k == j ? 1 : 0));
      }
      Albert x = Albert::from_coords(Q, ei), y = Albert::from_coords(Q, ej);
      CHECK(albert_trace(g.apply(x), y) == albert_trace(x, gd.apply(y)));
    }
  CHECK(gd.dagger() == g);

  // g(x#) = g^{-dagger}(x)#
  auto gmd = g.inverse_dagger();
  Rng rng(13);
  for (int t = 0; t < 40; ++t) {
    Albert x = albert_sample(Q, rng);
    CHECK(g.apply(albert_sharp(x)) == albert_sharp(gmd.apply(x)));
  }
  CHECK(gmd.inverse_dagger() == g);

  // the dagger image of a norm-preserving map is itself norm-preserving,
  // certified symbolically
  CHECK(NormPreservingMap::validate(gmd.matrix()).has_value());
  CHECK(NormPreservingMap::validate(gd.matrix()).has_value());
}

TEST_CASE("e6 torus maps") {
  Ring Q = Ring::rationals();
  auto id3 = NormPreservingMap::e6_torus(Q.one(), Q.one(), Q.one());
  CHECK(id3 == NormPreservingMap::identity(Q));

  auto g = NormPreservingMap::e6_torus(Q.from_int(2), Q.from_int(3), Q.parse_scalar("1/6"));
  CHECK(albert_norm(g.apply(Albert::one(Q))) == Q.one());
  Rng rng(17);
  for (int t = 0; t < 60; ++t) {
    Albert x = albert_sample(Q, rng);
    CHECK(albert_norm(g.apply(x)) == albert_norm(x));
  }

  Ring z97 = Ring::modular(97);
  // 2*2*73 = 292 = 3*97 + 1
  auto h = NormPreservingMap::e6_torus(z97.from_int(2), z97.from_int(2), z97.from_int(73));
  Rng rng2(19);
  for (int t = 0; t < 60; ++t) {
    Albert x = albert_sample(z97, rng2);
    CHECK(albert_norm(h.apply(x)) == albert_norm(x));
  }

  CHECK_THROWS_AS(NormPreservingMap::e6_torus(Q.from_int(2), Q.from_int(3), Q.one()), UsageError);
}

TEST_CASE("symbolic norm-preservation validation") {
  Ring z7 = Ring::modular(7);
  CHECK(NormPreservingMap::validate(Matrix::identity(z7, 27)).has_value());

  // 2I scales N by 8 = 1 mod 7: over zmod:7 it is genuinely norm-preserving,
  // so use the integers to reject it
  Ring Z = Ring::integers();
  std::string witness;
  auto rejected = NormPreservingMap::validate(Matrix::identity(Z, 27).scaled(Z.from_int(2)),
                                              &witness);
  CHECK(!rejected.has_value());
  CHECK(!witness.empty());

  // torus maps validate symbolically over the rationals
  Ring Q = Ring::rationals();
  auto g = NormPreservingMap::e6_torus(Q.from_int(2), Q.from_int(3), Q.parse_scalar("1/6"));
  CHECK(NormPreservingMap::validate(g.matrix()).has_value());

  // and a non-preserving diagonal over zmod:7 is rejected
  Matrix bad = Matrix::identity(z7, 27);
  bad.at(0, 0) = z7.from_int(3);
  CHECK(!NormPreservingMap::validate(bad).has_value());
}

TEST_CASE("a corrupted sharp breaks N(x#) = N(x)^2") {
  Ring R = Ring::modular(97);
  auto bad_sharp = [](const Albert& x) {
    Albert s = albert_sharp(x);
    s.c3 = zorn_conj(x.c1 * x.c2);  // dropped -a3 c3 term
    return s;
  };
  Rng rng(23);
  bool caught = false;
  for (int i = 0; i < 100 && !caught; ++i) {
    Albert x = albert_sample(R, rng);
    if (albert_norm(bad_sharp(x)) != albert_norm(x) * albert_norm(x)) caught = true;
  }
  CHECK(caught);
}
