#include "doctest.h"
#include "weylkit/matrix.hpp"

using namespace weylkit;

namespace {

Matrix from_ints(const Ring& R, const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Elem>> e;
  for (const auto& r : rows) {
    std::vector<Elem> row;
    for (long v : r) row.push_back(R.from_int(v));
    e.push_back(row);
  }
  return Matrix::from_rows(R, e);
}

}  // namespace

TEST_CASE("matrix multiplication basics") {
  Ring Z = Ring::integers();
  Matrix I3 = Matrix::identity(Z, 3);
  Matrix x = from_ints(Z, {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}});
  CHECK(I3 * x == x);
  CHECK(x * I3 == x);

  Matrix j = from_ints(Z, {{0, -1}, {1, 0}});
  CHECK(j * j == -Matrix::identity(Z, 2));

  Matrix a = from_ints(Z, {{1, 0}, {1, 1}});
  Matrix b = from_ints(Z, {{1, -1}, {0, 1}});
  CHECK(a * b == from_ints(Z, {{1, -1}, {1, 0}}));

  Matrix rect = from_ints(Z, {{1, 2, 3}, {4, 5, 6}});
  CHECK_THROWS_AS((void)(rect * rect), UsageError);

  Rng rng(3);
  for (int t = 0; t < 25; ++t) {
    Matrix m1(Z, 3, 3), m2(Z, 3, 3), m3(Z, 3, 3);
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < 3; ++k) {
        m1.at(i, k) = Z.sample(rng);
        m2.at(i, k) = Z.sample(rng);
        m3.at(i, k) = Z.sample(rng);
      }
    CHECK((m1 * m2) * m3 == m1 * (m2 * m3));
  }
}

TEST_CASE("determinant and char poly") {
  Ring Z = Ring::integers();
  CHECK(Matrix::identity(Z, 4).det() == Z.one());
  Matrix m = from_ints(Z, {{2, 1}, {1, 1}});
  CHECK(m.det() == Z.one());
  Matrix s = from_ints(Z, {{0, 1}, {1, 0}});
  CHECK(s.det() == Z.from_int(-1));
  Matrix big = from_ints(Z, {{1, 2, 0}, {3, 1, 4}, {0, 2, 2}});
  // cofactor expansion by hand: 1*(2-8) - 2*(6-0) + 0 = -18
  CHECK(big.det() == Z.from_int(-18));

  auto cp = from_ints(Z, {{2, 0}, {0, 3}}).char_poly();
  REQUIRE(cp.size() == 3);
  CHECK(cp[0] == Z.one());
  CHECK(cp[1] == Z.from_int(-5));
  CHECK(cp[2] == Z.from_int(6));
}

TEST_CASE("try_inverse") {
  Ring Z = Ring::integers();
  for (int n : {1, 2, 3, 5}) {
    auto inv = Matrix::identity(Z, n).try_inverse();
    REQUIRE(inv.has_value());
    CHECK(*inv == Matrix::identity(Z, n));
  }

  Ring Q = Ring::rationals();
  Matrix d(Q, 2, 2);
  d.at(0, 0) = Q.from_int(2);
  d.at(1, 1) = Q.from_int(3);
  auto di = d.try_inverse();
  REQUIRE(di.has_value());
  CHECK(di->at(0, 0) == Q.parse_scalar("1/2"));
  CHECK(di->at(1, 1) == Q.parse_scalar("1/3"));
  CHECK((*di * d).is_identity());

  // det = 2, not a unit mod 4
  Ring z4 = Ring::modular(4);
  Matrix m(z4, 2, 2);
  m.at(0, 0) = z4.from_int(2);
  m.at(1, 1) = z4.one();
  CHECK(!m.try_inverse().has_value());

  // zero-divisor ring where inversion still works
  Matrix u = Matrix::identity(z4, 3);
  u.at(0, 1) = z4.from_int(2);
  u.at(1, 2) = z4.from_int(3);
  auto ui = u.try_inverse();
  REQUIRE(ui.has_value());
  CHECK((u * *ui).is_identity());
  CHECK((*ui * u).is_identity());

  Ring z97 = Ring::modular(97);
  Rng rng(17);
  int inverted = 0;
  for (int t = 0; t < 40; ++t) {
    Matrix r(z97, 4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) r.at(i, j) = z97.sample(rng);
    auto ri = r.try_inverse();
    if (ri) {
      ++inverted;
      CHECK((r * *ri).is_identity());
      CHECK((*ri * r).is_identity());
    }
  }
  CHECK(inverted > 20);
}
