#include "doctest.h"
#include "weylkit/clifford.hpp"

using namespace weylkit;

namespace {

Cliff rand_cliff(const QuadSpacePtr& sp, Rng& rng) {
  std::map<std::uint32_t, Elem> t;
  int n = sp->dim();
  for (int k = 0; k < 6; ++k) {
    std::uint32_t m = static_cast<std::uint32_t>(rng.below(1u << n));
    Elem c = sp->ring.sample(rng);
    if (!c.is_zero()) t.emplace(m, c);
  }
  return Cliff(sp, std::move(t));
}

}  // namespace

TEST_CASE("clifford relations on the split space") {
  Ring Z = Ring::integers();
  auto sp = make_split_bd_space(Z, 1);  // e_-, f, e_+ with q0(x) = x^2
  Cliff em = Cliff::gen(sp, 0), f = Cliff::gen(sp, 1), ep = Cliff::gen(sp, 2);
  CHECK(Cliff::one(sp) * f == f);
  CHECK(em * ep + ep * em == Cliff::one(sp));
  CHECK(f * f == Cliff::one(sp));
  CHECK((em * em).terms().empty());

  // v^2 = q(v) for module vectors
  for (const char* spec : {"int", "zmod:4", "zmod:97"}) {
    Ring R = Ring::parse(spec);
    for (int rank : {1, 2, 3, 4}) {
      auto spr = make_split_bd_space(R, rank);
      Rng rng(7);
      for (int i = 0; i < 25; ++i) {
        std::vector<Elem> coords;
        for (int k = 0; k < spr->dim(); ++k) coords.push_back(R.sample(rng));
        Cliff v = Cliff::vector(spr, coords);
        CHECK(v * v == Cliff::scalar(spr, spr->q_of(coords)));
      }
    }
  }
}

TEST_CASE("associativity on sampled elements up to rank 8") {
  Ring R = Ring::modular(97);
  for (int d : {2, 4}) {
    auto sp = make_hyperbolic_space(R, d);  // rank 2d
    Rng rng(11);
    for (int i = 0; i < 30; ++i) {
      Cliff a = rand_cliff(sp, rng), b = rand_cliff(sp, rng), c = rand_cliff(sp, rng);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
    }
  }
}

TEST_CASE("grading: even part closed under multiplication") {
  Ring R = Ring::modular(5);
  auto sp = make_split_bd_space(R, 2);
  Rng rng(13);
  for (int i = 0; i < 40; ++i) {
    Cliff a = rand_cliff(sp, rng), b = rand_cliff(sp, rng);
    // project to even parts
    std::map<std::uint32_t, Elem> ea, eb;
    for (const auto& [m, c] : a.terms())
      if (__builtin_popcount(m) % 2 == 0) ea.emplace(m, c);
    for (const auto& [m, c] : b.terms())
      if (__builtin_popcount(m) % 2 == 0) eb.emplace(m, c);
    CHECK((Cliff(sp, ea) * Cliff(sp, eb)).is_even());
  }
}

TEST_CASE("main involution") {
  Ring Z = Ring::integers();
  auto sp = make_split_bd_space(Z, 1);
  Cliff em = Cliff::gen(sp, 0), ep = Cliff::gen(sp, 2);
  CHECK(main_involution(Cliff::one(sp)) == Cliff::one(sp));
  CHECK(main_involution(em * ep) == ep * em);
  CHECK(ep * em == Cliff::one(sp) - em * ep);

  Ring R = Ring::modular(97);
  auto sp2 = make_hyperbolic_space(R, 3);
  Rng rng(17);
  for (int i = 0; i < 30; ++i) {
    Cliff a = rand_cliff(sp2, rng), b = rand_cliff(sp2, rng);
    CHECK(main_involution(a * b) == main_involution(b) * main_involution(a));
    CHECK(main_involution(main_involution(a)) == a);
  }
  // trivial on the module
  for (int i = 0; i < sp2->dim(); ++i)
    CHECK(main_involution(Cliff::gen(sp2, i)) == Cliff::gen(sp2, i));
}

TEST_CASE("spin membership") {
  Ring R = Ring::modular(97);
  for (int rank : {1, 2, 3}) {
    auto sp = make_split_bd_space(R, rank);
    CHECK(spin_check(Cliff::one(sp)));
    CHECK(!spin_check(Cliff::gen(sp, 0)));  // odd

    // root elements t_(p) = 1 + (p e_-) for p in M0
    Rng rng(19);
    for (int i = 0; i < 20; ++i) {
      std::vector<Elem> coords(static_cast<size_t>(sp->dim()), R.zero());
      for (int k = 1; k <= rank; ++k) coords[static_cast<size_t>(k)] = R.sample(rng);
      Cliff p = Cliff::vector(sp, coords);
      Cliff g = Cliff::one(sp) + p * Cliff::gen(sp, 0);
      CHECK(spin_check(g));
      // and the homomorphism property t(p) t(p') = t(p + p')
      std::vector<Elem> coords2(static_cast<size_t>(sp->dim()), R.zero());
      for (int k = 1; k <= rank; ++k) coords2[static_cast<size_t>(k)] = R.sample(rng);
      Cliff p2 = Cliff::vector(sp, coords2);
      Cliff g2 = Cliff::one(sp) + p2 * Cliff::gen(sp, 0);
      std::vector<Elem> sum;
      for (size_t k = 0; k < coords.size(); ++k) sum.push_back(coords[k] + coords2[k]);
      CHECK(g * g2 == Cliff::one(sp) + Cliff::vector(sp, sum) * Cliff::gen(sp, 0));
    }
  }
}

TEST_CASE("conjugation keeps module vectors in the module") {
  Ring R = Ring::modular(97);
  auto sp = make_split_bd_space(R, 2);
  Rng rng(23);
  for (int i = 0; i < 20; ++i) {
    std::vector<Elem> pc(static_cast<size_t>(sp->dim()), R.zero());
    pc[1] = R.sample(rng);
    pc[2] = R.sample(rng);
    Cliff g = Cliff::one(sp) + Cliff::vector(sp, pc) * Cliff::gen(sp, 0);
    std::vector<Elem> m;
    for (int k = 0; k < sp->dim(); ++k) m.push_back(R.sample(rng));
    auto conj = conjugate_vector(g, m);
    // q is preserved by Spin conjugation
    CHECK(sp->q_of(conj) == sp->q_of(m));
  }

  // identity fixes everything
  std::vector<Elem> m = {R.one(), R.from_int(2), R.from_int(3), R.from_int(4)};
  CHECK(conjugate_vector(Cliff::one(sp), m) == m);
}

TEST_CASE("w = x e_- + q0(x)^{-1} x e_+ swaps the isotropic lines") {
  Ring Q = Ring::rationals();
  auto sp = make_split_bd_space(Q, 3);  // n = 2 case of the odd family
  // x in M0 with q0(x) a unit
  std::vector<Elem> xc(static_cast<size_t>(sp->dim()), Q.zero());
  xc[1] = Q.from_int(2);
  xc[2] = Q.from_int(1);
  xc[3] = Q.from_int(3);
  Elem q0x = sp->q_of(xc);
  CHECK(q0x == Q.from_int(11));  // 2*1 + 3^2
  Cliff x = Cliff::vector(sp, xc);
  Cliff w = x * Cliff::gen(sp, 0) + x.scaled(invert(q0x)) * Cliff::gen(sp, 4);
  CHECK(spin_check(w));
  // e_- line goes to the e_+ line
  std::vector<Elem> em(static_cast<size_t>(sp->dim()), Q.zero());
  em[0] = Q.one();
  auto img = conjugate_vector(w, em);
  CHECK(!img[static_cast<size_t>(sp->dim() - 1)].is_zero());
  for (int k = 0; k < sp->dim() - 1; ++k) CHECK(img[static_cast<size_t>(k)].is_zero());
}
