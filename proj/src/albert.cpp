#include "weylkit/albert.hpp"

#include <sstream>

namespace weylkit {

Albert Albert::zero(const Ring& R) {
  return {R.zero(), R.zero(), R.zero(), Zorn::zero(R), Zorn::zero(R), Zorn::zero(R)};
}

Albert Albert::one(const Ring& R) {
  return {R.one(), R.one(), R.one(), Zorn::zero(R), Zorn::zero(R), Zorn::zero(R)};
}

Albert Albert::diag(const Elem& d1, const Elem& d2, const Elem& d3) {
  const Ring& R = d1.ring();
  return {d1, d2, d3, Zorn::zero(R), Zorn::zero(R), Zorn::zero(R)};
}

Albert Albert::operator+(const Albert& o) const {
  return {a1 + o.a1, a2 + o.a2, a3 + o.a3, c1 + o.c1, c2 + o.c2, c3 + o.c3};
}

Albert Albert::operator-() const { return {-a1, -a2, -a3, -c1, -c2, -c3}; }
Albert Albert::operator-(const Albert& o) const { return *this + (-o); }

Albert Albert::scaled(const Elem& k) const {
  return {a1 * k, a2 * k, a3 * k, c1.scaled(k), c2.scaled(k), c3.scaled(k)};
}

bool Albert::operator==(const Albert& o) const {
  return a1 == o.a1 && a2 == o.a2 && a3 == o.a3 && c1 == o.c1 && c2 == o.c2 && c3 == o.c3;
}

std::vector<Elem> Albert::coords() const {
  std::vector<Elem> out = {a1, a2, a3};
  for (const Zorn* z : {&c1, &c2, &c3})
    for (const Elem& e : z->coords()) out.push_back(e);
  return out;
}

Albert Albert::from_coords(const Ring& R, const std::vector<Elem>& c) {
  (void)R;
  if (c.size() != 27) throw UsageError("Albert element needs 27 coordinates");
  std::array<Elem, 8> u1 = {c[3], c[4], c[5], c[6], c[7], c[8], c[9], c[10]};
  std::array<Elem, 8> u2 = {c[11], c[12], c[13], c[14], c[15], c[16], c[17], c[18]};
  std::array<Elem, 8> u3 = {c[19], c[20], c[21], c[22], c[23], c[24], c[25], c[26]};
  return {c[0], c[1], c[2], Zorn::from_coords(u1), Zorn::from_coords(u2), Zorn::from_coords(u3)};
}

std::string Albert::str() const {
  std::ostringstream out;
  out << "[" << a1.str() << "," << a2.str() << "," << a3.str() << ";" << c1.str() << ";"
      << c2.str() << ";" << c3.str() << "]";
  return out.str();
}

Albert albert_sharp(const Albert& x) {
  return {x.a2 * x.a3 - zorn_q(x.c1),
          x.a1 * x.a3 - zorn_q(x.c2),
          x.a1 * x.a2 - zorn_q(x.c3),
          zorn_conj(x.c2 * x.c3) - x.c1.scaled(x.a1),
          zorn_conj(x.c3 * x.c1) - x.c2.scaled(x.a2),
          zorn_conj(x.c1 * x.c2) - x.c3.scaled(x.a3)};
}

Albert albert_cross(const Albert& x, const Albert& y) {
  return albert_sharp(x + y) - albert_sharp(x) - albert_sharp(y);
}

Elem albert_norm(const Albert& x) {
  Zorn prod = (x.c1 * x.c2) * x.c3;
  Elem trace = prod.a11 + prod.a22;  // <1, c1 c2 c3>
  return x.a1 * x.a2 * x.a3 + trace - x.a1 * zorn_q(x.c1) - x.a2 * zorn_q(x.c2) -
         x.a3 * zorn_q(x.c3);
}

Elem albert_trace(const Albert& x, const Albert& y) {
  return x.a1 * y.a1 + x.a2 * y.a2 + x.a3 * y.a3 + zorn_bilin(x.c1, y.c1) +
         zorn_bilin(x.c2, y.c2) + zorn_bilin(x.c3, y.c3);
}

Elem albert_trace_one(const Albert& x) { return x.a1 + x.a2 + x.a3; }

Albert u_operator(const Albert& x, const Albert& y) {
  return x.scaled(albert_trace(x, y)) - albert_cross(albert_sharp(x), y);
}

std::optional<Albert> albert_try_invert(const Albert& x) {
  auto ninv = try_invert(albert_norm(x));
  if (!ninv) return std::nullopt;
  return albert_sharp(x).scaled(*ninv);
}

Albert albert_sample(const Ring& R, Rng& rng) {
  return {R.sample(rng),        R.sample(rng),        R.sample(rng),
          zorn_sample(R, rng),  zorn_sample(R, rng),  zorn_sample(R, rng)};
}

Matrix trace_gram(const Ring& R) {
  Matrix g(R, 27, 27);
  for (int i = 0; i < 3; ++i) g.at(i, i) = R.one();
  for (int blk = 0; blk < 3; ++blk) {
    int o = 3 + 8 * blk;
    g.at(o, o + 7) = R.one();
    g.at(o + 7, o) = R.one();
    for (int k = 1; k <= 3; ++k) {
      g.at(o + k, o + k + 3) = R.from_int(-1);
      g.at(o + k + 3, o + k) = R.from_int(-1);
    }
  }
  return g;
}

NormPreservingMap NormPreservingMap::identity(const Ring& R) {
  return NormPreservingMap(Matrix::identity(R, 27));
}

NormPreservingMap NormPreservingMap::e6_torus(const Elem& mu1, const Elem& mu2, const Elem& mu3) {
  const Ring& R = mu1.ring();
  if (mu1 * mu2 * mu3 != R.one())
    throw UsageError("e6 torus parameters must have product 1, got " + (mu1 * mu2 * mu3).str());
  const Elem* mus[3] = {&mu1, &mu2, &mu3};
  Matrix m(R, 27, 27);
  for (int i = 0; i < 3; ++i) {
    Elem inv_sq = invert(*mus[i] * *mus[i]);
    m.at(i, i) = inv_sq;
    for (int k = 0; k < 8; ++k) m.at(3 + 8 * i + k, 3 + 8 * i + k) = *mus[i];
  }
  return NormPreservingMap(m);
}

std::optional<NormPreservingMap> NormPreservingMap::validate(const Matrix& m,
                                                             std::string* witness) {
  if (m.rows() != 27 || m.cols() != 27) throw UsageError("norm-map validation needs a 27x27 matrix");
  const Ring& R = m.ring();
  if (R.kind() == RingKind::Polynomial)
    throw ConfigError("norm-map validation over polynomial scalars is not supported");
  Ring P = Ring::polynomial(R, 27);
  Matrix lifted(P, 27, 27);
  for (int i = 0; i < 27; ++i)
    for (int j = 0; j < 27; ++j) lifted.at(i, j) = P.constant(m.at(i, j));
  std::vector<Elem> sym;
  for (int i = 0; i < 27; ++i) sym.push_back(P.var(i));
  Albert x = Albert::from_coords(P, sym);
  Albert gx = Albert::from_coords(P, lifted.apply(sym));
  Elem diff = albert_norm(gx) - albert_norm(x);
  if (!diff.is_zero()) {
    if (witness) *witness = diff.str().substr(0, 160);
    return std::nullopt;
  }
  return NormPreservingMap(m);
}

Albert NormPreservingMap::apply(const Albert& x) const {
  return Albert::from_coords(ring(), m_.apply(x.coords()));
}

NormPreservingMap NormPreservingMap::dagger() const {
  Matrix g = trace_gram(ring());
  return NormPreservingMap(g * m_.transpose() * g);
}

NormPreservingMap NormPreservingMap::inverse() const {
  auto inv = m_.try_inverse();
  if (!inv) throw InternalError("norm-preserving map is not invertible");
  return NormPreservingMap(*inv);
}

NormPreservingMap NormPreservingMap::inverse_dagger() const { return dagger().inverse(); }

NormPreservingMap NormPreservingMap::compose(const NormPreservingMap& inner) const {
  return NormPreservingMap(m_ * inner.m_);
}

}  // namespace weylkit
