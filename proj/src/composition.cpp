#include "weylkit/composition.hpp"

#include <sstream>

namespace weylkit {

Elem dot3(const std::array<Elem, 3>& a, const std::array<Elem, 3>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

std::array<Elem, 3> cross3(const std::array<Elem, 3>& a, const std::array<Elem, 3>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

namespace {

std::array<Elem, 3> vadd(const std::array<Elem, 3>& a, const std::array<Elem, 3>& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

std::array<Elem, 3> vneg(const std::array<Elem, 3>& a) { return {-a[0], -a[1], -a[2]}; }

std::array<Elem, 3> vscale(const std::array<Elem, 3>& a, const Elem& k) {
  return {a[0] * k, a[1] * k, a[2] * k};
}

std::array<Elem, 3> zero3(const Ring& R) { return {R.zero(), R.zero(), R.zero()}; }

}  // namespace

Zorn Zorn::zero(const Ring& R) { return {R.zero(), zero3(R), zero3(R), R.zero()}; }
Zorn Zorn::one(const Ring& R) { return {R.one(), zero3(R), zero3(R), R.one()}; }

Zorn Zorn::operator+(const Zorn& o) const {
  return {a11 + o.a11, vadd(x, o.x), vadd(y, o.y), a22 + o.a22};
}

Zorn Zorn::operator-() const { return {-a11, vneg(x), vneg(y), -a22}; }
Zorn Zorn::operator-(const Zorn& o) const { return *this + (-o); }

Zorn Zorn::scaled(const Elem& k) const { return {a11 * k, vscale(x, k), vscale(y, k), a22 * k}; }

Zorn Zorn::operator*(const Zorn& o) const {
  return {a11 * o.a11 + dot3(x, o.y),
          vadd(vadd(vscale(o.x, a11), vscale(x, o.a22)), vneg(cross3(y, o.y))),
          vadd(vadd(vscale(y, o.a11), vscale(o.y, a22)), cross3(x, o.x)),
          a22 * o.a22 + dot3(y, o.x)};
}

bool Zorn::operator==(const Zorn& o) const {
  return a11 == o.a11 && x == o.x && y == o.y && a22 == o.a22;
}

std::array<Elem, 8> Zorn::coords() const { return {a11, x[0], x[1], x[2], y[0], y[1], y[2], a22}; }

Zorn Zorn::from_coords(const std::array<Elem, 8>& c) {
  return {c[0], {c[1], c[2], c[3]}, {c[4], c[5], c[6]}, c[7]};
}

std::string Zorn::str() const {
  std::ostringstream out;
  out << "(" << a11.str() << ",(" << x[0].str() << "," << x[1].str() << "," << x[2].str() << "),("
      << y[0].str() << "," << y[1].str() << "," << y[2].str() << ")," << a22.str() << ")";
  return out.str();
}

Elem zorn_q(const Zorn& p) { return p.a11 * p.a22 - dot3(p.x, p.y); }

Zorn zorn_conj(const Zorn& p) { return {p.a22, vneg(p.x), vneg(p.y), p.a11}; }

Elem zorn_bilin(const Zorn& p, const Zorn& q) {
  return p.a11 * q.a22 + q.a11 * p.a22 - dot3(p.x, q.y) - dot3(q.x, p.y);
}

Zorn zorn_sample(const Ring& R, Rng& rng) {
  std::array<Elem, 8> c = {R.sample(rng), R.sample(rng), R.sample(rng), R.sample(rng),
                           R.sample(rng), R.sample(rng), R.sample(rng), R.sample(rng)};
  return Zorn::from_coords(c);
}

int CompAlgebra::dim() const {
  switch (kind) {
    case CompKind::Base: return 1;
    case CompKind::Doubled: return 2;
    case CompKind::Matrix2: return 4;
    case CompKind::Zorn: return 8;
  }
  throw InternalError("unreachable composition kind");
}

std::vector<Elem> CompAlgebra::zero() const {
  return std::vector<Elem>(static_cast<size_t>(dim()), ring.zero());
}

std::vector<Elem> CompAlgebra::one() const {
  switch (kind) {
    case CompKind::Base: return {ring.one()};
    case CompKind::Doubled: return {ring.one(), ring.one()};
    case CompKind::Matrix2: return {ring.one(), ring.zero(), ring.zero(), ring.one()};
    case CompKind::Zorn: {
      auto c = Zorn::one(ring).coords();
      return std::vector<Elem>(c.begin(), c.end());
    }
  }
  throw InternalError("unreachable composition kind");
}

std::vector<Elem> CompAlgebra::add(const std::vector<Elem>& u, const std::vector<Elem>& v) const {
  std::vector<Elem> r;
  for (size_t i = 0; i < u.size(); ++i) r.push_back(u[i] + v[i]);
  return r;
}

std::vector<Elem> CompAlgebra::mul(const std::vector<Elem>& u, const std::vector<Elem>& v) const {
  switch (kind) {
    case CompKind::Base: return {u[0] * v[0]};
    case CompKind::Doubled: return {u[0] * v[0], u[1] * v[1]};
    case CompKind::Matrix2:
      // row-major [[a,b],[c,d]]
      return {u[0] * v[0] + u[1] * v[2], u[0] * v[1] + u[1] * v[3], u[2] * v[0] + u[3] * v[2],
              u[2] * v[1] + u[3] * v[3]};
    case CompKind::Zorn: {
      std::array<Elem, 8> a = {u[0], u[1], u[2], u[3], u[4], u[5], u[6], u[7]};
      std::array<Elem, 8> b = {v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7]};
      auto c = (Zorn::from_coords(a) * Zorn::from_coords(b)).coords();
      return std::vector<Elem>(c.begin(), c.end());
    }
  }
  throw InternalError("unreachable composition kind");
}

std::vector<Elem> CompAlgebra::conj(const std::vector<Elem>& u) const {
  switch (kind) {
    case CompKind::Base: return u;
    case CompKind::Doubled: return {u[1], u[0]};
    case CompKind::Matrix2: return {u[3], -u[1], -u[2], u[0]};
    case CompKind::Zorn: {
      std::array<Elem, 8> a = {u[0], u[1], u[2], u[3], u[4], u[5], u[6], u[7]};
      auto c = zorn_conj(Zorn::from_coords(a)).coords();
      return std::vector<Elem>(c.begin(), c.end());
    }
  }
  throw InternalError("unreachable composition kind");
}

Elem CompAlgebra::q(const std::vector<Elem>& u) const {
  switch (kind) {
    case CompKind::Base: return u[0] * u[0];
    case CompKind::Doubled: return u[0] * u[1];
    case CompKind::Matrix2: return u[0] * u[3] - u[1] * u[2];
    case CompKind::Zorn: {
      std::array<Elem, 8> a = {u[0], u[1], u[2], u[3], u[4], u[5], u[6], u[7]};
      return zorn_q(Zorn::from_coords(a));
    }
  }
  throw InternalError("unreachable composition kind");
}

Elem CompAlgebra::bilin(const std::vector<Elem>& u, const std::vector<Elem>& v) const {
  return q(add(u, v)) - q(u) - q(v);
}

std::vector<Elem> CompAlgebra::sample(Rng& rng) const {
  std::vector<Elem> r;
  for (int i = 0; i < dim(); ++i) r.push_back(ring.sample(rng));
  return r;
}

}  // namespace weylkit
