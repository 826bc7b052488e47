#include "weylkit/freudenthal.hpp"

#include <functional>
#include <sstream>

namespace weylkit {

FVector FVector::zero(const Ring& R) {
  return {R.zero(), Albert::zero(R), R.zero(), Albert::zero(R), R.zero()};
}

FVector FVector::make(const Elem& r, const Albert& b, const Elem& s, const Albert& c,
                      const Elem& t) {
  return {r, b, s, c, t};
}

bool FVector::operator==(const FVector& o) const {
  return r == o.r && b == o.b && s == o.s && c == o.c && t == o.t;
}

std::vector<Elem> FVector::coords() const {
  std::vector<Elem> out = {r};
  for (const Elem& e : b.coords()) out.push_back(e);
  out.push_back(s);
  for (const Elem& e : c.coords()) out.push_back(e);
  out.push_back(t);
  return out;
}

FVector FVector::from_coords(const Ring& R, const std::vector<Elem>& v) {
  if (v.size() != 57) throw UsageError("W element needs 57 scalars");
  std::vector<Elem> bc(v.begin() + 1, v.begin() + 28);
  std::vector<Elem> cc(v.begin() + 29, v.begin() + 56);
  return {v[0], Albert::from_coords(R, bc), v[28], Albert::from_coords(R, cc), v[56]};
}

std::string FVector::str() const {
  std::ostringstream out;
  out << "(" << r.str() << "," << b.str() << "," << s.str() << "," << c.str() << "," << t.str()
      << ")";
  return out.str();
}

FVector f_dotplus(const FVector& v, const FVector& w) {
  return {v.r + w.r, v.b + w.b, v.s + w.s - v.t * w.r - albert_trace(v.c, w.b), v.c + w.c,
          v.t + w.t};
}

FVector f_scale(const FVector& v, const Elem& k) {
  return {v.r * k, v.b.scaled(k), v.s * k * k, v.c.scaled(k), v.t * k};
}

FVector f_tau(const FVector& v) {
  const Ring& R = v.ring();
  Elem s2 = v.s + v.s + v.r * v.t + albert_trace(v.b, v.c);
  return {R.zero(), Albert::zero(R), s2, Albert::zero(R), R.zero()};
}

Elem f_theta(const FVector& v) {
  return v.s * v.s + v.s * albert_trace(v.b, v.c) + v.r * v.s * v.t +
         albert_trace(albert_sharp(v.b), albert_sharp(v.c)) - v.r * albert_norm(v.c) +
         v.t * albert_norm(v.b);
}

FVector f_sample(const Ring& R, Rng& rng) {
  return {R.sample(rng), albert_sample(R, rng), R.sample(rng), albert_sample(R, rng),
          R.sample(rng)};
}

FVector t_plus_action(const Albert& a, const FVector& v) {
  Albert as = albert_sharp(a);
  Elem na = albert_norm(a);
  return {v.r + albert_trace(a, v.b) + albert_trace(as, v.c) - na * v.t,
          v.b + albert_cross(a, v.c) - as.scaled(v.t),
          v.s - albert_trace(a, albert_sharp(v.c)) + albert_trace(as, v.c) * v.t -
              na * v.t * v.t,
          v.c - a.scaled(v.t),
          v.t};
}

FVector t_minus_action(const Albert& a, const FVector& v) {
  Albert as = albert_sharp(a);
  Elem na = albert_norm(a);
  return {v.r,
          v.b + a.scaled(v.r),
          v.s - albert_trace(a, albert_sharp(v.b)) - albert_trace(as, v.b) * v.r -
              na * v.r * v.r,
          v.c + albert_cross(a, v.b) + as.scaled(v.r),
          v.t - albert_trace(a, v.c) - albert_trace(as, v.b) - na * v.r};
}

FVector dil_action(const Elem& u, const FVector& v) {
  Elem ui = invert(u);
  Elem u3 = u * u * u, ui3 = ui * ui * ui;
  return {u3 * v.r, v.b.scaled(u), v.s, v.c.scaled(ui), ui3 * v.t};
}

FVector lmap_action(const NormPreservingMap& g, const NormPreservingMap& g_inv_dagger,
                    const FVector& v) {
  return {v.r, g.apply(v.b), v.s, g_inv_dagger.apply(v.c), v.t};
}

std::vector<FVector> FAutomorphism::generators(const Ring& R) {
  std::vector<FVector> gens;
  FVector z = FVector::zero(R);
  {
    FVector g = z;
    g.r = R.one();
    gens.push_back(g);
  }
  for (int i = 0; i < 27; ++i) {
    std::vector<Elem> c(27, R.zero());
    c[static_cast<size_t>(i)] = R.one();
    FVector g = z;
    g.b = Albert::from_coords(R, c);
    gens.push_back(g);
  }
  {
    FVector g = z;
    g.s = R.one();
    gens.push_back(g);
  }
  for (int i = 0; i < 27; ++i) {
    std::vector<Elem> c(27, R.zero());
    c[static_cast<size_t>(i)] = R.one();
    FVector g = z;
    g.c = Albert::from_coords(R, c);
    gens.push_back(g);
  }
  {
    FVector g = z;
    g.t = R.one();
    gens.push_back(g);
  }
  return gens;
}

FAutomorphism FAutomorphism::tabulate(const Ring& R,
                                      const std::function<FVector(const FVector&)>& f,
                                      std::vector<Step> word) {
  std::vector<FVector> img;
  for (const FVector& g : generators(R)) img.push_back(f(g));
  return FAutomorphism(R, std::move(img), std::move(word));
}

FAutomorphism FAutomorphism::identity(const Ring& R) {
  return FAutomorphism(R, generators(R), {});
}

FAutomorphism FAutomorphism::root_plus(const Albert& a) {
  Step st{Step::Kind::TPlus, a, std::nullopt, std::nullopt};
  return tabulate(a.ring(), [&](const FVector& v) { return t_plus_action(a, v); }, {st});
}

FAutomorphism FAutomorphism::root_minus(const Albert& a) {
  Step st{Step::Kind::TMinus, a, std::nullopt, std::nullopt};
  return tabulate(a.ring(), [&](const FVector& v) { return t_minus_action(a, v); }, {st});
}

FAutomorphism FAutomorphism::dilation(const Elem& u) {
  if (!is_unit(u)) throw UsageError("d(u) needs a unit, got " + u.str());
  Step st{Step::Kind::Dil, std::nullopt, u, std::nullopt};
  return tabulate(u.ring(), [&](const FVector& v) { return dil_action(u, v); }, {st});
}

FAutomorphism FAutomorphism::lmap(const NormPreservingMap& g) {
  NormPreservingMap gmd = g.inverse_dagger();
  Step st{Step::Kind::LMap, std::nullopt, std::nullopt, g};
  return tabulate(g.ring(), [&](const FVector& v) { return lmap_action(g, gmd, v); }, {st});
}

// Decompose v in the canonical order r, b-basis, s, c-basis, t (all the
// dotplus cross-corrections vanish in this order), push the generator
// images through, and recombine in the same order. The center passes
// through unchanged.
FVector FAutomorphism::apply(const FVector& v) const {
  if (v.ring() != ring_) throw UsageError("automorphism applied to element of another ring");
  FVector acc = f_scale(img_[0], v.r);
  auto bc = v.b.coords();
  for (int i = 0; i < 27; ++i)
    acc = f_dotplus(acc, f_scale(img_[static_cast<size_t>(1 + i)], bc[static_cast<size_t>(i)]));
  FVector center = FVector::zero(ring_);
  center.s = v.s;
  acc = f_dotplus(acc, center);
  auto cc = v.c.coords();
  for (int i = 0; i < 27; ++i)
    acc = f_dotplus(acc, f_scale(img_[static_cast<size_t>(29 + i)], cc[static_cast<size_t>(i)]));
  acc = f_dotplus(acc, f_scale(img_[56], v.t));
  return acc;
}

FAutomorphism FAutomorphism::compose(const FAutomorphism& inner) const {
  if (ring_ != inner.ring_) throw UsageError("composing automorphisms over different rings");
  std::vector<FVector> img;
  for (const FVector& g : inner.img_) img.push_back(apply(g));
  std::vector<Step> word = word_;
  word.insert(word.end(), inner.word_.begin(), inner.word_.end());
  return FAutomorphism(ring_, std::move(img), std::move(word));
}

FAutomorphism FAutomorphism::inverse() const {
  FAutomorphism acc = identity(ring_);
  for (auto it = word_.rbegin(); it != word_.rend(); ++it) {
    FAutomorphism step = identity(ring_);
    switch (it->kind) {
      case Step::Kind::TPlus: step = root_plus(-*it->a); break;
      case Step::Kind::TMinus: step = root_minus(-*it->a); break;
      case Step::Kind::Dil: step = dilation(invert(*it->u)); break;
      case Step::Kind::LMap: step = lmap(it->g->inverse()); break;
    }
    acc = acc.compose(step);
  }
  return acc;
}

bool FAutomorphism::operator==(const FAutomorphism& o) const {
  if (ring_ != o.ring_) return false;
  for (size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != o.img_[i]) return false;
  return true;
}

}  // namespace weylkit
