#include "weylkit/ring.hpp"

#include <sstream>

namespace weylkit {

namespace {

mpz_class mod_reduce(const mpz_class& v, const mpz_class& n) {
  mpz_class r = v % n;
  if (r < 0) r += n;
  return r;
}

}  // namespace

Ring Ring::integers() {
  auto d = std::make_shared<Data>();
  d->kind = RingKind::Integers;
  return Ring(d);
}

Ring Ring::rationals() {
  auto d = std::make_shared<Data>();
  d->kind = RingKind::Rationals;
  return Ring(d);
}

Ring Ring::modular(const mpz_class& n) {
  if (n < 2) throw ConfigError("modular ring needs modulus >= 2, got " + n.get_str());
  auto d = std::make_shared<Data>();
  d->kind = RingKind::Modular;
  d->modulus = n;
  return Ring(d);
}

Ring Ring::polynomial(const Ring& base, int nvars) {
  if (base.kind() == RingKind::Polynomial)
    throw ConfigError("polynomial ring over a polynomial ring is not supported");
  if (nvars < 1) throw ConfigError("polynomial ring needs at least one variable");
  auto d = std::make_shared<Data>();
  d->kind = RingKind::Polynomial;
  d->base = std::make_shared<Data>(*base.data_);
  d->num_vars = nvars;
  return Ring(d);
}

Ring Ring::parse(const std::string& spec) {
  if (spec == "int") return integers();
  if (spec == "rat") return rationals();
  if (spec.rfind("zmod:", 0) == 0) {
    std::string n = spec.substr(5);
    if (n.empty() || n.find_first_not_of("0123456789") != std::string::npos)
      throw ConfigError("bad modulus in ring spec '" + spec + "'");
    return modular(mpz_class(n));
  }
  if (spec.rfind("poly:", 0) == 0) {
    // poly:<base>:<k> where <base> itself may contain ':' (zmod:<n>)
    std::string rest = spec.substr(5);
    auto pos = rest.rfind(':');
    if (pos == std::string::npos) throw ConfigError("bad ring spec '" + spec + "'");
    std::string base = rest.substr(0, pos);
    std::string k = rest.substr(pos + 1);
    if (base != "int" && base.rfind("zmod:", 0) != 0)
      throw ConfigError("polynomial base must be int or zmod:<n> in '" + spec + "'");
    if (k.empty() || k.find_first_not_of("0123456789") != std::string::npos)
      throw ConfigError("bad variable count in ring spec '" + spec + "'");
    return polynomial(parse(base), std::stoi(k));
  }
  throw ConfigError("unknown ring spec '" + spec + "' (expected int|rat|zmod:<n>|poly:<base>:<k>)");
}

std::string Ring::spec_string() const {
  switch (kind()) {
    case RingKind::Integers: return "int";
    case RingKind::Rationals: return "rat";
    case RingKind::Modular: return "zmod:" + data_->modulus.get_str();
    case RingKind::Polynomial:
      return "poly:" + base().spec_string() + ":" + std::to_string(num_vars());
  }
  throw InternalError("unreachable ring kind");
}

const mpz_class& Ring::modulus() const {
  if (kind() != RingKind::Modular) throw InternalError("modulus() on non-modular ring");
  return data_->modulus;
}

Ring Ring::base() const {
  if (kind() != RingKind::Polynomial) throw InternalError("base() on non-polynomial ring");
  return Ring(data_->base);
}

int Ring::num_vars() const {
  if (kind() != RingKind::Polynomial) throw InternalError("num_vars() on non-polynomial ring");
  return data_->num_vars;
}

bool Ring::operator==(const Ring& other) const {
  if (kind() != other.kind()) return false;
  switch (kind()) {
    case RingKind::Integers:
    case RingKind::Rationals: return true;
    case RingKind::Modular: return data_->modulus == other.data_->modulus;
    case RingKind::Polynomial:
      return num_vars() == other.num_vars() && base() == other.base();
  }
  return false;
}

Elem Ring::zero() const { return from_int(0); }
Elem Ring::one() const { return from_int(1); }

Elem Ring::from_int(long v) const { return from_mpz(mpz_class(v)); }

Elem Ring::from_mpz(const mpz_class& v) const {
  Elem e(*this);
  switch (kind()) {
    case RingKind::Integers: e.z_ = v; break;
    case RingKind::Rationals: e.q_ = mpq_class(v); break;
    case RingKind::Modular: e.z_ = mod_reduce(v, data_->modulus); break;
    case RingKind::Polynomial: {
      auto terms = std::make_shared<PolyTerms>();
      Elem c = base().from_mpz(v);
      if (!c.is_zero()) terms->emplace(Monomial(num_vars(), 0), c);
      e.p_ = std::move(terms);
      break;
    }
  }
  return e;
}

Elem Ring::var(int i) const {
  if (kind() != RingKind::Polynomial) throw UsageError("var() needs a polynomial ring");
  if (i < 0 || i >= num_vars()) throw UsageError("variable index out of range");
  Elem e(*this);
  auto terms = std::make_shared<PolyTerms>();
  Monomial m(num_vars(), 0);
  m[i] = 1;
  terms->emplace(std::move(m), base().one());
  e.p_ = std::move(terms);
  return e;
}

Elem Ring::constant(const Elem& base_elem) const {
  if (kind() != RingKind::Polynomial) throw UsageError("constant() needs a polynomial ring");
  if (base_elem.ring() != base()) throw UsageError("constant() got element of the wrong base ring");
  Elem e(*this);
  auto terms = std::make_shared<PolyTerms>();
  if (!base_elem.is_zero()) terms->emplace(Monomial(num_vars(), 0), base_elem);
  e.p_ = std::move(terms);
  return e;
}

Elem Ring::sample(Rng& rng) const {
  switch (kind()) {
    case RingKind::Integers: return from_int(rng.range(-4, 4));
    case RingKind::Rationals: {
      Elem e(*this);
      mpq_class q(static_cast<long>(rng.range(-4, 4)), static_cast<long>(rng.range(1, 4)));
      q.canonicalize();
      e.q_ = q;
      return e;
    }
    case RingKind::Modular: {
      const mpz_class& n = data_->modulus;
      if (n.fits_ulong_p()) return from_mpz(mpz_class(rng.below(n.get_ui())));
      // wide modulus: assemble enough 64-bit words, reduce
      size_t words = (mpz_sizeinbase(n.get_mpz_t(), 2) + 63) / 64 + 1;
      mpz_class acc = 0;
      for (size_t i = 0; i < words; ++i) {
        acc <<= 64;
        acc += mpz_class(static_cast<unsigned long>(rng.next()));
      }
      return from_mpz(acc);
    }
    case RingKind::Polynomial: {
      Elem acc = zero();
      long nterms = rng.range(0, 3);
      for (long t = 0; t < nterms; ++t) {
        Elem term = constant(base().sample(rng));
        long nv = rng.range(0, 2);
        for (long j = 0; j < nv; ++j) {
          Elem v = var(static_cast<int>(rng.below(static_cast<std::uint64_t>(num_vars()))));
          long e = rng.range(1, 2);
          for (long k = 0; k < e; ++k) term = term * v;
        }
        acc = acc + term;
      }
      return acc;
    }
  }
  throw InternalError("unreachable ring kind");
}

Elem Ring::parse_scalar(const std::string& text) const {
  auto is_int = [](const std::string& s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    return s.find_first_not_of("0123456789", i) == std::string::npos;
  };
  if (kind() == RingKind::Rationals) {
    auto pos = text.find('/');
    if (pos != std::string::npos) {
      std::string num = text.substr(0, pos), den = text.substr(pos + 1);
      if (!is_int(num) || !is_int(den)) throw UsageError("bad rational literal '" + text + "'");
      mpz_class d(den);
      if (d == 0) throw UsageError("zero denominator in '" + text + "'");
      Elem e(*this);
      mpq_class q(mpz_class(num), d);
      q.canonicalize();
      e.q_ = q;
      return e;
    }
  }
  if (!is_int(text)) throw UsageError("bad scalar literal '" + text + "'");
  return from_mpz(mpz_class(text));
}

void Elem::check_same_ring(const Elem& o) const {
  if (ring_ != o.ring_) throw UsageError("mixed-ring arithmetic between " + ring_.spec_string() +
                                         " and " + o.ring_.spec_string());
}

bool Elem::is_zero() const {
  switch (ring_.kind()) {
    case RingKind::Integers:
    case RingKind::Modular: return z_ == 0;
    case RingKind::Rationals: return q_ == 0;
    case RingKind::Polynomial: return p_->empty();
  }
  return false;
}

bool Elem::is_one() const { return *this == ring_.one(); }

Elem Elem::operator+(const Elem& o) const {
  check_same_ring(o);
  Elem r(ring_);
  switch (ring_.kind()) {
    case RingKind::Integers: r.z_ = z_ + o.z_; break;
    case RingKind::Modular: r.z_ = (z_ + o.z_) % ring_.modulus(); break;
    case RingKind::Rationals: r.q_ = q_ + o.q_; break;
    case RingKind::Polynomial: {
      auto terms = std::make_shared<PolyTerms>(*p_);
      for (const auto& [m, c] : *o.p_) {
        auto it = terms->find(m);
        if (it == terms->end()) {
          terms->emplace(m, c);
        } else {
          Elem s = it->second + c;
          if (s.is_zero())
            terms->erase(it);
          else
            it->second = s;
        }
      }
      r.p_ = std::move(terms);
      break;
    }
  }
  return r;
}

Elem Elem::operator-() const {
  Elem r(ring_);
  switch (ring_.kind()) {
    case RingKind::Integers: r.z_ = -z_; break;
    case RingKind::Modular: r.z_ = z_ == 0 ? mpz_class(0) : mpz_class(ring_.modulus() - z_); break;
    case RingKind::Rationals: r.q_ = -q_; break;
    case RingKind::Polynomial: {
      auto terms = std::make_shared<PolyTerms>();
      for (const auto& [m, c] : *p_) terms->emplace(m, -c);
      r.p_ = std::move(terms);
      break;
    }
  }
  return r;
}

Elem Elem::operator-(const Elem& o) const { return *this + (-o); }

Elem Elem::operator*(const Elem& o) const {
  check_same_ring(o);
  Elem r(ring_);
  switch (ring_.kind()) {
    case RingKind::Integers: r.z_ = z_ * o.z_; break;
    case RingKind::Modular: r.z_ = (z_ * o.z_) % ring_.modulus(); break;
    case RingKind::Rationals: r.q_ = q_ * o.q_; break;
    case RingKind::Polynomial: {
      auto terms = std::make_shared<PolyTerms>();
      for (const auto& [ma, ca] : *p_) {
        for (const auto& [mb, cb] : *o.p_) {
          Monomial m(ma.size());
          for (size_t i = 0; i < m.size(); ++i) {
            unsigned e = unsigned(ma[i]) + unsigned(mb[i]);
            if (e > 200) throw InternalError("polynomial exponent overflow");
            m[i] = static_cast<std::uint8_t>(e);
          }
          Elem c = ca * cb;
          auto it = terms->find(m);
          if (it == terms->end()) {
            if (!c.is_zero()) terms->emplace(std::move(m), c);
          } else {
            Elem s = it->second + c;
            if (s.is_zero())
              terms->erase(it);
            else
              it->second = s;
          }
        }
      }
      r.p_ = std::move(terms);
      break;
    }
  }
  return r;
}

bool Elem::operator==(const Elem& o) const {
  check_same_ring(o);
  switch (ring_.kind()) {
    case RingKind::Integers:
    case RingKind::Modular: return z_ == o.z_;
    case RingKind::Rationals: return q_ == o.q_;
    case RingKind::Polynomial: {
      if (p_->size() != o.p_->size()) return false;
      auto it = o.p_->begin();
      for (const auto& [m, c] : *p_) {
        if (m != it->first || !(c == it->second)) return false;
        ++it;
      }
      return true;
    }
  }
  return false;
}

std::string Elem::str() const {
  switch (ring_.kind()) {
    case RingKind::Integers:
    case RingKind::Modular: return z_.get_str();
    case RingKind::Rationals: return q_.get_str();
    case RingKind::Polynomial: {
      if (p_->empty()) return "0";
      std::ostringstream out;
      bool first = true;
      for (const auto& [m, c] : *p_) {
        if (!first) out << " + ";
        first = false;
        out << "(" << c.str() << ")";
        for (size_t i = 0; i < m.size(); ++i) {
          if (m[i] == 0) continue;
          out << "*x" << i;
          if (m[i] > 1) out << "^" << int(m[i]);
        }
      }
      return out.str();
    }
  }
  throw InternalError("unreachable ring kind");
}

std::optional<Elem> try_invert(const Elem& x) {
  const Ring& R = x.ring();
  switch (R.kind()) {
    case RingKind::Integers: {
      if (x.z_ == 1 || x.z_ == -1) return x;
      return std::nullopt;
    }
    case RingKind::Rationals: {
      if (x.q_ == 0) return std::nullopt;
      Elem r(R);
      r.q_ = 1 / x.q_;
      return r;
    }
    case RingKind::Modular: {
      mpz_class inv;
      if (mpz_invert(inv.get_mpz_t(), x.z_.get_mpz_t(), R.modulus().get_mpz_t()) == 0)
        return std::nullopt;
      Elem r(R);
      r.z_ = inv;
      return r;
    }
    case RingKind::Polynomial: {
      // only unit constants are invertible here
      if (x.p_->size() != 1) return std::nullopt;
      const auto& [m, c] = *x.p_->begin();
      for (auto e : m)
        if (e != 0) return std::nullopt;
      auto ci = try_invert(c);
      if (!ci) return std::nullopt;
      return R.constant(*ci);
    }
  }
  return std::nullopt;
}

Elem invert(const Elem& x) {
  auto r = try_invert(x);
  if (!r) throw UsageError("element " + x.str() + " is not a unit in " + x.ring().spec_string());
  return *r;
}

bool is_unit(const Elem& x) { return try_invert(x).has_value(); }

Elem pow(const Elem& x, unsigned e) {
  Elem acc = x.ring().one();
  for (unsigned i = 0; i < e; ++i) acc = acc * x;
  return acc;
}

Elem sample_unit(const Ring& R, Rng& rng) {
  for (int i = 0; i < 400; ++i) {
    Elem x = R.sample(rng);
    if (is_unit(x)) return x;
  }
  return R.one();
}

}  // namespace weylkit
