#include "weylkit/clifford.hpp"

#include <sstream>

namespace weylkit {

Elem QuadraticSpace::q_of(const std::vector<Elem>& coords) const {
  if (static_cast<int>(coords.size()) != dim()) throw UsageError("bad module vector size");
  Elem acc = ring.zero();
  for (int i = 0; i < dim(); ++i) {
    acc += coords[static_cast<size_t>(i)] * coords[static_cast<size_t>(i)] * q(i);
    for (int j = i + 1; j < dim(); ++j)
      acc += coords[static_cast<size_t>(i)] * coords[static_cast<size_t>(j)] * b(i, j);
  }
  return acc;
}

Elem QuadraticSpace::b_of(const std::vector<Elem>& x, const std::vector<Elem>& y) const {
  std::vector<Elem> sum;
  for (size_t i = 0; i < x.size(); ++i) sum.push_back(x[i] + y[i]);
  return q_of(sum) - q_of(x) - q_of(y);
}

QuadSpacePtr make_quadratic_space(const Ring& R, const std::vector<Elem>& q_diag,
                                  const std::vector<std::vector<Elem>>& b_off) {
  if (q_diag.size() > 20) throw ConfigError("quadratic space rank too large");
  auto sp = std::make_shared<QuadraticSpace>(QuadraticSpace{R, q_diag, b_off});
  for (int i = 0; i < sp->dim(); ++i)
    for (int j = 0; j < sp->dim(); ++j)
      if (i != j && sp->b(i, j) != sp->b(j, i)) throw ConfigError("bilinear form not symmetric");
  return sp;
}

namespace {

QuadSpacePtr build_space(const Ring& R, int n,
                         const std::vector<std::pair<int, int>>& hyperbolic_pairs,
                         const std::vector<int>& square_ones) {
  std::vector<Elem> qd(static_cast<size_t>(n), R.zero());
  std::vector<std::vector<Elem>> b(static_cast<size_t>(n),
                                   std::vector<Elem>(static_cast<size_t>(n), R.zero()));
  for (auto [i, j] : hyperbolic_pairs) {
    b[static_cast<size_t>(i)][static_cast<size_t>(j)] = R.one();
    b[static_cast<size_t>(j)][static_cast<size_t>(i)] = R.one();
  }
  for (int i : square_ones) qd[static_cast<size_t>(i)] = R.one();
  return make_quadratic_space(R, qd, b);
}

}  // namespace

QuadSpacePtr make_split_bd_space(const Ring& R, int m0_rank) {
  if (m0_rank < 1) throw ConfigError("M0 needs positive rank");
  int n = m0_rank + 2;
  std::vector<std::pair<int, int>> pairs = {{0, n - 1}};  // e_-, e_+
  for (int k = 1; k + 1 <= m0_rank; k += 2) pairs.push_back({k, k + 1});
  std::vector<int> squares;
  if (m0_rank % 2 == 1) squares.push_back(m0_rank);  // odd rank: last base vector has q = 1
  return build_space(R, n, pairs, squares);
}

QuadSpacePtr make_hyperbolic_space(const Ring& R, int d) {
  if (d < 1) throw ConfigError("hyperbolic space needs d >= 1");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < d; ++i) pairs.push_back({i, d + i});
  return build_space(R, 2 * d, pairs, {});
}

Cliff::Cliff(QuadSpacePtr space, std::map<std::uint32_t, Elem> terms)
    : space_(std::move(space)), terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second.is_zero())
      it = terms_.erase(it);
    else
      ++it;
  }
}

Cliff Cliff::zero(QuadSpacePtr space) { return Cliff(std::move(space), {}); }

Cliff Cliff::scalar(QuadSpacePtr space, const Elem& v) {
  std::map<std::uint32_t, Elem> t;
  if (!v.is_zero()) t.emplace(0u, v);
  return Cliff(std::move(space), std::move(t));
}

Cliff Cliff::one(QuadSpacePtr space) {
  const Ring& R = space->ring;
  return scalar(std::move(space), R.one());
}

Cliff Cliff::gen(QuadSpacePtr space, int i) {
  if (i < 0 || i >= space->dim()) throw UsageError("generator index out of range");
  std::map<std::uint32_t, Elem> t;
  t.emplace(1u << i, space->ring.one());
  return Cliff(std::move(space), std::move(t));
}

Cliff Cliff::vector(QuadSpacePtr space, const std::vector<Elem>& coords) {
  if (static_cast<int>(coords.size()) != space->dim()) throw UsageError("bad module vector size");
  std::map<std::uint32_t, Elem> t;
  for (size_t i = 0; i < coords.size(); ++i)
    if (!coords[i].is_zero()) t.emplace(1u << i, coords[i]);
  return Cliff(std::move(space), std::move(t));
}

Cliff Cliff::operator+(const Cliff& o) const {
  if (space_ != o.space_) throw UsageError("Clifford elements from different spaces");
  std::map<std::uint32_t, Elem> t = terms_;
  for (const auto& [m, c] : o.terms_) {
    auto it = t.find(m);
    if (it == t.end()) {
      t.emplace(m, c);
    } else {
      Elem s = it->second + c;
      if (s.is_zero())
        t.erase(it);
      else
        it->second = s;
    }
  }
  return Cliff(space_, std::move(t));
}

Cliff Cliff::operator-() const {
  std::map<std::uint32_t, Elem> t;
  for (const auto& [m, c] : terms_) t.emplace(m, -c);
  return Cliff(space_, std::move(t));
}

Cliff Cliff::operator-(const Cliff& o) const { return *this + (-o); }

Cliff Cliff::scaled(const Elem& k) const {
  std::map<std::uint32_t, Elem> t;
  for (const auto& [m, c] : terms_) {
    Elem s = c * k;
    if (!s.is_zero()) t.emplace(m, s);
  }
  return Cliff(space_, std::move(t));
}

namespace {

void accumulate(std::map<std::uint32_t, Elem>& acc, std::uint32_t mono, const Elem& coeff) {
  if (coeff.is_zero()) return;
  auto it = acc.find(mono);
  if (it == acc.end()) {
    acc.emplace(mono, coeff);
  } else {
    Elem s = it->second + coeff;
    if (s.is_zero())
      acc.erase(it);
    else
      it->second = s;
  }
}

// e_mono * e_g reduced to the sorted basis, multiplied by coeff
void mul_by_gen(const QuadraticSpace& sp, std::uint32_t mono, int g, const Elem& coeff,
                std::map<std::uint32_t, Elem>& out) {
  if (mono == 0) {
    accumulate(out, 1u << g, coeff);
    return;
  }
  int h = 31 - __builtin_clz(mono);  // highest label in the monomial
  std::uint32_t rest = mono & ~(1u << h);
  if (h < g) {
    accumulate(out, mono | (1u << g), coeff);
    return;
  }
  if (h == g) {
    // e_h e_h = q(h)
    accumulate(out, rest, coeff * sp.q(h));
    return;
  }
  // e_h e_g = B(h, g) - e_g e_h
  accumulate(out, rest, coeff * sp.b(h, g));
  std::map<std::uint32_t, Elem> inner;
  mul_by_gen(sp, rest, g, coeff, inner);
  for (const auto& [m, c] : inner) accumulate(out, m | (1u << h), -c);
}

}  // namespace

Cliff Cliff::operator*(const Cliff& o) const {
  if (space_ != o.space_) throw UsageError("Clifford elements from different spaces");
  const QuadraticSpace& sp = *space_;
  std::map<std::uint32_t, Elem> acc;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      // multiply e_ma by the generators of mb in increasing order
      std::map<std::uint32_t, Elem> cur;
      cur.emplace(ma, ca * cb);
      for (int g = 0; g < sp.dim(); ++g) {
        if (!((mb >> g) & 1u)) continue;
        std::map<std::uint32_t, Elem> next;
        for (const auto& [m, c] : cur) mul_by_gen(sp, m, g, c, next);
        cur = std::move(next);
      }
      for (const auto& [m, c] : cur) accumulate(acc, m, c);
    }
  }
  return Cliff(space_, std::move(acc));
}

bool Cliff::operator==(const Cliff& o) const {
  if (space_ != o.space_) throw UsageError("Clifford elements from different spaces");
  return terms_ == o.terms_;
}

bool Cliff::is_even() const {
  for (const auto& [m, c] : terms_) {
    (void)c;
    if (__builtin_popcount(m) % 2 != 0) return false;
  }
  return true;
}

bool Cliff::is_scalar() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

Elem Cliff::scalar_part() const {
  auto it = terms_.find(0);
  return it == terms_.end() ? space_->ring.zero() : it->second;
}

std::optional<std::vector<Elem>> Cliff::as_vector() const {
  std::vector<Elem> coords(static_cast<size_t>(space_->dim()), space_->ring.zero());
  for (const auto& [m, c] : terms_) {
    if (__builtin_popcount(m) != 1) return std::nullopt;
    coords[static_cast<size_t>(__builtin_ctz(m))] = c;
  }
  return coords;
}

std::string Cliff::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << "(" << c.str() << ")";
    for (int i = 0; i < space_->dim(); ++i)
      if ((m >> i) & 1u) out << "*e" << i;
  }
  return out.str();
}

Cliff main_involution(const Cliff& a) {
  const QuadSpacePtr& sp = a.space();
  Cliff acc = Cliff::zero(sp);
  for (const auto& [m, c] : a.terms()) {
    // rebuild the reversed product of generators
    Cliff mono = Cliff::scalar(sp, c);
    for (int g = sp->dim() - 1; g >= 0; --g)
      if ((m >> g) & 1u) mono = mono * Cliff::gen(sp, g);
    acc = acc + mono;
  }
  return acc;
}

bool spin_check(const Cliff& g) {
  if (!g.is_even()) return false;
  Cliff gi = main_involution(g);
  Cliff one = Cliff::one(g.space());
  if (g * gi != one || gi * g != one) return false;
  const QuadSpacePtr& sp = g.space();
  for (int i = 0; i < sp->dim(); ++i) {
    Cliff conj = g * Cliff::gen(sp, i) * gi;
    if (!conj.as_vector()) return false;
  }
  return true;
}

std::vector<Elem> conjugate_vector(const Cliff& g, const std::vector<Elem>& m) {
  Cliff gi = main_involution(g);
  Cliff one = Cliff::one(g.space());
  if (g * gi != one) throw UsageError("element is not invertible via the involution");
  Cliff conj = g * Cliff::vector(g.space(), m) * gi;
  auto v = conj.as_vector();
  if (!v) throw InternalError("conjugate of a module vector left the module");
  return *v;
}

}  // namespace weylkit
