#ifndef WEYLKIT_RING_HPP_
#define WEYLKIT_RING_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "weylkit/error.hpp"
#include "weylkit/rng.hpp"

namespace weylkit {

class Elem;

enum class RingKind { Integers, Rationals, Modular, Polynomial };

// Exact commutative unital ring, selected at runtime. A Ring is a cheap
// shared handle; Elems carry their ring and refuse mixed-ring arithmetic.
class Ring {
 public:
  static Ring integers();
  static Ring rationals();
  static Ring modular(const mpz_class& n);              // n >= 2
  static Ring polynomial(const Ring& base, int nvars);  // base must not be polynomial

  // Grammar: int | rat | zmod:<n> | poly:<base>:<k>, e.g. poly:zmod:97:3
  static Ring parse(const std::string& spec);
  std::string spec_string() const;

  RingKind kind() const { return data_->kind; }
  const mpz_class& modulus() const;
  Ring base() const;
  int num_vars() const;

  bool operator==(const Ring& other) const;
  bool operator!=(const Ring& other) const { return !(*this == other); }

  Elem zero() const;
  Elem one() const;
  Elem from_int(long v) const;
  Elem from_mpz(const mpz_class& v) const;
  Elem var(int i) const;  // polynomial rings only

  // Lift a base-ring element into this polynomial ring as a constant.
  Elem constant(const Elem& base_elem) const;

  // Deterministic bounded sampling; identical seeds give identical streams.
  Elem sample(Rng& rng) const;

  // Scalar literals: integers everywhere, "p/q" over the rationals.
  Elem parse_scalar(const std::string& text) const;

 private:
  struct Data {
    RingKind kind;
    mpz_class modulus;            // Modular
    std::shared_ptr<Data> base;   // Polynomial
    int num_vars = 0;
  };
  std::shared_ptr<const Data> data_;
  explicit Ring(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
};

// variable exponents, fixed length = num_vars
using Monomial = std::vector<std::uint8_t>;
using PolyTerms = std::map<Monomial, Elem>;

class Elem {
 public:
  const Ring& ring() const { return ring_; }

  bool is_zero() const;
  bool is_one() const;

  Elem operator+(const Elem& o) const;
  Elem operator-(const Elem& o) const;
  Elem operator-() const;
  Elem operator*(const Elem& o) const;
  Elem& operator+=(const Elem& o) { return *this = *this + o; }
  Elem& operator-=(const Elem& o) { return *this = *this - o; }
  Elem& operator*=(const Elem& o) { return *this = *this * o; }

  bool operator==(const Elem& o) const;
  bool operator!=(const Elem& o) const { return !(*this == o); }

  std::string str() const;

  friend std::optional<Elem> try_invert(const Elem& x);
  friend class Ring;

 private:
  explicit Elem(Ring r) : ring_(std::move(r)) {}

  Ring ring_;
  mpz_class z_;  // Integers value or Modular residue in [0, n)
  mpq_class q_;  // Rationals, canonical
  std::shared_ptr<const PolyTerms> p_;  // Polynomial, no zero coefficients

  void check_same_ring(const Elem& o) const;
};

std::optional<Elem> try_invert(const Elem& x);

// Throwing variant for call sites whose preconditions guarantee a unit.
Elem invert(const Elem& x);

bool is_unit(const Elem& x);

Elem pow(const Elem& x, unsigned e);

// Rejection-samples a unit; falls back to 1 on pathological rings.
Elem sample_unit(const Ring& R, Rng& rng);

}  // namespace weylkit

#endif
