#pragma once

#include <gmpxx.h>

#include <string>

#include "core/errors.hpp"

namespace lsp {

using Int = mpz_class;

// Arbitrary-precision rational, always kept in canonical reduced form
// (gcd(num, den) == 1, den > 0).  mpq_class does not canonicalize values
// built from a numerator/denominator pair on its own, so every constructor
// here does it explicitly.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(int n) : v_(n) {}
  Rat(long n) : v_(static_cast<signed long>(n)) {}
  Rat(const Int& n) : v_(n) {}
  Rat(const Int& num, const Int& den) {
    if (den == 0) fail(errc::domain, "rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }

  // Accepts "p" or "p/q" with optional leading '-'; q must be positive
  // after reduction.  Anything else is a usage error.
  static Rat parse(const std::string& s);

  const Int num() const { return v_.get_num(); }
  const Int den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Int floor() const {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(),
               v_.get_den().get_mpz_t());
    return q;
  }
  Int ceil() const {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(),
               v_.get_den().get_mpz_t());
    return q;
  }

  // Canonical form: "p/q", or "p" when the denominator is 1.
  std::string str() const { return v_.get_str(); }

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) fail(errc::domain, "rational division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
  friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
  friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
  friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

 private:
  explicit Rat(mpq_class q) : v_(std::move(q)) {}
  mpq_class v_;
};

// floor(sqrt(n)) for n >= 0.
Int isqrt_floor(const Int& n);

// floor(sqrt(r)) for r >= 0, exact:  floor(sqrt(p/q)) = floor(isqrt(p*q)/q).
Int floor_sqrt(const Rat& r);

// Largest integer m with (m - center)^2 <= radius2, i.e. floor of
// center + sqrt(radius2).  radius2 >= 0.
Int upper_int_bound(const Rat& center, const Rat& radius2);

// Smallest integer m with (m - center)^2 <= radius2.
Int lower_int_bound(const Rat& center, const Rat& radius2);

}  // namespace lsp
