#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/matrix.hpp"

namespace lsp {

// Univariate polynomial over Q(i).  Coefficients are stored
// lowest-degree-first with no trailing zeros; the zero polynomial has an
// empty coefficient vector and degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<GRat> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly constant(GRat c) { return Poly(std::vector<GRat>{std::move(c)}); }
  // c * t^k
  static Poly monomial(GRat c, int k);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<GRat>& coeffs() const { return c_; }
  GRat coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return GRat{};
    return c_[k];
  }
  GRat lead() const {
    if (is_zero()) fail(errc::domain, "leading coefficient of zero polynomial");
    return c_.back();
  }
  bool is_monic() const { return !is_zero() && c_.back() == GRat(1); }
  bool all_real() const {
    for (const GRat& c : c_)
      if (!c.is_real()) return false;
    return true;
  }

  GRat eval(const GRat& x) const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const GRat& s, const Poly& p);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // order >= 1 formal derivatives.
  Poly derivative(int order = 1) const;
  Poly monic() const;

  // Human-readable rendering like "t^3 - 5/2*t + 1".
  std::string str(const std::string& var = "t") const;

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<GRat> c_;
};

// Field division with remainder: a = q*b + r, deg r < deg b.
struct DivMod {
  Poly quot;
  Poly rem;
};
DivMod divmod(const Poly& a, const Poly& b);

// Monic gcd via the Euclidean algorithm; gcd(0, 0) is an error.
Poly poly_gcd(const Poly& a, const Poly& b);

// Resultant via the Sylvester determinant, high-degree-first rows.
// Degenerate cases follow the determinant itself: res(c, d) = 1 for nonzero
// constants, res(p, c) = c^deg(p).  A zero argument gives 0 (both zero is
// an error since no Sylvester matrix exists).
GRat resultant(const Poly& p, const Poly& q);

// Characteristic polynomial det(tI - M), monic, exact.  Faddeev-LeVerrier:
// every division is by an integer k <= n.
Poly char_poly(const CMat& m);

struct SquareDecomposition {
  bool is_square = false;
  std::optional<Poly> root;   // monic square root when is_square
  bool normalized = false;    // input was rescaled to monic first
};

// Decides whether p is the square of a polynomial over Q(i).  Requires a
// nonzero input; non-monic inputs are normalized and flagged.  When the
// leading coefficient is not itself a square in Q(i) the normalized answer
// still certifies squareness of the monic part only, so callers that care
// about exact squares should pass monic polynomials (all users here do).
SquareDecomposition perfect_square(const Poly& p);

}  // namespace lsp
