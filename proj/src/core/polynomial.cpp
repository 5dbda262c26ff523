#include "core/polynomial.hpp"

namespace lsp {

Poly Poly::monomial(GRat c, int k) {
  if (k < 0) fail(errc::domain, "monomial with negative degree");
  std::vector<GRat> v(k + 1);
  v[k] = std::move(c);
  return Poly(std::move(v));
}

GRat Poly::eval(const GRat& x) const {
  GRat acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::operator-() const {
  std::vector<GRat> v(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) v[i] = -c_[i];
  return Poly(std::move(v));
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<GRat> v(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < v.size(); ++i) {
    if (i < a.c_.size()) v[i] += a.c_[i];
    if (i < b.c_.size()) v[i] += b.c_[i];
  }
  return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<GRat> v(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j)
      v[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(v));
}

Poly operator*(const GRat& s, const Poly& p) {
  std::vector<GRat> v(p.c_.size());
  for (size_t i = 0; i < p.c_.size(); ++i) v[i] = s * p.c_[i];
  return Poly(std::move(v));
}

Poly Poly::derivative(int order) const {
  if (order < 1) fail(errc::domain, "derivative order must be >= 1");
  Poly d = *this;
  for (int n = 0; n < order; ++n) {
    if (d.c_.size() <= 1) return Poly();
    std::vector<GRat> v(d.c_.size() - 1);
    for (size_t k = 1; k < d.c_.size(); ++k)
      v[k - 1] = GRat(Rat(static_cast<long>(k))) * d.c_[k];
    d = Poly(std::move(v));
  }
  return d;
}

Poly Poly::monic() const {
  if (is_zero()) fail(errc::domain, "cannot normalize zero polynomial");
  if (is_monic()) return *this;
  GRat inv = GRat(1) / lead();
  return inv * *this;
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const GRat& c = c_[k];
    if (c.is_zero()) continue;
    bool lead_term = out.empty();
    std::string cs = c.str();
    // Pure-real and pure-imaginary coefficients render with a leading sign.
    bool negative = !cs.empty() && cs[0] == '-' &&
                    (c.is_real() || c.re.is_zero());
    if (!lead_term) {
      out += negative ? " - " : " + ";
      if (negative) cs = cs.substr(1);
    }
    bool needs_parens = !c.is_real() && !c.re.is_zero();
    std::string body;
    if (k == 0) {
      body = needs_parens ? "(" + cs + ")" : cs;
    } else {
      if (cs == "1") body = "";
      else if (cs == "-1") body = "-";
      else body = (needs_parens ? "(" + cs + ")" : cs) + "*";
      body += var;
      if (k > 1) body += "^" + std::to_string(k);
    }
    out += body;
  }
  return out;
}

DivMod divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) fail(errc::domain, "polynomial division by zero");
  Poly rem = a;
  Poly quot;
  GRat lead_inv = GRat(1) / b.lead();
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    GRat c = rem.lead() * lead_inv;
    int k = rem.degree() - b.degree();
    Poly term = Poly::monomial(c, k);
    quot = quot + term;
    rem = rem - term * b;
  }
  return {std::move(quot), std::move(rem)};
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero())
    fail(errc::domain, "gcd of two zero polynomials");
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).rem;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

GRat resultant(const Poly& p, const Poly& q) {
  if (p.is_zero() && q.is_zero())
    fail(errc::domain, "resultant of two zero polynomials");
  if (p.is_zero() || q.is_zero()) return GRat{};
  int n = p.degree(), m = q.degree();
  if (n == 0 && m == 0) return GRat(1);  // empty Sylvester matrix
  CMat s(n + m, n + m);
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= n; ++k) s.at(i, i + k) = p.coeff(n - k);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k) s.at(m + i, i + k) = q.coeff(m - k);
  return det(s);
}

Poly char_poly(const CMat& m) {
  if (m.rows() != m.cols())
    fail(errc::domain, "characteristic polynomial of non-square matrix");
  int n = m.rows();
  std::vector<GRat> c(n + 1);
  c[n] = GRat(1);
  CMat mk = m;
  for (int k = 1; k <= n; ++k) {
    GRat ck = -(GRat(1) / GRat(Rat(static_cast<long>(k)))) * mk.trace();
    c[n - k] = ck;
    if (k < n) {
      CMat shifted = mk;
      for (int i = 0; i < n; ++i) shifted.at(i, i) += ck;
      mk = m * shifted;
    }
  }
  return Poly(std::move(c));
}

namespace {

// p monic, nonzero.  Returns the monic square root or nullopt.
std::optional<Poly> monic_sqrt(const Poly& p) {
  if (p.degree() == 0) return Poly::constant(GRat(1));
  if (p.degree() % 2 != 0) return std::nullopt;
  // radical(p) = p / gcd(p, p'); p is a square iff radical^2 divides p
  // and the cofactor is again a square.
  Poly g = poly_gcd(p, p.derivative());
  Poly rad = divmod(p, g).quot.monic();
  DivMod d = divmod(p, rad * rad);
  if (!d.rem.is_zero()) return std::nullopt;
  std::optional<Poly> rest = monic_sqrt(d.quot.monic());
  if (!rest) return std::nullopt;
  return rad * *rest;
}

}  // namespace

SquareDecomposition perfect_square(const Poly& p) {
  if (p.is_zero()) fail(errc::domain, "perfect-square test on zero polynomial");
  SquareDecomposition out;
  Poly work = p;
  if (!p.is_monic()) {
    out.normalized = true;
    work = p.monic();
  }
  std::optional<Poly> root = monic_sqrt(work);
  if (root) {
    check_invariant(*root * *root == work, "square root verification failed");
    out.is_square = true;
    out.root = std::move(root);
  }
  return out;
}

}  // namespace lsp
