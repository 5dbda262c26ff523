#pragma once

#include <string>

#include "core/rational.hpp"

namespace lsp {

// Element of Q(i): re + im*i with exact rational parts.
struct GRat {
  Rat re;
  Rat im;

  GRat() = default;
  GRat(int n) : re(n) {}
  GRat(long n) : re(n) {}
  GRat(Rat r) : re(std::move(r)) {}
  GRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  static GRat i() { return GRat(Rat(0), Rat(1)); }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_real() const { return im.is_zero(); }

  GRat conj() const { return GRat(re, -im); }
  // |z|^2, a nonnegative rational.
  Rat norm2() const { return re * re + im * im; }

  GRat operator-() const { return GRat(-re, -im); }
  GRat& operator+=(const GRat& o) { re += o.re; im += o.im; return *this; }
  GRat& operator-=(const GRat& o) { re -= o.re; im -= o.im; return *this; }
  GRat& operator*=(const GRat& o) {
    Rat r = re * o.re - im * o.im;
    Rat i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  GRat& operator/=(const GRat& o) {
    if (o.is_zero()) fail(errc::domain, "gaussian division by zero");
    Rat n = o.norm2();
    GRat num = *this * o.conj();
    re = num.re / n;
    im = num.im / n;
    return *this;
  }

  friend GRat operator+(GRat a, const GRat& b) { a += b; return a; }
  friend GRat operator-(GRat a, const GRat& b) { a -= b; return a; }
  friend GRat operator*(GRat a, const GRat& b) { a *= b; return a; }
  friend GRat operator/(GRat a, const GRat& b) { a /= b; return a; }

  friend bool operator==(const GRat& a, const GRat& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GRat& a, const GRat& b) { return !(a == b); }
  // Lexicographic; used only for deterministic ordering, not magnitude.
  friend bool operator<(const GRat& a, const GRat& b) {
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
  }

  // "a", "bi" or "a+bi" / "a-bi"; exact, for logs and pretty printing.
  std::string str() const {
    if (im.is_zero()) return re.str();
    std::string istr = im.str() + "i";
    if (im == Rat(1)) istr = "i";
    if (im == Rat(-1)) istr = "-i";
    if (re.is_zero()) return istr;
    if (im.sign() > 0) return re.str() + "+" + istr;
    return re.str() + istr;
  }
};

}  // namespace lsp
