#include "core/rational.hpp"

namespace lsp {

namespace {

Int parse_int(const std::string& s) {
  if (s.empty()) fail(errc::usage, "empty integer token");
  size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) fail(errc::usage, "bare sign is not an integer");
  for (size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9')
      fail(errc::usage, "bad integer token '" + s + "'");
  }
  return Int(s);
}

}  // namespace

Rat Rat::parse(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(parse_int(s));
  Int num = parse_int(s.substr(0, slash));
  Int den = parse_int(s.substr(slash + 1));
  if (den == 0) fail(errc::usage, "zero denominator in '" + s + "'");
  return Rat(num, den);
}

Int isqrt_floor(const Int& n) {
  if (n < 0) fail(errc::domain, "square root of negative integer");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

Int floor_sqrt(const Rat& r) {
  if (r.sign() < 0) fail(errc::domain, "square root of negative rational");
  // sqrt(p/q) = sqrt(p*q)/q and floor(floor(x)/q) = floor(x/q) for q > 0.
  Int pq = r.num() * r.den();
  Int root = isqrt_floor(pq);
  Int out;
  mpz_fdiv_q(out.get_mpz_t(), root.get_mpz_t(), r.den().get_mpz_t());
  return out;
}

Int upper_int_bound(const Rat& center, const Rat& radius2) {
  if (radius2.sign() < 0) fail(errc::domain, "negative squared radius");
  // k <= center + sqrt(radius2)  <=>  k <= center or (k - center)^2 <= radius2.
  auto below = [&](const Int& k) {
    Rat d = Rat(k) - center;
    return d.sign() <= 0 || d * d <= radius2;
  };
  Int m = center.floor() + floor_sqrt(radius2) + 1;
  // Overestimate by construction; pull back by at most a couple of steps.
  while (!below(m)) m -= 1;
  return m;
}

Int lower_int_bound(const Rat& center, const Rat& radius2) {
  if (radius2.sign() < 0) fail(errc::domain, "negative squared radius");
  auto above = [&](const Int& k) {
    Rat d = center - Rat(k);
    return d.sign() <= 0 || d * d <= radius2;
  };
  Int m = center.ceil() - floor_sqrt(radius2) - 1;
  while (!above(m)) m += 1;
  return m;
}

}  // namespace lsp
