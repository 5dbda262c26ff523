#include "doctest.h"

#include <random>

#include "core/matrix.hpp"
#include "core/polynomial.hpp"
#include "test_util.hpp"

using namespace lsp;
using testutil::int_poly;
using testutil::raises;
using testutil::random_int_poly;
using testutil::small_int;
using testutil::small_rat;

TEST_CASE("rationals stay canonical") {
  CHECK(Rat(Int(2), Int(4)).str() == "1/2");
  CHECK(Rat(Int(-2), Int(4)).str() == "-1/2");
  CHECK(Rat(Int(3), Int(-6)).str() == "-1/2");
  CHECK(Rat(Int(0), Int(7)).str() == "0");
  CHECK(Rat(Int(22), Int(11)).str() == "2");
  CHECK(Rat(Int(5), Int(3)).num() == Int(5));
  CHECK(Rat(Int(5), Int(3)).den() == Int(3));
  CHECK(raises(errc::domain, [] { Rat(Int(1), Int(0)); }));

  CHECK(Rat::parse("-5/10") == Rat(Int(-1), Int(2)));
  CHECK(Rat::parse("7") == Rat(7));
  CHECK(raises(errc::usage, [] { Rat::parse("1/0"); }));
  CHECK(raises(errc::usage, [] { Rat::parse("a/b"); }));

  std::mt19937 rng(20240811);
  for (int t = 0; t < 200; ++t) {
    Rat r = small_rat(rng);
    CHECK(Rat::parse(r.str()) == r);
    CHECK(gcd(abs(r.num()), r.den()) == 1);
  }
}

TEST_CASE("floor, ceil and integer square roots") {
  CHECK(Rat(Int(7), Int(2)).floor() == Int(3));
  CHECK(Rat(Int(7), Int(2)).ceil() == Int(4));
  CHECK(Rat(Int(-7), Int(2)).floor() == Int(-4));
  CHECK(Rat(Int(-7), Int(2)).ceil() == Int(-3));
  CHECK(Rat(4).floor() == Int(4));
  CHECK(Rat(4).ceil() == Int(4));

  CHECK(floor_sqrt(Rat(0)) == Int(0));
  CHECK(floor_sqrt(Rat(2)) == Int(1));
  CHECK(floor_sqrt(Rat(Int(49), Int(4))) == Int(3));
  CHECK(floor_sqrt(Rat(49)) == Int(7));

  std::mt19937 rng(7);
  for (int t = 0; t < 200; ++t) {
    long p = static_cast<long>(rng() % 5000);
    long q = static_cast<long>(rng() % 50) + 1;
    Rat x{Int(p), Int(q)};
    Int f = floor_sqrt(x);
    CHECK(Rat(Int(f * f)) <= x);
    CHECK(x < Rat(Int((f + 1) * (f + 1))));
  }
}

TEST_CASE("integer bounds of a ball slice") {
  CHECK(upper_int_bound(Rat(0), Rat(2)) == Int(1));
  CHECK(lower_int_bound(Rat(0), Rat(2)) == Int(-1));
  CHECK(upper_int_bound(Rat(Int(1), Int(2)), Rat(Int(9), Int(4))) == Int(2));
  CHECK(lower_int_bound(Rat(Int(1), Int(2)), Rat(Int(9), Int(4))) == Int(-1));

  std::mt19937 rng(11);
  for (int t = 0; t < 200; ++t) {
    Rat c = small_rat(rng, 20);
    Rat r2(Int(static_cast<long>(rng() % 400)), Int(rng() % 7 + 1));
    Int hi = upper_int_bound(c, r2);
    Int lo = lower_int_bound(c, r2);
    // hi is admissible, hi + 1 is not; same on the low side.
    CHECK((Rat(hi) - c) * (Rat(hi) - c) <= r2);
    CHECK((Rat(Int(hi + 1)) - c) * (Rat(Int(hi + 1)) - c) > r2);
    CHECK((Rat(lo) - c) * (Rat(lo) - c) <= r2);
    CHECK((Rat(Int(lo - 1)) - c) * (Rat(Int(lo - 1)) - c) > r2);
  }
}

TEST_CASE("gaussian rationals form a field") {
  GRat z(Rat(1), Rat(2));
  GRat w(Rat(3), Rat(-1));
  CHECK(z * w == GRat(Rat(5), Rat(5)));
  CHECK(GRat::i() * GRat::i() == GRat(-1));
  CHECK(z.conj().conj() == z);
  CHECK((z * z.conj()).is_real());
  CHECK((z * z.conj()).re == z.norm2());
  CHECK(raises(errc::domain, [&] { (void)(z / GRat(0)); }));

  std::mt19937 rng(13);
  for (int t = 0; t < 200; ++t) {
    GRat a(small_rat(rng), small_rat(rng));
    GRat b(small_rat(rng), small_rat(rng));
    if (b.is_zero()) continue;
    CHECK((a / b) * b == a);
    CHECK((a + b).conj() == a.conj() + b.conj());
    CHECK((a * b).conj() == a.conj() * b.conj());
  }
}

namespace {

CMat random_cmat(std::mt19937& rng, int n) {
  CMat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m.at(i, j) = GRat(Rat(small_int(rng, 4)), Rat(small_int(rng, 4)));
  return m;
}

QMat random_qmat(std::mt19937& rng, int n) {
  QMat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = Rat(small_int(rng, 4));
  return m;
}

}  // namespace

TEST_CASE("determinant matches the triangular oracle and multiplies") {
  std::mt19937 rng(17);
  for (int t = 0; t < 50; ++t) {
    int n = 2 + static_cast<int>(rng() % 3);
    // Triangular matrix: determinant is the diagonal product.
    QMat u(n, n);
    Rat prod(1);
    for (int i = 0; i < n; ++i) {
      u.at(i, i) = Rat(small_int(rng, 5));
      prod *= u.at(i, i);
      for (int j = i + 1; j < n; ++j) u.at(i, j) = Rat(small_int(rng, 5));
    }
    CHECK(det(u) == prod);

    QMat a = random_qmat(rng, n);
    QMat b = random_qmat(rng, n);
    CHECK(det(a * b) == det(a) * det(b));
  }
}

TEST_CASE("solve, kernel and inverse agree with direct checks") {
  std::mt19937 rng(19);
  int solved = 0, inverted = 0;
  for (int t = 0; t < 60; ++t) {
    int n = 2 + static_cast<int>(rng() % 3);
    QMat a = random_qmat(rng, n);

    QVec x(n);
    for (int i = 0; i < n; ++i) x[i] = small_rat(rng);
    QVec b = mat_vec(a, x);
    auto sol = solve(a, b);
    REQUIRE(sol.has_value());
    CHECK(mat_vec(a, *sol) == b);
    ++solved;

    auto ker = kernel(a);
    CHECK(static_cast<int>(ker.size()) + rank(a) == n);
    for (const auto& v : ker) {
      QVec zero(n, Rat(0));
      CHECK(mat_vec(a, v) == zero);
    }

    if (det(a) != Rat(0)) {
      auto inv = inverse(a);
      REQUIRE(inv.has_value());
      CHECK(a * *inv == QMat::identity(n));
      ++inverted;
    }
  }
  CHECK(solved == 60);
  CHECK(inverted > 20);

  // Inconsistent system: x + y = 0 and x + y = 1.
  QMat a(2, 2);
  a.at(0, 0) = a.at(0, 1) = a.at(1, 0) = a.at(1, 1) = Rat(1);
  CHECK_FALSE(solve(a, QVec{Rat(0), Rat(1)}).has_value());
  QMat sing(2, 2);
  sing.at(0, 0) = Rat(1);
  CHECK_FALSE(inverse(sing).has_value());
}

TEST_CASE("characteristic polynomials of stock matrices") {
  CMat d(2, 2);
  d.at(0, 0) = GRat(2);
  d.at(1, 1) = GRat(3);
  CHECK(char_poly(d) == int_poly({6, -5, 1}));

  CHECK(char_poly(CMat(3, 3)) == int_poly({0, 0, 0, 1}));

  CMat swap(2, 2);
  swap.at(0, 1) = GRat(1);
  swap.at(1, 0) = GRat(1);
  CHECK(char_poly(swap) == int_poly({-1, 0, 1}));
}

TEST_CASE("characteristic polynomial vanishes on triangular eigenvalues") {
  std::mt19937 rng(23);
  for (int t = 0; t < 40; ++t) {
    int n = 2 + static_cast<int>(rng() % 3);
    CMat u(n, n);
    for (int i = 0; i < n; ++i) {
      u.at(i, i) = GRat(Rat(small_int(rng, 6)));
      for (int j = i + 1; j < n; ++j)
        u.at(i, j) = GRat(Rat(small_int(rng, 6)), Rat(small_int(rng, 6)));
    }
    Poly cp = char_poly(u);
    CHECK(cp.is_monic());
    CHECK(cp.degree() == n);
    for (int i = 0; i < n; ++i) CHECK(cp.eval(u.at(i, i)).is_zero());
  }
}

TEST_CASE("hermitian matrices have real characteristic coefficients") {
  std::mt19937 rng(29);
  for (int t = 0; t < 40; ++t) {
    int n = 2 + static_cast<int>(rng() % 3);
    CMat b = random_cmat(rng, n);
    CMat h = b + conj_transpose(b);
    REQUIRE(is_hermitian(h));
    CHECK(char_poly(h).all_real());
  }
}

TEST_CASE("cayley-hamilton holds for random small matrices") {
  std::mt19937 rng(31);
  for (int t = 0; t < 25; ++t) {
    int n = 2 + static_cast<int>(rng() % 3);
    CMat m = random_cmat(rng, n);
    Poly cp = char_poly(m);
    CMat acc(n, n);  // cp(m), built by Horner from the top coefficient
    for (int k = cp.degree(); k >= 0; --k) {
      acc = acc * m;
      for (int i = 0; i < n; ++i) acc.at(i, i) += cp.coeff(k);
    }
    CHECK(acc == CMat(n, n));
  }
}

TEST_CASE("polynomial division, gcd and derivatives") {
  std::mt19937 rng(37);
  for (int t = 0; t < 80; ++t) {
    Poly a = random_int_poly(rng, 1 + static_cast<int>(rng() % 5), false);
    Poly b = random_int_poly(rng, 1 + static_cast<int>(rng() % 3), false);
    DivMod dm = divmod(a, b);
    CHECK(dm.quot * b + dm.rem == a);
    CHECK(dm.rem.degree() < b.degree());

    Poly g = poly_gcd(a, b);
    CHECK(g.is_monic());
    CHECK(divmod(a, g).rem.is_zero());
    CHECK(divmod(b, g).rem.is_zero());

    // Leibniz rule.
    CHECK((a * b).derivative() == a.derivative() * b + a * b.derivative());
  }

  CHECK(int_poly({6, -5, 1}).derivative() == int_poly({-5, 2}));
  CHECK(int_poly({0, 0, 0, 1}).derivative(2) == int_poly({0, 6}));
  CHECK(int_poly({5}).derivative().is_zero());
  CHECK(raises(errc::domain, [] { divmod(int_poly({1}), Poly()); }));
  CHECK(raises(errc::domain, [] { poly_gcd(Poly(), Poly()); }));
}

TEST_CASE("resultant conventions on stock inputs") {
  // Shared root.
  CHECK(resultant(int_poly({-1, 0, 1}), int_poly({-1, 1})) == GRat(0));
  // 2x2 Sylvester determinant.
  CHECK(resultant(int_poly({-2, 1}), int_poly({-3, 1})) == GRat(Rat(-1)));
  // Constant second argument: c^deg.
  Poly sq = int_poly({-3, 1}) * int_poly({-3, 1});
  CHECK(resultant(sq, Poly::constant(GRat(2))) == GRat(Rat(4)));
  // Two nonzero constants.
  CHECK(resultant(Poly::constant(GRat(5)), Poly::constant(GRat(7))) ==
        GRat(1));
  // One zero argument.
  CHECK(resultant(Poly(), int_poly({-3, 1})) == GRat(0));
  CHECK(raises(errc::domain, [] { resultant(Poly(), Poly()); }));
}

TEST_CASE("resultant vanishes exactly when the gcd is nonconstant") {
  std::mt19937 rng(41);
  int zeros = 0, nonzeros = 0;
  for (int t = 0; t < 120; ++t) {
    Poly p = random_int_poly(rng, 1 + static_cast<int>(rng() % 3), false);
    Poly q = random_int_poly(rng, 1 + static_cast<int>(rng() % 3), false);
    if (t % 2 == 0) {
      // Force a common factor.
      Poly f = random_int_poly(rng, 1, false);
      p = p * f;
      q = q * f;
    }
    bool shares = poly_gcd(p, q).degree() > 0;
    bool res_zero = resultant(p, q).is_zero();
    CHECK(shares == res_zero);
    (res_zero ? zeros : nonzeros) += 1;
  }
  CHECK(zeros >= 40);
  CHECK(nonzeros >= 40);
}

TEST_CASE("resultant is multiplicative in the first argument") {
  std::mt19937 rng(43);
  for (int t = 0; t < 40; ++t) {
    Poly p = random_int_poly(rng, 1 + static_cast<int>(rng() % 2), false);
    Poly q = random_int_poly(rng, 1 + static_cast<int>(rng() % 2), false);
    Poly r = random_int_poly(rng, 1 + static_cast<int>(rng() % 2), false);
    CHECK(resultant(p * q, r) == resultant(p, r) * resultant(q, r));
  }
}

TEST_CASE("perfect squares are detected and certified") {
  SquareDecomposition d1 = perfect_square(int_poly({9, -6, 1}));
  CHECK(d1.is_square);
  CHECK(*d1.root == int_poly({-3, 1}));
  CHECK_FALSE(d1.normalized);

  CHECK_FALSE(perfect_square(int_poly({6, -5, 1})).is_square);

  Poly p = int_poly({-2, 0, 1});
  SquareDecomposition d2 = perfect_square(p * p);
  CHECK(d2.is_square);
  CHECK(*d2.root == p);

  // Non-monic input is normalized and flagged.
  SquareDecomposition d3 = perfect_square(GRat(4) * (p * p));
  CHECK(d3.is_square);
  CHECK(d3.normalized);

  CHECK(raises(errc::domain, [] { perfect_square(Poly()); }));

  std::mt19937 rng(47);
  for (int t = 0; t < 100; ++t) {
    Poly q = random_int_poly(rng, 1 + static_cast<int>(rng() % 4), true);
    SquareDecomposition d = perfect_square(q * q);
    CHECK(d.is_square);
    CHECK(*d.root * *d.root == q * q);
    // A square with one extra simple factor is not a square.
    Poly spoiled = q * q * int_poly({1, 1});
    CHECK_FALSE(perfect_square(spoiled).is_square);
  }
}

TEST_CASE("polynomial rendering is exact and readable") {
  CHECK(int_poly({6, -5, 1}).str("t") == "t^2 - 5*t + 6");
  CHECK(Poly().str("t") == "0");
  CHECK(Poly::constant(GRat(Rat(Int(-1), Int(2)))).str("t") == "-1/2");
}
