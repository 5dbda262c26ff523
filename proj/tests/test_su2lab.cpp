#include "doctest.h"

#include <set>

#include "core/su2_lab.hpp"
#include "test_util.hpp"

using namespace lsp;
using namespace lsp::su2;
using testutil::raises;

namespace {

QMat diag3(long a, long b, long c) {
  QMat k(3, 3);
  k.at(0, 0) = Rat(a);
  k.at(1, 1) = Rat(b);
  k.at(2, 2) = Rat(c);
  return k;
}

CMat casimir_sum(const Rep& rep) {
  long n = rep.m + 1;
  CMat acc(static_cast<int>(n), static_cast<int>(n));
  for (const CMat& r : rep.rho) acc = acc + r * r;
  return -acc;
}

CMat one_by_one(const GRat& v) {
  CMat m(1, 1);
  m.at(0, 0) = v;
  return m;
}

}  // namespace

TEST_CASE("antihermitian basis with the doubled cross-product bracket") {
  const auto& u = basis_u();
  CMat comm12 = u[0] * u[1] - u[1] * u[0];
  CHECK(comm12 == GRat(-2) * u[2]);
  CMat comm23 = u[1] * u[2] - u[2] * u[1];
  CHECK(comm23 == GRat(-2) * u[0]);
  CMat comm31 = u[2] * u[0] - u[0] * u[2];
  CHECK(comm31 == GRat(-2) * u[1]);

  // -1/2 tr(u_a u_b) = delta_ab.
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      GRat tr = (u[a] * u[b]).trace();
      CHECK(tr == GRat(a == b ? -2 : 0));
    }

  CHECK(bracket_coords(0, 1) == QVec{Rat(0), Rat(0), Rat(-2)});
  CHECK(bracket_coords(1, 0) == QVec{Rat(0), Rat(0), Rat(2)});
  CHECK(bracket_coords(2, 0) == QVec{Rat(0), Rat(-2), Rat(0)});
  CHECK(bracket_coords(1, 1) == QVec(3, Rat(0)));
}

TEST_CASE("irreducible actions satisfy the defining identities") {
  Rep r0 = irrep(0);
  for (const CMat& m : r0.rho) CHECK(m == CMat(1, 1));

  Rep r1 = irrep(1);
  for (int a = 0; a < 3; ++a) CHECK(r1.rho[a] == basis_u()[a]);

  for (long m : {2L, 3L, 5L, 8L}) {
    Rep rep = irrep(m);
    CHECK(casimir_sum(rep) ==
          GRat(Rat(m * (m + 2))) * CMat::identity(static_cast<int>(m + 1)));
    // Bracket homomorphism on one generator pair.
    CMat comm = rep.rho[0] * rep.rho[1] - rep.rho[1] * rep.rho[0];
    CHECK(comm == GRat(-2) * rep.rho[2]);
  }

  CHECK(raises(errc::capacity, [] { irrep(-1); }));
  CHECK(raises(errc::capacity, [] { irrep(65); }));
}

TEST_CASE("identity metric gives the casimir scalar") {
  for (long m = 0; m <= 8; ++m) {
    OperatorBundle b = d_operator(QMat::identity(3), m);
    CHECK(b.kappa_positive);
    CHECK(b.matrix ==
          GRat(Rat(m * (m + 2))) * CMat::identity(static_cast<int>(m + 1)));
    CHECK(b.type == (m % 2 == 0 ? RepType::real : RepType::quaternionic));
    if (m % 2 == 1) {
      CHECK(b.square.is_square);
      REQUIRE(b.square.root.has_value());
      CHECK(b.square.root->degree() == (m + 1) / 2);
    }
  }
}

TEST_CASE("rank-one blocks collapse to the trace") {
  // On the two-dimensional irreducible each rho_a^2 = -id, so
  // D = (sum_a kappa_aa) id: only the trace of the metric survives.
  for (long a = 1; a <= 3; ++a) {
    QMat kappa = diag3(a, a + 1, 2 * a);
    OperatorBundle b = d_operator(kappa, 1);
    CHECK(b.matrix == GRat(Rat(4 * a + 1)) * CMat::identity(2));
    CHECK(b.square.is_square);
  }
}

TEST_CASE("frozen characteristic polynomial at weight two") {
  OperatorBundle b = d_operator(diag3(1, 2, 3), 2);
  // Computed once from the monomial model and kept as a regression anchor.
  Poly expected(std::vector<GRat>{GRat(-3840), GRat(752), GRat(-48), GRat(1)});
  CHECK(b.cp == expected);
  CHECK_FALSE(b.square.is_square);
  CHECK(b.kappa_positive);
}

TEST_CASE("asymmetric metrics are rejected before any work") {
  QMat k(3, 3);
  k.at(0, 1) = Rat(1);  // not symmetric
  CHECK(raises(errc::usage, [&] { d_operator(k, 2); }));
  QMat wrong_size = QMat::identity(2);
  CHECK(raises(errc::usage, [&] { d_operator(wrong_size, 2); }));
}

TEST_CASE("indefinite metrics are flagged but still processed") {
  OperatorBundle b = d_operator(diag3(1, 1, -1), 2);
  CHECK_FALSE(b.kappa_positive);
  CHECK(b.cp.degree() == 3);
}

TEST_CASE("invariant subspaces of the restricted action") {
  InvariantSubspace all = invariant_subspace({0, 1, 2}, 4);
  CHECK(all.basis.empty());  // no invariants in a nontrivial irreducible

  InvariantSubspace none = invariant_subspace({}, 3);
  CHECK(none.k_dirs.empty());
  CHECK(none.m_dirs == std::vector<int>{0, 1, 2});
  CHECK(none.basis.size() == 4);  // whole space

  // A single direction spans a torus; even weights keep one invariant line.
  InvariantSubspace torus2 = invariant_subspace({2}, 2);
  CHECK(torus2.m_dirs == std::vector<int>{0, 1});
  CHECK(torus2.basis.size() == 1);
  InvariantSubspace torus1 = invariant_subspace({2}, 1);
  CHECK(torus1.basis.empty());
  InvariantSubspace torus4 = invariant_subspace({0}, 4);
  CHECK(torus4.basis.size() == 1);

  // Two directions never close into a subalgebra.
  CHECK(raises(errc::usage, [] { invariant_subspace({0, 1}, 2); }));
  CHECK(raises(errc::usage, [] { invariant_subspace({3}, 2); }));
  CHECK(raises(errc::usage, [] { invariant_subspace({0, 0}, 2); }));
}

TEST_CASE("restriction to the invariant line is linear in the metric") {
  InvariantSubspace sub2 = invariant_subspace({2}, 2);
  InvariantSubspace sub4 = invariant_subspace({2}, 4);
  for (long s = 1; s <= 4; ++s) {
    QMat kmm = QMat::identity(2);
    kmm.at(0, 0) = Rat(s);
    kmm.at(1, 1) = Rat(s);
    Restricted r2 = restricted_operator(kmm, 2, sub2);
    CHECK(r2.compressed == one_by_one(GRat(Rat(8 * s))));
    Restricted r4 = restricted_operator(kmm, 4, sub4);
    CHECK(r4.compressed == one_by_one(GRat(Rat(24 * s))));
  }

  // The full space with the identity metric reproduces the plain operator.
  InvariantSubspace whole = invariant_subspace({}, 3);
  Restricted rw = restricted_operator(QMat::identity(3), 3, whole);
  CHECK(rw.cp == d_operator(QMat::identity(3), 3).cp);
}

TEST_CASE("incompatible restricted metrics are domain errors") {
  InvariantSubspace sub = invariant_subspace({2}, 4);
  QMat kmm(2, 2);
  kmm.at(0, 0) = Rat(1);
  kmm.at(1, 1) = Rat(2);
  CHECK(raises(errc::domain, [&] { restricted_operator(kmm, 4, sub); }));

  // Odd weights have no invariants at all; restriction is impossible.
  InvariantSubspace empty = invariant_subspace({2}, 1);
  CHECK(raises(errc::domain, [&] {
    restricted_operator(QMat::identity(2), 1, empty);
  }));

  CHECK(raises(errc::usage, [&] { restricted_operator(QMat::identity(3), 4, sub); }));
}

TEST_CASE("resultant criteria separate distinct weights") {
  QMat id = QMat::identity(3);
  // At the identity metric the spectra are the exact casimir scalars, so
  // the pair criterion is a power of their difference.
  Rat v01 = crit_pair(0, 1, id);
  CHECK(v01 != Rat(0));
  Rat v02 = crit_pair(0, 2, id);
  // res(p0, p2) = p2 evaluated at the single root of p0 = t - 0.
  OperatorBundle b2 = d_operator(id, 2);
  CHECK(v02 == b2.cp.eval(GRat(0)).re);
  CHECK(v02 == Rat(-512));  // (0 - 8)^3

  CHECK(raises(errc::usage, [&] { crit_pair(2, 2, id); }));
  CHECK(raises(errc::capacity, [&] { crit_pair(-1, 2, id); }));

  // Weight one is a doubled point: derivative criterion vanishes, the
  // second-derivative criterion does not.
  CHECK(crit_even(1, id) == Rat(0));
  CHECK(crit_odd(1, id) == Rat(4));
  CHECK(crit_even(2, id) == Rat(0));  // scalar matrix: triple eigenvalue
  CHECK(crit_odd(3, id) == Rat(0));   // scalar matrix again

  // A generic diagonal metric separates the weight-two spectrum.
  CHECK(crit_even(2, diag3(1, 2, 3)) != Rat(0));
}

TEST_CASE("the default schedule starts at the identity and stays positive") {
  std::vector<QMat> sched = default_schedule();
  REQUIRE(sched.size() == 8);
  CHECK(sched[0] == QMat::identity(3));
  std::set<QMat> distinct(sched.begin(), sched.end());
  CHECK(distinct.size() == sched.size());
  for (const QMat& k : sched) {
    CHECK(k == k.transpose());
    // Positivity via leading principal minors.
    CHECK(k.at(0, 0) > Rat(0));
    CHECK(k.at(0, 0) * k.at(1, 1) - k.at(0, 1) * k.at(1, 0) > Rat(0));
    CHECK(det(k) > Rat(0));
  }
}

TEST_CASE("certification finds witnesses over the default schedule") {
  Certificate cert = certify(6, default_schedule());
  CHECK(cert.complete);
  CHECK(cert.m_max == 6);

  size_t pairs = 0, evens = 0, odds = 0;
  for (const CertItem& item : cert.items) {
    CHECK(item.witness_index >= 0);
    CHECK(item.witness_index < static_cast<int>(cert.schedule.size()));
    CHECK(item.value != Rat(0));
    if (item.kind == "pair") {
      ++pairs;
      CHECK(item.m1 < item.m2);
      CHECK(crit_pair(item.m1, item.m2,
                      cert.schedule[static_cast<size_t>(item.witness_index)]) ==
            item.value);
    } else if (item.kind == "even") {
      ++evens;
      CHECK(item.m1 % 2 == 0);
    } else {
      CHECK(item.kind == "odd");
      ++odds;
      CHECK(item.m1 % 2 == 1);
    }
  }
  CHECK(pairs == 21);  // all m1 < m2 within 0..6
  CHECK(evens == 4);   // m = 0, 2, 4, 6
  CHECK(odds == 3);    // m = 1, 3, 5

  // Odd weights certify the doubled pattern at every schedule entry.
  CHECK(cert.odd_checks.size() == 3);
  for (const OddVanishing& ov : cert.odd_checks) CHECK(ov.all_zero);
}

TEST_CASE("a one-entry schedule cannot certify and says so") {
  std::vector<QMat> sched = {QMat::identity(3)};
  Certificate cert = certify(4, sched);
  CHECK_FALSE(cert.complete);
  bool some_missing = false;
  for (const CertItem& item : cert.items)
    if (item.witness_index < 0) some_missing = true;
  CHECK(some_missing);
  CHECK(raises(errc::capacity, [] { certify(13, default_schedule()); }));
  CHECK(raises(errc::usage, [] { certify(2, {}); }));
}

TEST_CASE("generic spectra realize the certified pattern") {
  Certificate cert = certify(4, default_schedule());
  std::vector<q8::RepEntry> reps = generic_spectra(cert);
  REQUIRE(reps.size() == 5);

  std::set<Rat> all_labels;
  for (const q8::RepEntry& r : reps) {
    long m = -1;
    for (long cand = 0; cand <= 4; ++cand)
      if (r.id == "V" + std::to_string(cand)) m = cand;
    REQUIRE(m >= 0);
    if (m % 2 == 0) {
      CHECK(r.type == RepType::real);
      CHECK(r.eigs.size() == static_cast<size_t>(m + 1));
      for (const auto& [eig, mult] : r.eigs) CHECK(mult == 1);
    } else {
      CHECK(r.type == RepType::quaternionic);
      CHECK(r.eigs.size() == static_cast<size_t>((m + 1) / 2));
      for (const auto& [eig, mult] : r.eigs) CHECK(mult == 2);
    }
    for (const auto& [eig, mult] : r.eigs) {
      CHECK(all_labels.insert(eig).second);  // distinct across weights
    }
  }

  // The formal labels certify simplicity through the dictionary.
  q8::SimplicityVerdict v = q8::simplicity_dictionary(reps);
  CHECK(v.real_simple);
  CHECK(v.complex_simple);

  Certificate incomplete = certify(4, {QMat::identity(3)});
  CHECK(raises(errc::undecided, [&] { generic_spectra(incomplete); }));
}

TEST_CASE("both normalizations agree up to one global factor") {
  Bridge b = casimir_bridge(8);
  CHECK(b.factor == Rat(2));
  // One row per weight, the zero row included: both normalizations put
  // the constants at eigenvalue zero, and the ratio is read off m >= 1.
  CHECK(b.rows.size() == 9);
  CHECK(b.rows.front().m == 0);
  CHECK(b.rows.front().lab_value == Rat(0));
  for (const BridgeRow& row : b.rows) {
    CHECK(row.lab_value == Rat(row.m * (row.m + 2)));
    CHECK(row.lab_value == b.factor * row.casimir_value);
  }
  CHECK(raises(errc::domain, [] { casimir_bridge(0); }));
  CHECK(raises(errc::capacity, [] { casimir_bridge(100); }));
}
