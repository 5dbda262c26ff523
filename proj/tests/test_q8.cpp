#include "doctest.h"

#include <set>

#include "core/q8.hpp"
#include "test_util.hpp"

using namespace lsp;
using lsp::q8::Assembly;
using lsp::q8::CrossCollision;
using lsp::q8::EigFailure;
using lsp::q8::Group;
using lsp::q8::RepEntry;
using lsp::q8::SimplicityVerdict;
using testutil::raises;

namespace {

int index_of(const Group& g, const std::string& name) {
  for (int i = 0; i < Group::kOrder; ++i)
    if (g.names[i] == name) return i;
  REQUIRE(false);
  return -1;
}

RepEntry entry(std::string id, RepType t, std::vector<std::pair<Rat, long>> e,
               std::optional<std::string> dual = std::nullopt) {
  RepEntry r;
  r.id = std::move(id);
  r.type = t;
  r.dual_id = std::move(dual);
  r.eigs = std::move(e);
  return r;
}

}  // namespace

TEST_CASE("the unit group has the hamilton multiplication") {
  const Group& g = q8::group();
  int one = index_of(g, "1");
  int mone = index_of(g, "-1");
  int i = index_of(g, "i");
  int j = index_of(g, "j");
  int k = index_of(g, "ij");

  CHECK(g.mul[i][j] == k);
  CHECK(g.mul[j][i] == index_of(g, "-ij"));
  CHECK(g.mul[i][i] == mone);
  CHECK(g.mul[j][j] == mone);
  CHECK(g.mul[k][k] == mone);
  CHECK(g.mul[mone][mone] == one);
  for (int a = 0; a < Group::kOrder; ++a) {
    CHECK(g.mul[one][a] == a);
    CHECK(g.mul[a][g.inverse[a]] == one);
  }

  // The matrix model realizes the same table.
  for (int a = 0; a < Group::kOrder; ++a)
    for (int b = 0; b < Group::kOrder; ++b)
      CHECK(g.model[a] * g.model[b] == g.model[g.mul[a][b]]);
}

TEST_CASE("class structure and character table") {
  const Group& g = q8::group();
  CHECK(g.classes.size() == 5);
  CHECK(g.degrees == std::vector<int>{1, 1, 1, 1, 2});
  CHECK(g.fs_indicator ==
        std::vector<Rat>{Rat(1), Rat(1), Rat(1), Rat(1), Rat(-1)});

  // Sum of squared degrees is the group order.
  int sq = 0;
  for (int d : g.degrees) sq += d * d;
  CHECK(sq == Group::kOrder);

  // The degree-2 character takes -2 on the centre's nontrivial element.
  int mone = index_of(g, "-1");
  int col = g.class_of[mone];
  CHECK(g.table[4][static_cast<size_t>(col)] == GRat(-2));
  CHECK(g.table[4][static_cast<size_t>(g.class_of[index_of(g, "i")])] ==
        GRat(0));

  // Column orthogonality at the identity column recovers the order.
  int id_col = g.class_of[index_of(g, "1")];
  GRat acc(0);
  for (size_t r = 0; r < g.table.size(); ++r) {
    GRat v = g.table[r][static_cast<size_t>(id_col)];
    acc = acc + v * v.conj();
  }
  CHECK(acc == GRat(8));
}

TEST_CASE("eigenspace assembly bookkeeping") {
  // real type: plain copies on both sides, one unit each.
  Assembly r1 = q8::assemble(RepType::real, 1);
  CHECK(r1.complex_unit == "V");
  CHECK(r1.complex_copies == 1);
  CHECK(r1.real_copies == 1);
  CHECK(r1.complex_units_total == 1);

  Assembly r3 = q8::assemble(RepType::real, 3);
  CHECK(r3.complex_copies == 3);
  CHECK(r3.real_copies == 3);
  CHECK(r3.complex_units_total == 3);

  // complex type: each copy stands for a dual pair, so units double.
  Assembly c1 = q8::assemble(RepType::complex, 1);
  CHECK(c1.complex_unit == "HxV");
  CHECK(c1.complex_copies == 1);
  CHECK(c1.real_copies == 1);
  CHECK(c1.complex_units_total == 2);
  Assembly c2 = q8::assemble(RepType::complex, 2);
  CHECK(c2.complex_copies == 2);
  CHECK(c2.complex_units_total == 4);
  CHECK(c2.complex_units_total == c2.real_units_total);

  // quaternionic type: the quaternion factor absorbs a factor of two.
  Assembly q2 = q8::assemble(RepType::quaternionic, 2);
  CHECK(q2.complex_unit == "HxV");
  CHECK(q2.complex_copies == 1);
  CHECK(q2.real_copies == 1);
  CHECK(q2.complex_units_total == 2);
  Assembly q4 = q8::assemble(RepType::quaternionic, 4);
  CHECK(q4.complex_copies == 2);
  CHECK(q4.real_copies == 2);
  CHECK(q4.complex_units_total == 4);

  CHECK(raises(errc::invariant, [] { q8::assemble(RepType::quaternionic, 3); }));
  CHECK(raises(errc::usage, [] { q8::assemble(RepType::real, 0); }));
  CHECK(raises(errc::usage, [] { q8::assemble(RepType::complex, -2); }));
}

TEST_CASE("assembly labels read like isotypic decompositions") {
  CHECK(q8::assemble(RepType::real, 2).complex_label == "V^⊕2");
  CHECK(q8::assemble(RepType::real, 3).real_label == "V_ℝ^⊕3");
  CHECK(q8::assemble(RepType::quaternionic, 2).complex_label == "(ℍ⊗V)^⊕1");
  CHECK(q8::assemble(RepType::complex, 1).real_label == "V_ℝ^⊕1");
  CHECK(q8::assemble(RepType::complex, 1).complex_label == "(ℍ⊗V)^⊕1");
}

TEST_CASE("dictionary: disjoint simple spectra stay simple on both sides") {
  std::vector<RepEntry> reps = {
      entry("t", RepType::real, {{Rat(0), 1}, {Rat(2), 1}}),
      entry("s", RepType::quaternionic, {{Rat(3), 2}, {Rat(7), 2}}),
  };
  SimplicityVerdict v = q8::simplicity_dictionary(reps);
  CHECK(v.real_simple);
  CHECK(v.complex_simple);
  CHECK(v.failures.empty());
  CHECK(v.cross.empty());
}

TEST_CASE("dictionary: quaternionic multiplicity two is the boundary") {
  // mult 2 on a quaternionic entry is exactly one quaternion block and
  // stays simple in both readings; mult 4 is the first genuine split.
  std::vector<RepEntry> ok = {
      entry("s", RepType::quaternionic, {{Rat(1), 2}}),
  };
  SimplicityVerdict v1 = q8::simplicity_dictionary(ok);
  CHECK(v1.complex_simple);
  CHECK(v1.real_simple);
  CHECK(v1.failures.empty());

  std::vector<RepEntry> bad = {
      entry("s", RepType::quaternionic, {{Rat(1), 4}}),
  };
  SimplicityVerdict v2 = q8::simplicity_dictionary(bad);
  CHECK_FALSE(v2.complex_simple);
  CHECK_FALSE(v2.real_simple);
  REQUIRE(v2.failures.size() == 1);
  CHECK(v2.failures[0].rep_id == "s");
  CHECK(v2.failures[0].mult == 4);
  CHECK(v2.failures[0].complex_exponent == 2);
  CHECK(v2.failures[0].real_exponent == 2);
}

TEST_CASE("dictionary: real entries fail only at multiplicity two") {
  std::vector<RepEntry> reps = {
      entry("a", RepType::real, {{Rat(5), 2}}),
  };
  SimplicityVerdict v = q8::simplicity_dictionary(reps);
  CHECK_FALSE(v.real_simple);
  CHECK_FALSE(v.complex_simple);
  REQUIRE(v.failures.size() == 1);
  CHECK(v.failures[0].eig == Rat(5));
  CHECK(v.failures[0].complex_exponent == 2);
  CHECK(v.failures[0].real_exponent == 2);
}

TEST_CASE("dictionary: dual pairs share eigenvalues without penalty") {
  std::vector<RepEntry> reps = {
      entry("w", RepType::complex, {{Rat(4), 1}}, "w*"),
      entry("w*", RepType::complex, {{Rat(4), 1}}, "w"),
  };
  SimplicityVerdict v = q8::simplicity_dictionary(reps);
  CHECK(v.real_simple);
  CHECK(v.complex_simple);
  CHECK(v.cross.empty());
}

TEST_CASE("dictionary: unrelated entries sharing an eigenvalue collide") {
  std::vector<RepEntry> reps = {
      entry("a", RepType::real, {{Rat(6), 1}}),
      entry("b", RepType::real, {{Rat(6), 1}}),
  };
  SimplicityVerdict v = q8::simplicity_dictionary(reps);
  CHECK_FALSE(v.real_simple);
  CHECK_FALSE(v.complex_simple);
  REQUIRE(v.cross.size() == 1);
  CHECK(v.cross[0].eig == Rat(6));
  std::set<std::string> pair = {v.cross[0].rep_a, v.cross[0].rep_b};
  CHECK(pair == std::set<std::string>{"a", "b"});
}

TEST_CASE("dictionary input validation") {
  // Odd multiplicity on a quaternionic entry is rejected at the door.
  std::vector<RepEntry> odd = {
      entry("s", RepType::quaternionic, {{Rat(1), 1}}),
  };
  CHECK(raises(errc::usage, [&] { q8::simplicity_dictionary(odd); }));

  // Self-dual entries must not point at a partner.
  std::vector<RepEntry> fake_dual = {
      entry("a", RepType::real, {{Rat(1), 1}}, "b"),
      entry("b", RepType::real, {{Rat(2), 1}}, "a"),
  };
  CHECK(raises(errc::usage, [&] { q8::simplicity_dictionary(fake_dual); }));

  // Complex entries need a dual partner with the same multiset.
  std::vector<RepEntry> lone = {
      entry("w", RepType::complex, {{Rat(1), 1}}),
  };
  CHECK(raises(errc::usage, [&] { q8::simplicity_dictionary(lone); }));

  std::vector<RepEntry> mismatched = {
      entry("w", RepType::complex, {{Rat(1), 1}}, "w*"),
      entry("w*", RepType::complex, {{Rat(2), 1}}, "w"),
  };
  CHECK(raises(errc::usage, [&] { q8::simplicity_dictionary(mismatched); }));

  std::vector<RepEntry> dup = {
      entry("a", RepType::real, {{Rat(1), 1}}),
      entry("a", RepType::real, {{Rat(2), 1}}),
  };
  CHECK(raises(errc::usage, [&] { q8::simplicity_dictionary(dup); }));

  std::vector<RepEntry> nonpos = {
      entry("a", RepType::real, {{Rat(1), 0}}),
  };
  CHECK(raises(errc::usage, [&] { q8::simplicity_dictionary(nonpos); }));
}
