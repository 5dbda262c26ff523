#include "core/q8.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace lsp {
namespace q8 {

namespace {

Group build() {
  Group g;
  g.names = {"1", "-1", "i", "-i", "j", "-j", "ij", "-ij"};

  // 2x2 model: H as a right C-module with basis (1, j).
  CMat one = CMat::identity(2);
  CMat mi(2, 2);
  mi.at(0, 0) = GRat::i();
  mi.at(1, 1) = -GRat::i();
  CMat mj(2, 2);
  mj.at(0, 1) = GRat(-1);
  mj.at(1, 0) = GRat(1);
  CMat mij = mi * mj;
  g.model = {one, -one, mi, -mi, mj, -mj, mij, -mij};

  std::map<CMat, int> index;
  for (int a = 0; a < Group::kOrder; ++a) {
    check_invariant(index.emplace(g.model[a], a).second,
                    "model matrices are not distinct");
  }
  for (int a = 0; a < Group::kOrder; ++a)
    for (int b = 0; b < Group::kOrder; ++b) {
      auto it = index.find(g.model[a] * g.model[b]);
      check_invariant(it != index.end(), "model is not closed under product");
      g.mul[a][b] = it->second;
    }
  // Group axioms, verified exhaustively.
  for (int a = 0; a < 8; ++a) {
    check_invariant(g.mul[0][a] == a && g.mul[a][0] == a, "identity fails");
    bool has_inverse = false;
    for (int b = 0; b < 8; ++b)
      if (g.mul[a][b] == 0 && g.mul[b][a] == 0) {
        g.inverse[a] = b;
        has_inverse = true;
        break;
      }
    check_invariant(has_inverse, "element without inverse");
  }
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b)
      for (int c = 0; c < 8; ++c)
        check_invariant(g.mul[g.mul[a][b]][c] == g.mul[a][g.mul[b][c]],
                        "associativity fails");

  // Conjugacy classes, ordered by smallest member.
  std::vector<bool> placed(8, false);
  for (int a = 0; a < 8; ++a) {
    if (placed[a]) continue;
    std::set<int> cls;
    for (int h = 0; h < 8; ++h) cls.insert(g.mul[g.mul[h][a]][g.inverse[h]]);
    std::vector<int> members(cls.begin(), cls.end());
    for (int m : members) {
      placed[m] = true;
      g.class_of[m] = static_cast<int>(g.classes.size());
    }
    g.classes.push_back(std::move(members));
  }
  check_invariant(g.classes.size() == 5, "Q8 must have five classes");

  // Four linear characters (pulled back from the quotient by {+-1}) and
  // the trace of the 2x2 model.
  g.irrep_names = {"triv", "chi_i", "chi_j", "chi_ij", "H"};
  g.degrees = {1, 1, 1, 1, 2};
  auto sign_char = [&](bool flip_i, bool flip_j) {
    std::vector<GRat> row;
    for (const auto& cls : g.classes) {
      int rep = cls.front();
      // Value determined by which generator pair the element involves.
      int v = 1;
      if (flip_i && (rep == 2 || rep == 3 || rep == 6 || rep == 7)) v = -v;
      if (flip_j && (rep == 4 || rep == 5 || rep == 6 || rep == 7)) v = -v;
      row.push_back(GRat(v));
    }
    return row;
  };
  g.table.push_back(sign_char(false, false));
  g.table.push_back(sign_char(false, true));   // kernel contains i
  g.table.push_back(sign_char(true, false));   // kernel contains j
  g.table.push_back(sign_char(true, true));    // kernel contains ij
  std::vector<GRat> trace_row;
  for (const auto& cls : g.classes) trace_row.push_back(g.model[cls.front()].trace());
  g.table.push_back(std::move(trace_row));

  // Each linear row must actually be a homomorphism on elements.
  for (int r = 0; r < 4; ++r) {
    auto chi = [&](int a) { return g.table[r][g.class_of[a]]; };
    for (int a = 0; a < 8; ++a)
      for (int b = 0; b < 8; ++b)
        check_invariant(chi(a) * chi(b) == chi(g.mul[a][b]),
                        "linear row is not multiplicative");
  }
  // Characters are class functions of the model in row 5 by construction;
  // check the trace really is constant on classes.
  for (const auto& cls : g.classes)
    for (int m : cls)
      check_invariant(g.model[m].trace() == g.table[4][g.class_of[m]],
                      "trace is not constant on a class");

  // Orthogonality, both ways, over the group algebra.
  auto chi_at = [&](int r, int a) { return g.table[r][g.class_of[a]]; };
  for (int r = 0; r < 5; ++r)
    for (int s = 0; s < 5; ++s) {
      GRat sum;
      for (int a = 0; a < 8; ++a) sum += chi_at(r, a) * chi_at(s, a).conj();
      check_invariant(sum == GRat(r == s ? 8 : 0), "row orthogonality fails");
    }
  for (size_t ca = 0; ca < g.classes.size(); ++ca)
    for (size_t cb = 0; cb < g.classes.size(); ++cb) {
      GRat sum;
      for (int r = 0; r < 5; ++r) sum += g.table[r][ca] * g.table[r][cb].conj();
      long expect = (ca == cb) ? 8 / static_cast<long>(g.classes[ca].size()) : 0;
      check_invariant(sum == GRat(Rat(expect)), "column orthogonality fails");
    }

  // Frobenius-Schur indicators: (1/8) sum_g chi(g^2).
  for (int r = 0; r < 5; ++r) {
    GRat sum;
    for (int a = 0; a < 8; ++a) sum += chi_at(r, g.mul[a][a]);
    check_invariant(sum.is_real(), "indicator must be rational");
    g.fs_indicator.push_back(sum.re / Rat(8));
  }
  return g;
}

}  // namespace

const Group& group() {
  static const Group g = build();
  return g;
}

Assembly assemble(RepType type, long m) {
  if (m < 1) fail(errc::usage, "multiplicity must be >= 1");
  Assembly a;
  a.type = type;
  a.m = m;
  a.real_unit = "V_R";
  switch (type) {
    case RepType::real:
      a.complex_unit = "V";
      a.complex_copies = m;
      a.real_copies = m;
      a.complex_units_total = m;      // dim_C V per copy
      a.real_units_total = m;         // V_R has the dimension of V
      break;
    case RepType::complex:
      a.complex_unit = "HxV";
      a.complex_copies = m;
      a.real_copies = m;
      a.complex_units_total = 2 * m;  // H x V doubles the dimension
      a.real_units_total = 2 * m;     // V_R is V viewed over R, twice as big
      break;
    case RepType::quaternionic:
      if (m % 2 != 0)
        fail(errc::invariant,
             "quaternionic blocks carry a J-action, so odd multiplicity " +
                 std::to_string(m) + " is impossible");
      a.complex_unit = "HxV";
      a.complex_copies = m / 2;
      a.real_copies = m / 2;
      a.complex_units_total = m;
      a.real_units_total = m;
      break;
  }
  check_invariant(a.complex_units_total == a.real_units_total,
                  "complex and real bookkeeping disagree");
  auto pretty = [](const std::string& unit, long copies) {
    std::string u = unit;
    if (u == "HxV") u = "(ℍ⊗V)";
    if (u == "V_R") u = "V_ℝ";
    return u + "^⊕" + std::to_string(copies);
  };
  a.complex_label = pretty(a.complex_unit, a.complex_copies);
  a.real_label = pretty(a.real_unit, a.real_copies);
  return a;
}

SimplicityVerdict simplicity_dictionary(const std::vector<RepEntry>& reps) {
  std::map<std::string, size_t> by_id;
  for (size_t i = 0; i < reps.size(); ++i) {
    if (reps[i].id.empty()) fail(errc::usage, "entry with empty id");
    if (!by_id.emplace(reps[i].id, i).second)
      fail(errc::usage, "duplicate rep id '" + reps[i].id + "'");
  }
  for (const RepEntry& r : reps) {
    std::set<Rat> seen;
    for (const auto& [eig, mult] : r.eigs) {
      if (mult < 1) fail(errc::usage, "multiplicity must be >= 1");
      if (!seen.insert(eig).second)
        fail(errc::usage, "repeated eigenvalue inside entry '" + r.id + "'");
      if (r.type == RepType::quaternionic && mult % 2 != 0)
        fail(errc::usage,
             "quaternionic entry '" + r.id + "' with odd multiplicity");
    }
    bool has_dual = r.dual_id.has_value() && *r.dual_id != r.id;
    if ((r.type == RepType::complex) != has_dual)
      fail(errc::usage, "entry '" + r.id +
                            "': complex entries need a distinct dual partner "
                            "and self-dual entries must not name one");
    if (has_dual) {
      auto it = by_id.find(*r.dual_id);
      if (it == by_id.end())
        fail(errc::usage, "entry '" + r.id + "' names unknown dual '" +
                              *r.dual_id + "'");
      const RepEntry& d = reps[it->second];
      if (!d.dual_id || *d.dual_id != r.id)
        fail(errc::usage, "dual pairing of '" + r.id + "' is not symmetric");
      if (d.type != RepType::complex)
        fail(errc::usage, "dual partner of '" + r.id + "' must be complex");
      // Conjugate blocks share their spectrum.
      auto sorted = [](std::vector<std::pair<Rat, long>> v) {
        std::sort(v.begin(), v.end());
        return v;
      };
      if (sorted(r.eigs) != sorted(d.eigs))
        fail(errc::usage, "dual pair '" + r.id + "'/'" + d.id +
                              "' with different eigenvalue multisets");
    }
  }

  SimplicityVerdict v;
  bool complex_ok = true;  // from the complex labels
  bool real_ok = true;     // from the real labels
  for (const RepEntry& r : reps)
    for (const auto& [eig, mult] : r.eigs) {
      Assembly a = assemble(r.type, mult);
      long cx_exp = a.complex_copies;
      long re_exp = a.real_copies;
      if (cx_exp != 1 || re_exp != 1) {
        if (cx_exp != 1) complex_ok = false;
        if (re_exp != 1) real_ok = false;
        v.failures.push_back({r.id, eig, mult, cx_exp, re_exp});
      }
    }

  // Eigenvalues shared across entries break simplicity unless the two
  // entries form a dual pair (which contributes a single real block).
  std::map<Rat, std::vector<size_t>> shared;
  for (size_t i = 0; i < reps.size(); ++i)
    for (const auto& [eig, mult] : reps[i].eigs) shared[eig].push_back(i);
  for (const auto& [eig, holders] : shared)
    for (size_t a = 0; a < holders.size(); ++a)
      for (size_t b = a + 1; b < holders.size(); ++b) {
        const RepEntry& ra = reps[holders[a]];
        const RepEntry& rb = reps[holders[b]];
        bool dual_pair = ra.dual_id && *ra.dual_id == rb.id;
        if (!dual_pair) {
          complex_ok = false;
          real_ok = false;
          v.cross.push_back({ra.id, rb.id, eig});
        }
      }

  check_invariant(complex_ok == real_ok,
                  "complex and real simplicity readings disagree");
  v.complex_simple = complex_ok;
  v.real_simple = real_ok;
  return v;
}

}  // namespace q8
}  // namespace lsp
