#include "core/su2_lab.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "core/errors.hpp"
#include "core/root_system.hpp"
#include "core/spectrum.hpp"

namespace lsp {
namespace su2 {

namespace {

constexpr long kMaxIrrep = 64;
constexpr long kMaxCertify = 12;

CMat make2(GRat a, GRat b, GRat c, GRat d) {
  CMat m(2, 2);
  m.at(0, 0) = std::move(a);
  m.at(0, 1) = std::move(b);
  m.at(1, 0) = std::move(c);
  m.at(1, 1) = std::move(d);
  return m;
}

// -1/2 tr(xy), the pairing that makes u1, u2, u3 orthonormal.
GRat pairing(const CMat& x, const CMat& y) {
  return -(GRat(Rat(1, Int(2))) * (x * y).trace());
}

CMat commutator(const CMat& x, const CMat& y) { return x * y - y * x; }

// The single rank-one reference system used for type and eigenvalue
// normalization questions.
const RootSystem& a1() {
  static const RootSystem rs = RootSystem::build(Family::A, 1);
  return rs;
}

void require_symmetric3(const QMat& kappa, const char* what) {
  if (kappa.rows() != 3 || kappa.cols() != 3)
    fail(errc::usage, std::string(what) + " must be 3x3");
  if (!is_symmetric(kappa))
    fail(errc::usage, std::string(what) + " must be symmetric");
}

bool positive_definite(const QMat& kappa) {
  for (int k = 1; k <= kappa.rows(); ++k) {
    QMat lead(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) lead.at(i, j) = kappa.at(i, j);
    if (!(det(lead) > Rat(0))) return false;
  }
  return true;
}

QMat diag3(long a, long b, long c) {
  QMat m(3, 3);
  m.at(0, 0) = Rat(a);
  m.at(1, 1) = Rat(b);
  m.at(2, 2) = Rat(c);
  return m;
}

QMat sym3(long a00, long a01, long a02, long a11, long a12, long a22) {
  QMat m(3, 3);
  m.at(0, 0) = Rat(a00);
  m.at(0, 1) = m.at(1, 0) = Rat(a01);
  m.at(0, 2) = m.at(2, 0) = Rat(a02);
  m.at(1, 1) = Rat(a11);
  m.at(1, 2) = m.at(2, 1) = Rat(a12);
  m.at(2, 2) = Rat(a22);
  return m;
}

// Derivation action of a 2x2 matrix on degree-m monomials e_k = x^(m-k) y^k,
// normalized so that m = 1 reproduces the matrix itself:
//   X e_k = (m-k) a e_k + (m-k) c e_{k+1} + k b e_{k-1} + k d e_k
// for X = [[a,b],[c,d]].
CMat rho_of(const CMat& x, long m) {
  const int n = static_cast<int>(m) + 1;
  const GRat& a = x.at(0, 0);
  const GRat& b = x.at(0, 1);
  const GRat& c = x.at(1, 0);
  const GRat& d = x.at(1, 1);
  CMat r(n, n);
  for (int k = 0; k < n; ++k) {
    GRat mk(Rat(m - k));
    GRat kk(Rat(static_cast<long>(k)));
    r.at(k, k) = mk * a + kk * d;
    if (k + 1 < n) r.at(k + 1, k) = mk * c;
    if (k > 0) r.at(k - 1, k) = kk * b;
  }
  return r;
}

bool is_scalar(const CMat& m, const GRat& s) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (m.at(i, j) != (i == j ? s : GRat(0))) return false;
  return true;
}

RepType type_by_weight(long m) {
  // m * omega_1 in simple-root coordinates is m/2 alpha_1.
  return type_of(a1(), {Rat(Int(m), Int(2))}).type;
}

OperatorBundle make_bundle(const QMat& kappa, const Rep& rep) {
  OperatorBundle b;
  b.m = rep.m;
  b.kappa = kappa;
  b.kappa_positive = positive_definite(kappa);
  b.matrix = d_matrix(kappa, rep);
  b.cp = char_poly(b.matrix);
  check_invariant(b.cp.all_real(),
                  "operator polynomial acquired imaginary coefficients");
  b.type = type_by_weight(rep.m);
  b.square = perfect_square(b.cp);
  // A quaternionic block commutes with a j-like antilinear map, so every
  // eigenvalue appears an even number of times, for every symmetric kappa.
  if (rep.m % 2 == 1)
    check_invariant(b.square.is_square,
                    "odd-weight operator polynomial is not a square");
  // The operator is self-adjoint for the natural pairing, so its minimal
  // polynomial is squarefree: the radical of cp must itself be squarefree,
  // and in the doubled case the radical divides the square root.
  Poly rad = divmod(b.cp, poly_gcd(b.cp, b.cp.derivative())).quot.monic();
  check_invariant(poly_gcd(rad, rad.derivative()).degree() == 0,
                  "operator polynomial radical has repeated factors");
  if (rep.m % 2 == 1)
    check_invariant(rad.degree() <= (rep.m + 1) / 2,
                    "odd-weight spectrum exceeds the doubled count");
  return b;
}

Rat real_resultant(const Poly& p, const Poly& q) {
  GRat r = resultant(p, q);
  check_invariant(r.is_real(), "resultant of real polynomials must be real");
  return r.re;
}

}  // namespace

const std::array<CMat, 3>& basis_u() {
  static const std::array<CMat, 3> us = [] {
    const GRat i = GRat::i();
    std::array<CMat, 3> u = {
        make2(GRat(0), i, i, GRat(0)),
        make2(GRat(0), GRat(1), GRat(-1), GRat(0)),
        make2(i, GRat(0), GRat(0), -i),
    };
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        check_invariant(pairing(u[a], u[b]) == GRat(a == b ? 1 : 0),
                        "su(2) basis is not orthonormal");
    // [u1,u2] = -2 u3 and cyclic.
    check_invariant(commutator(u[0], u[1]) == GRat(-2) * u[2],
                    "su(2) bracket table broken");
    check_invariant(commutator(u[1], u[2]) == GRat(-2) * u[0],
                    "su(2) bracket table broken");
    check_invariant(commutator(u[2], u[0]) == GRat(-2) * u[1],
                    "su(2) bracket table broken");
    return u;
  }();
  return us;
}

QVec bracket_coords(int a, int b) {
  if (a < 0 || a > 2 || b < 0 || b > 2)
    fail(errc::usage, "basis index out of range");
  const auto& u = basis_u();
  CMat br = commutator(u[a], u[b]);
  QVec coords(3);
  CMat recon(2, 2);
  for (int c = 0; c < 3; ++c) {
    GRat x = pairing(br, u[c]);
    check_invariant(x.is_real(), "bracket coefficient must be real");
    coords[c] = x.re;
    recon = recon + GRat(coords[c]) * u[c];
  }
  check_invariant(recon == br, "bracket does not expand in the basis");
  return coords;
}

Rep irrep(long m) {
  if (m < 0) fail(errc::capacity, "highest weight must be nonnegative");
  if (m > kMaxIrrep)
    fail(errc::capacity,
         "highest weight above the construction cap " +
             std::to_string(kMaxIrrep));
  const auto& u = basis_u();
  Rep rep;
  rep.m = m;
  for (int a = 0; a < 3; ++a) rep.rho[a] = rho_of(u[a], m);

  const int n = static_cast<int>(m) + 1;
  // u3 acts diagonally with the expected weights.
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j) {
      GRat want = (k == j) ? GRat(Rat(0), Rat(m - 2 * k)) : GRat(0);
      check_invariant(rep.rho[2].at(k, j) == want, "u3 weights are off");
    }
  // The assignment is a Lie algebra homomorphism.
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b) {
      QVec coords = bracket_coords(a, b);
      CMat expect(n, n);
      for (int c = 0; c < 3; ++c)
        expect = expect + GRat(coords[c]) * rep.rho[c];
      check_invariant(commutator(rep.rho[a], rep.rho[b]) == expect,
                      "representation does not respect the bracket");
    }
  // Casimir sum acts by m(m+2), which pins down the isomorphism class.
  CMat cas = -(rep.rho[0] * rep.rho[0] + rep.rho[1] * rep.rho[1] +
               rep.rho[2] * rep.rho[2]);
  check_invariant(is_scalar(cas, GRat(Rat(m * (m + 2)))),
                  "Casimir sum is not the expected scalar");
  return rep;
}

CMat d_matrix(const QMat& kappa, const Rep& rep) {
  require_symmetric3(kappa, "coefficient matrix");
  const int n = static_cast<int>(rep.m) + 1;
  CMat sum(n, n);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      if (kappa.at(a, b).is_zero()) continue;
      sum = sum + GRat(kappa.at(a, b)) * (rep.rho[a] * rep.rho[b]);
    }
  return -sum;
}

OperatorBundle d_operator(const QMat& kappa, long m) {
  require_symmetric3(kappa, "coefficient matrix");
  return make_bundle(kappa, irrep(m));
}

InvariantSubspace invariant_subspace(const std::vector<int>& k_dirs, long m) {
  InvariantSubspace out;
  std::set<int> seen;
  for (int d : k_dirs) {
    if (d < 0 || d > 2) fail(errc::usage, "direction index out of range");
    if (!seen.insert(d).second) fail(errc::usage, "repeated direction index");
  }
  out.k_dirs.assign(seen.begin(), seen.end());
  for (int d = 0; d < 3; ++d)
    if (!seen.count(d)) out.m_dirs.push_back(d);

  // The fixed directions must close under the bracket; checked from the
  // structure coefficients, not from a list of known subalgebras.
  for (int a : out.k_dirs)
    for (int b : out.k_dirs) {
      if (a == b) continue;
      QVec coords = bracket_coords(a, b);
      for (int c = 0; c < 3; ++c)
        if (!seen.count(c) && !coords[c].is_zero())
          fail(errc::usage,
               "chosen directions do not close under the bracket");
    }

  Rep rep = irrep(m);
  const int n = static_cast<int>(m) + 1;
  if (out.k_dirs.empty()) {
    for (int j = 0; j < n; ++j) {
      std::vector<GRat> e(n);
      e[j] = GRat(1);
      out.basis.push_back(std::move(e));
    }
    return out;
  }
  // Joint kernel of the fixed directions: stack and take the null space.
  CMat stacked(static_cast<int>(out.k_dirs.size()) * n, n);
  for (size_t s = 0; s < out.k_dirs.size(); ++s) {
    const CMat& r = rep.rho[out.k_dirs[s]];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        stacked.at(static_cast<int>(s) * n + i, j) = r.at(i, j);
  }
  out.basis = kernel(stacked);
  return out;
}

Restricted restricted_operator(const QMat& kappa_mm, long m,
                               const InvariantSubspace& sub) {
  const int s = static_cast<int>(sub.m_dirs.size());
  if (kappa_mm.rows() != s || kappa_mm.cols() != s)
    fail(errc::usage, "coefficient block must match the number of moving "
                      "directions");
  if (!is_symmetric(kappa_mm))
    fail(errc::usage, "coefficient block must be symmetric");
  if (sub.basis.empty())
    fail(errc::domain, "the fixed subspace is zero; nothing to restrict");

  Rep rep = irrep(m);
  const int n = static_cast<int>(m) + 1;
  CMat r(n, n);
  for (int p = 0; p < s; ++p)
    for (int q = 0; q < s; ++q) {
      if (kappa_mm.at(p, q).is_zero()) continue;
      r = r + GRat(kappa_mm.at(p, q)) *
                  (rep.rho[sub.m_dirs[p]] * rep.rho[sub.m_dirs[q]]);
    }
  r = -r;

  const int cols = static_cast<int>(sub.basis.size());
  CMat b(n, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < n; ++i) b.at(i, j) = sub.basis[j][i];

  Restricted out;
  out.compressed = CMat(cols, cols);
  for (int j = 0; j < cols; ++j) {
    std::vector<GRat> image = mat_vec(r, sub.basis[j]);
    auto coords = solve(b, image);
    if (!coords)
      fail(errc::domain,
           "operator block does not preserve the fixed subspace; the "
           "coefficient block is not compatible with the fixed directions");
    for (int i = 0; i < cols; ++i) out.compressed.at(i, j) = (*coords)[i];
  }
  out.cp = char_poly(out.compressed);
  return out;
}

Rat crit_pair(long m1, long m2, const QMat& kappa) {
  if (m1 == m2) fail(errc::usage, "pair criterion needs two distinct weights");
  OperatorBundle b1 = d_operator(kappa, m1);
  OperatorBundle b2 = d_operator(kappa, m2);
  return real_resultant(b1.cp, b2.cp);
}

Rat crit_even(long m, const QMat& kappa) {
  OperatorBundle b = d_operator(kappa, m);
  return real_resultant(b.cp, b.cp.derivative());
}

Rat crit_odd(long m, const QMat& kappa) {
  OperatorBundle b = d_operator(kappa, m);
  return real_resultant(b.cp, b.cp.derivative(2));
}

std::vector<QMat> default_schedule() {
  std::vector<QMat> s;
  s.push_back(QMat::identity(3));
  s.push_back(diag3(1, 2, 3));
  s.push_back(diag3(2, 3, 7));
  s.push_back(diag3(1, 1, 2));
  s.push_back(sym3(2, 1, 0, 2, 0, 3));
  s.push_back(sym3(3, 0, 1, 3, 1, 4));
  s.push_back(sym3(4, 1, 1, 5, 2, 6));
  s.push_back(diag3(1, 4, 9));
  for (const QMat& k : s)
    check_invariant(positive_definite(k),
                    "trial schedule must stay positive definite");
  return s;
}

Certificate certify(long m_max, const std::vector<QMat>& schedule) {
  if (m_max < 0) fail(errc::domain, "weight bound must be nonnegative");
  if (m_max > kMaxCertify)
    fail(errc::capacity, "certification cap is " +
                             std::to_string(kMaxCertify));
  if (schedule.empty()) fail(errc::usage, "empty trial schedule");
  for (const QMat& k : schedule) require_symmetric3(k, "trial matrix");

  Certificate cert;
  cert.m_max = m_max;
  cert.schedule = schedule;

  std::vector<std::vector<Poly>> cps(m_max + 1);
  for (long m = 0; m <= m_max; ++m) {
    Rep rep = irrep(m);
    for (const QMat& k : schedule) cps[m].push_back(make_bundle(k, rep).cp);
  }

  auto first_witness = [&](CertItem item, auto value_at) {
    for (size_t s = 0; s < schedule.size(); ++s) {
      Rat v = value_at(s);
      if (!v.is_zero()) {
        item.witness_index = static_cast<int>(s);
        item.value = v;
        break;
      }
    }
    cert.items.push_back(std::move(item));
  };

  for (long m1 = 0; m1 <= m_max; ++m1)
    for (long m2 = m1 + 1; m2 <= m_max; ++m2)
      first_witness({"pair", m1, m2, -1, Rat(0)}, [&](size_t s) {
        return real_resultant(cps[m1][s], cps[m2][s]);
      });
  for (long m = 0; m <= m_max; ++m) {
    if (m % 2 == 0) {
      first_witness({"even", m, 0, -1, Rat(0)}, [&](size_t s) {
        return real_resultant(cps[m][s], cps[m][s].derivative());
      });
    } else {
      first_witness({"odd", m, 0, -1, Rat(0)}, [&](size_t s) {
        return real_resultant(cps[m][s], cps[m][s].derivative(2));
      });
      OddVanishing ov{m, true};
      for (size_t s = 0; s < schedule.size(); ++s) {
        Rat v = real_resultant(cps[m][s], cps[m][s].derivative());
        // A doubled spectrum keeps p and p' sharing every root.
        check_invariant(v.is_zero(), "doubled spectrum lost its pairing");
      }
      cert.odd_checks.push_back(ov);
    }
  }

  cert.complete = std::all_of(cert.items.begin(), cert.items.end(),
                              [](const CertItem& it) {
                                return it.witness_index >= 0;
                              });
  return cert;
}

std::vector<q8::RepEntry> generic_spectra(const Certificate& cert) {
  if (!cert.complete)
    fail(errc::undecided,
         "trial schedule left the eigenvalue pattern undecided");
  std::vector<q8::RepEntry> out;
  for (long m = 0; m <= cert.m_max; ++m) {
    q8::RepEntry e;
    e.id = "V" + std::to_string(m);
    e.type = type_by_weight(m);
    const bool odd = (m % 2 == 1);
    const long count = odd ? (m + 1) / 2 : m + 1;
    const long mult = odd ? 2 : 1;
    for (long k = 0; k < count; ++k) {
      // Formal distinct labels per certified simple block, kept inside
      // [m(m+2), m(m+2)+1) so labels never collide across weights.
      Rat label = Rat(m * (m + 2)) + Rat(Int(k), Int(m + 2));
      e.eigs.emplace_back(label, mult);
    }
    out.push_back(std::move(e));
  }
  return out;
}

Bridge casimir_bridge(long m_max) {
  if (m_max < 1) fail(errc::domain, "need at least weight 1 for the ratio");
  if (m_max > kMaxIrrep)
    fail(errc::capacity, "weight bound above the construction cap");
  Bridge br;
  bool have_factor = false;
  for (long m = 0; m <= m_max; ++m) {
    OperatorBundle b = d_operator(QMat::identity(3), m);
    check_invariant(is_scalar(b.matrix, b.matrix.at(0, 0)),
                    "round operator must act as a scalar");
    check_invariant(b.matrix.at(0, 0).is_real(),
                    "round operator value must be real");
    Rat lab = b.matrix.at(0, 0).re;
    Rat cas = casimir_eigenvalue(a1(), {Rat(Int(m), Int(2))});
    br.rows.push_back({m, lab, cas});
    if (m == 0) {
      check_invariant(lab.is_zero() && cas.is_zero(),
                      "constants must sit at zero in both normalizations");
      continue;
    }
    Rat ratio = lab / cas;
    if (!have_factor) {
      br.factor = ratio;
      have_factor = true;
    } else {
      check_invariant(ratio == br.factor,
                      "normalization ratio must not depend on the weight");
    }
  }
  return br;
}

}  // namespace su2
}  // namespace lsp
