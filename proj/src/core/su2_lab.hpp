#pragma once

#include <array>

#include "core/polynomial.hpp"
#include "core/q8.hpp"
#include "core/rep_type.hpp"

namespace lsp {
namespace su2 {

// Orthonormal basis of su(2) for the inner product -1/2 tr(XY):
// u1 = [[0,i],[i,0]], u2 = [[0,1],[-1,0]], u3 = [[i,0],[0,-i]], with
// [u_a, u_b] = -2 eps_abc u_c.  Verified at startup.
const std::array<CMat, 3>& basis_u();

// Structure coefficients of [u_a, u_b] in the basis, exact.
QVec bracket_coords(int a, int b);

struct Rep {
  long m = 0;                 // highest weight; dimension m + 1
  std::array<CMat, 3> rho;    // images of u1, u2, u3
};

// Irreducible action on degree-m homogeneous polynomials in two variables,
// monomial basis e_k = x^(m-k) y^k.  The construction is verified: bracket
// homomorphism, u3-weights m-2k, and the Casimir sum
// -(rho1^2 + rho2^2 + rho3^2) = m(m+2) id.  m <= 64.
Rep irrep(long m);

// D = - sum_ab kappa_ab rho_a rho_b for symmetric rational kappa.
CMat d_matrix(const QMat& kappa, const Rep& rep);

struct OperatorBundle {
  long m = 0;
  QMat kappa;
  bool kappa_positive = false;  // positive definite (Sylvester minors)
  CMat matrix;
  Poly cp;               // monic characteristic polynomial, real coefficients
  RepType type;          // real for even m, quaternionic for odd m
  SquareDecomposition square;  // for odd m the polynomial must be a square
};

OperatorBundle d_operator(const QMat& kappa, long m);

struct InvariantSubspace {
  std::vector<int> k_dirs;  // 0-based indices into (u1, u2, u3)
  std::vector<int> m_dirs;  // complement, in increasing order
  std::vector<std::vector<GRat>> basis;  // joint kernel of rho over k_dirs
};

// k_dirs must span a subalgebra (empty, a single direction, or all three).
InvariantSubspace invariant_subspace(const std::vector<int>& k_dirs, long m);

struct Restricted {
  CMat compressed;  // action in the subspace basis
  Poly cp;
};

// Restriction of -sum_pq kappa_mm[p][q] rho_{m_dirs[p]} rho_{m_dirs[q]} to
// the invariant subspace.  If the operator does not preserve the subspace
// the chosen kappa_mm is not compatible with the isotropy action; that is
// a domain error, reported as such.
Restricted restricted_operator(const QMat& kappa_mm, long m,
                               const InvariantSubspace& sub);

// Resultant criteria.  Values are real; returned as rationals.
Rat crit_pair(long m1, long m2, const QMat& kappa);  // res(p_m1, p_m2)
Rat crit_even(long m, const QMat& kappa);            // res(p, p')
Rat crit_odd(long m, const QMat& kappa);             // res(p, p'')

// Deterministic trial metrics: identity first, then diagonal and
// off-diagonal perturbations.  All entries are positive definite.
std::vector<QMat> default_schedule();

struct CertItem {
  std::string kind;  // "pair" | "even" | "odd"
  long m1 = 0;
  long m2 = 0;           // used by "pair" only
  int witness_index = -1;  // schedule index of the first nonzero value
  Rat value;               // the nonzero resultant at the witness
};

struct OddVanishing {
  long m = 0;
  bool all_zero = false;  // crit_even vanished at every schedule entry
};

struct Certificate {
  long m_max = 0;
  std::vector<QMat> schedule;
  std::vector<CertItem> items;
  std::vector<OddVanishing> odd_checks;
  bool complete = false;
};

// Witness search over the schedule: pair separation for all m1 < m2,
// simple spectrum for even m, doubled-but-otherwise-simple spectrum for
// odd m.  m_max <= 12.  Items without witnesses leave the certificate
// incomplete; callers decide whether that is an error.
Certificate certify(long m_max, const std::vector<QMat>& schedule);

// Formal eigenvalue labels realizing the certified multiplicity pattern:
// even m gives m+1 distinct labels, odd m gives (m+1)/2 labels counted
// twice, all labels distinct across m.  Requires a complete certificate.
std::vector<q8::RepEntry> generic_spectra(const Certificate& cert);

struct BridgeRow {
  long m = 0;
  Rat lab_value;      // D eigenvalue at kappa = id
  Rat casimir_value;  // rank-one Casimir eigenvalue for the same m
};

struct Bridge {
  Rat factor;  // constant ratio lab/casimir over m >= 1
  std::vector<BridgeRow> rows;
};

// The two normalizations differ by one global rational factor; computed
// and reported, never assumed.
Bridge casimir_bridge(long m_max);

}  // namespace su2
}  // namespace lsp
