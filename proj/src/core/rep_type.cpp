#include "core/rep_type.hpp"

#include <map>

namespace lsp {

const char* rep_type_name(RepType t) {
  switch (t) {
    case RepType::real: return "real";
    case RepType::complex: return "complex";
    case RepType::quaternionic: return "quaternionic";
  }
  return "?";
}

RepType rep_type_from_name(const std::string& s) {
  if (s == "real") return RepType::real;
  if (s == "complex") return RepType::complex;
  if (s == "quaternionic") return RepType::quaternionic;
  fail(errc::usage, "unknown representation type '" + s + "'");
}

QVec dual_weight(const RootSystem& rs, const QVec& mu) {
  QVec dual = vneg(rs.act(rs.longest_element(), mu));
  check_invariant(!rs.is_dominant(mu) || rs.is_dominant(dual),
                  "dual of a dominant weight must be dominant");
  return dual;
}

TypeInfo type_of(const RootSystem& rs, const QVec& mu) {
  if (!rs.reduced() || !rs.all_mult_one())
    fail(errc::capability,
         "type classification requires a reduced system with trivial "
         "multiplicities (" + rs.label() + ")");
  if (!rs.is_dominant(mu)) fail(errc::domain, "weight is not dominant");
  if (!rs.in_weight_lattice(mu)) fail(errc::domain, "weight is not integral");

  TypeInfo info;
  info.self_dual = (dual_weight(rs, mu) == mu);
  if (!info.self_dual) {
    info.type = RepType::complex;
    return info;
  }
  // Pairing of mu with the sum of all positive coroots; each term is an
  // integer for integral mu.
  Rat sum;
  for (const PositiveRoot& p : rs.positive_roots())
    sum += rs.coroot_pairing(mu, p.coords);
  check_invariant(sum.is_integer(), "coroot pairing sum is not an integer");
  info.parity_sum = sum.num();
  info.type = (info.parity_sum % 2 == 0) ? RepType::real : RepType::quaternionic;
  return info;
}

namespace {

// Strips highest weights off a weight multiset until empty, returning the
// multiset of irreducible pieces {M: multiplicity}.
std::map<long, long> decompose_by_weights(std::map<long, long> weights) {
  std::map<long, long> pieces;
  while (!weights.empty()) {
    long top = weights.rbegin()->first;
    if (top < 0) fail(errc::invariant, "weight multiset has no dominant top");
    for (long w = top; w >= -top; w -= 2) {
      auto it = weights.find(w);
      if (it == weights.end() || it->second <= 0)
        fail(errc::invariant, "weight multiset is not a sum of irreducibles");
      if (--it->second == 0) weights.erase(it);
    }
    ++pieces[top];
  }
  return pieces;
}

}  // namespace

RepType a1_type_oracle(long m) {
  if (m < 0) fail(errc::domain, "oracle needs m >= 0");
  if (m > 64) fail(errc::capability, "oracle is limited to m <= 64");
  // Weights of V_m are m, m-2, ..., -m, each once.
  std::vector<long> w;
  for (long k = 0; k <= m; ++k) w.push_back(m - 2 * k);
  std::map<long, long> sym2, alt2;
  for (size_t i = 0; i < w.size(); ++i)
    for (size_t j = i; j < w.size(); ++j) {
      ++sym2[w[i] + w[j]];
      if (j > i) ++alt2[w[i] + w[j]];
    }
  long triv_sym = decompose_by_weights(sym2).count(0) ? 1 : 0;
  long triv_alt = alt2.empty() ? 0 : (decompose_by_weights(alt2).count(0) ? 1 : 0);
  check_invariant(triv_sym + triv_alt == 1,
                  "invariant form must live in exactly one of Sym^2, Alt^2");
  return triv_sym ? RepType::real : RepType::quaternionic;
}

}  // namespace lsp
