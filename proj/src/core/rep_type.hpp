#pragma once

#include "core/root_system.hpp"

namespace lsp {

enum class RepType { real, complex, quaternionic };

const char* rep_type_name(RepType t);
RepType rep_type_from_name(const std::string& s);

struct TypeInfo {
  bool self_dual = false;
  RepType type = RepType::real;
  // Sum over positive roots of <mu, beta^vee>; its parity decides the
  // real/quaternionic split for self-dual weights.
  Int parity_sum;
};

// Highest weight of the dual representation: -w0(mu).
QVec dual_weight(const RootSystem& rs, const QVec& mu);

// Classifies the irreducible with highest weight mu as real, complex or
// quaternionic.  Defined only for reduced systems with trivial root
// multiplicities; mu must be dominant and integral.
TypeInfo type_of(const RootSystem& rs, const QVec& mu);

// Independent check for the rank-one case: decomposes the symmetric and
// alternating squares of the (m+1)-dimensional irreducible by weight
// counting and reports where the invariant bilinear form lives.
// Real: trivial summand in Sym^2.  Quaternionic: trivial summand in Alt^2.
RepType a1_type_oracle(long m);

}  // namespace lsp
