#pragma once

#include <optional>

#include "core/rep_type.hpp"
#include "core/root_system.hpp"

namespace lsp {

// One spherical weight together with its Casimir data.
struct WeightRecord {
  QVec mu;        // simple-root coordinates
  QVec mu_fw;     // fundamental-weight coordinates
  Rat a2;         // (mu + delta, mu + delta)
  Rat lambda;     // a2 - (delta, delta)
  std::optional<Int> dim;  // Weyl dimension where the formula applies
  QVec dual_fw;
  bool self_dual = false;
  std::string type;  // real | complex | quaternionic | unknown
};

// (mu + delta, mu + delta)
Rat casimir_a2(const RootSystem& rs, const QVec& mu);
// Laplace eigenvalue on the corresponding isotypic block.
Rat casimir_eigenvalue(const RootSystem& rs, const QVec& mu);

// Weyl dimension of the irreducible with highest weight mu.  Only defined
// for reduced systems with trivial multiplicities; mu dominant, integral.
Int weyl_dim(const RootSystem& rs, const QVec& mu);

struct SpectrumResult {
  std::vector<WeightRecord> records;  // sorted by (a2, mu_fw lex)
  BallScan scan;
  bool cutoff_below_delta = false;  // cutoff excludes even the zero weight
};

// All dominant lattice weights with (mu + delta, mu + delta) <= a2max.
SpectrumResult enumerate_spherical(const RootSystem& rs, const Lattice& lat,
                                   const Rat& a2max);

struct CollisionClass {
  Rat a2;
  Rat lambda;
  std::vector<size_t> members;  // indices into the record list
  bool has_nondual_pair = false;
};

// Groups records sharing the same eigenvalue; classes of size >= 2 only.
// A class is flagged when it holds two weights that are neither equal nor
// dual to each other.
std::vector<CollisionClass> collisions(const std::vector<WeightRecord>& records);

}  // namespace lsp
