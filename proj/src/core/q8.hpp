#pragma once

#include <array>
#include <optional>

#include "core/polynomial.hpp"
#include "core/rep_type.hpp"

namespace lsp {
namespace q8 {

// The quaternion unit group {1,-1,i,-i,j,-j,ij,-ij}, built from its 2x2
// matrix model over Q(i) and verified element by element.
struct Group {
  static constexpr int kOrder = 8;
  std::array<std::string, 8> names;
  std::array<CMat, 8> model;                 // the 2-dim representation
  std::array<std::array<int, 8>, 8> mul;     // mul[a][b] = index of a*b
  std::array<int, 8> inverse;
  std::vector<std::vector<int>> classes;     // conjugacy classes
  std::array<int, 8> class_of;
  // Character table: five irreducibles (four linear, one of degree 2),
  // columns indexed by conjugacy class.
  std::vector<std::string> irrep_names;
  std::vector<int> degrees;
  std::vector<std::vector<GRat>> table;
  std::vector<Rat> fs_indicator;             // Frobenius-Schur per irrep
};

// Builds and fully verifies the group: associativity, inverses, class
// structure, character property of each row, row and column orthogonality,
// and the Frobenius-Schur indicators.
const Group& group();

// Eigenspace assembly: how one G-isotypic block of multiplicity m shows up
// on the complex side (Q8 x G labels) and on the real side.
struct Assembly {
  RepType type;
  long m = 0;              // multiplicity of V inside the eigenspace
  std::string complex_unit;  // "V" or "HxV"
  long complex_copies = 0;
  std::string complex_label;  // pretty form with exponent
  std::string real_unit;      // "V_R"
  long real_copies = 0;
  std::string real_label;
  // Complex dimension of the block in units of dim V, computed on each
  // side independently; equality is asserted.
  long complex_units_total = 0;
  long real_units_total = 0;
};

// m >= 1; quaternionic blocks need even m (odd is structurally impossible
// and reported as an invariant violation).
Assembly assemble(RepType type, long m);

// Input for the simplicity dictionary: one entry per G-irreducible in the
// spectrum, with its eigenvalue multiset.  Complex entries must reference
// their dual partner, which must carry the same multiset.
struct RepEntry {
  std::string id;
  RepType type = RepType::real;
  std::optional<std::string> dual_id;
  std::vector<std::pair<Rat, long>> eigs;  // (eigenvalue, multiplicity)
};

struct EigFailure {
  std::string rep_id;
  Rat eig;
  long mult = 0;
  long complex_exponent = 0;
  long real_exponent = 0;
};

struct CrossCollision {
  std::string rep_a;
  std::string rep_b;
  Rat eig;
};

struct SimplicityVerdict {
  bool real_simple = false;     // every real isotypic block irreducible
  bool complex_simple = false;  // every complex Q8 x G block irreducible
  std::vector<EigFailure> failures;
  std::vector<CrossCollision> cross;
};

// Evaluates both simplicity readings independently, one from the complex
// labels and one from the real labels, and asserts they agree.
SimplicityVerdict simplicity_dictionary(const std::vector<RepEntry>& reps);

}  // namespace q8
}  // namespace lsp
