#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "core/matrix.hpp"

namespace lsp {

// Supported families.  A, B, C, D and BC are available for rank <= 4,
// G2 is the single exceptional entry.  BC is the non-reduced family: the
// doubled short roots are genuine roots there.
enum class Family { A, B, C, D, BC, G2 };

enum class DeltaMode { weighted, plain };

struct PositiveRoot {
  QVec coords;       // simple-root coordinates, integer entries
  Rat len2;          // squared length, long roots normalized to 2
  int length_class;  // index into RootSystem::length_class_names()
  long mult;         // multiplicity attached to the length class
};

struct WeylElement {
  QMat matrix;            // action on simple-root coordinates
  std::vector<int> word;  // shortest-lex product of simple reflections
};

// A root system with a chosen multiplicity function and half-sum vector.
// Everything is fixed at build time; instances are immutable afterwards and
// safe to share across threads.
//
// All vectors live in simple-root coordinates: v = sum_i v[i] * alpha_i.
// The Gram matrix of the simple roots carries the geometry; roots are
// normalized so that long roots have squared length 2 (for BC the middle
// roots e_i +- e_j have squared length 2).
struct RootSystemOptions {
  std::map<std::string, long> mult;  // per length-class name, default 1
  DeltaMode delta_mode = DeltaMode::weighted;
  long max_weyl = 0;  // 0: LAPLACE_SPECTRA_MAX_CLOSURE or 100000
};

class RootSystem {
 public:
  using Options = RootSystemOptions;

  static RootSystem build(Family f, int rank, const Options& opt = {});
  // Token form: "A1".."A4", "B2".."B4", "C2".."C4", "D2".."D4",
  // "BC1".."BC4", "G2".
  static RootSystem parse(const std::string& token, const Options& opt = {});

  Family family() const { return family_; }
  int rank() const { return rank_; }
  std::string label() const { return label_; }
  bool reduced() const { return family_ != Family::BC; }
  bool all_mult_one() const;

  const QMat& gram() const { return gram_; }
  // Cartan pairings: cartan(i, j) = <alpha_i, alpha_j^vee>, an integer.
  const QMat& cartan() const { return cartan_; }
  const std::vector<PositiveRoot>& positive_roots() const { return positive_; }
  const std::vector<std::string>& length_class_names() const { return class_names_; }
  const std::vector<QVec>& fundamental_weights() const { return fweights_; }
  const QVec& delta() const { return delta_; }
  DeltaMode delta_mode() const { return delta_mode_; }
  const Rat& delta_norm2() const { return delta_norm2_; }

  Rat inner(const QVec& u, const QVec& v) const { return dot(gram_, u, v); }
  // 2 (v, beta) / (beta, beta)
  Rat coroot_pairing(const QVec& v, const QVec& beta) const;
  bool is_dominant(const QVec& v) const;
  bool in_weight_lattice(const QVec& v) const;

  // Coordinates of v in the fundamental-weight basis and back.
  QVec fw_coords(const QVec& v) const;
  QVec from_fw(const QVec& fw) const;

  const std::vector<WeylElement>& weyl() const { return weyl_; }
  long weyl_order() const { return static_cast<long>(weyl_.size()); }
  const WeylElement& longest_element() const { return weyl_[longest_]; }
  QVec act(const WeylElement& w, const QVec& v) const {
    return mat_vec(w.matrix, v);
  }

 private:
  RootSystem() = default;

  Family family_{};
  int rank_ = 0;
  std::string label_;
  QMat gram_;
  QMat cartan_;
  std::vector<PositiveRoot> positive_;
  std::vector<std::string> class_names_;
  std::vector<QVec> fweights_;
  QVec delta_;
  DeltaMode delta_mode_{};
  Rat delta_norm2_;
  std::vector<WeylElement> weyl_;
  size_t longest_ = 0;
};

// Full-rank lattice in weight space, given by a basis in simple-root
// coordinates.  basis_inv columns solve  basis_matrix * x = v  exactly.
struct Lattice {
  std::string label;
  std::vector<QVec> basis;
  QMat basis_matrix;  // columns are the basis vectors
  QMat basis_inv;
};

Lattice weight_lattice(const RootSystem& rs);
Lattice root_lattice(const RootSystem& rs);
Lattice scaled_weight_lattice(const RootSystem& rs, long k);
// Basis vectors given in fundamental-weight coordinates.
Lattice custom_lattice(const RootSystem& rs, const std::string& label,
                       const std::vector<QVec>& basis_fw);

// Rational coordinates of v in the lattice basis.
QVec lattice_coords(const Lattice& lat, const QVec& v);
bool in_lattice(const Lattice& lat, const QVec& v);

struct BallScan {
  std::vector<std::pair<Int, Int>> box;  // inclusive coordinate bounds
  Int volume;                            // number of scanned points
};

// All lattice points mu with (mu + delta, mu + delta) <= a2 (or == a2 when
// boundary_only).  Complete by the bounding-box argument: in the lattice
// basis the quadratic form has Gram A, and any solution x of
// x^T A x <= r satisfies |x_i| <= sqrt(r * (A^{-1})_{ii}).
// Results come in odometer order over the box; callers sort as needed.
std::vector<QVec> ball_points(const RootSystem& rs, const Lattice& lat,
                              const Rat& a2, bool boundary_only,
                              BallScan* scan = nullptr,
                              long max_volume = 5000000);

}  // namespace lsp
