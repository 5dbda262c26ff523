#pragma once

#include "core/root_system.hpp"

namespace lsp {

struct SpherePoint {
  QVec raw;      // lattice point mu
  QVec shifted;  // mu + delta, lies on the sphere of squared radius a2
};

// The shell S(a): lattice points mu with (mu + delta, mu + delta) = a2
// whose shifted vector is regular (orthogonal to no root).  A lattice point
// whose shift lands on a reflection wall names no representation: its
// shifted orbit contains no strictly dominant vector, so nothing in the
// spectrum corresponds to it.  Such points are counted but not kept.
struct SphereSet {
  Rat a2;
  std::vector<SpherePoint> points;  // sorted by raw coordinates
  bool spans = false;               // shifted points span the whole space
  long singular_excluded = 0;       // wall points dropped from the shell
  BallScan scan;
};

// Requires a2 > 0 and delta in the lattice; both are hard preconditions.
SphereSet sphere_points(const RootSystem& rs, const Lattice& lat, const Rat& a2);

// The shifted action  mu |-> w(mu + delta) - delta.
QVec shifted_weyl_action(const RootSystem& rs, const WeylElement& w, const QVec& mu);

struct ContainmentViolation {
  size_t weyl_index;
  QVec point_raw;
  QVec image_raw;
};

struct Containment {
  bool contained = false;
  std::vector<ContainmentViolation> violations;
};

// Checks that the shifted action of every Weyl element permutes the shell.
// This is a verification, not an assumption: a lattice that is not
// Weyl-stable produces explicit violations.
Containment verify_weyl_containment(const RootSystem& rs, const SphereSet& set);

struct SymmetryElement {
  QMat matrix;              // orthogonal map on shifted coordinates
  std::vector<int> perm;    // induced permutation of the point list
  bool preserves_lattice;   // maps the lattice onto itself
  bool in_weyl_image;       // equals the matrix of some Weyl element
};

struct SymmetryGroup {
  long order = 0;
  std::vector<SymmetryElement> elements;       // sorted by matrix
  std::vector<std::vector<size_t>> orbits;     // point indices
  bool transitive = false;
  std::vector<size_t> basis;                   // point indices used as base
  long weyl_image_count = 0;                   // elements coming from W
};

// The full group of inner-product-preserving linear maps permuting the
// shifted shell.  A base of the shell is chosen greedily; every group
// element is determined by its images on the base, and every candidate
// image tuple with matching pairings is tried, so the search finds the
// entire group.  Requires the shell to span (error otherwise: symmetries
// of a degenerate shell are not determined by the point set).
SymmetryGroup symmetry_group(const RootSystem& rs, const Lattice& lat,
                             const SphereSet& set,
                             long max_candidates = 2000000);

}  // namespace lsp
