#include "core/sphere_sym.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace lsp {

SphereSet sphere_points(const RootSystem& rs, const Lattice& lat, const Rat& a2) {
  if (a2.sign() <= 0) fail(errc::domain, "shell radius must be positive");
  if (!in_lattice(lat, rs.delta()))
    fail(errc::domain,
         "the half-sum vector must lie in the lattice for shell analysis "
         "(lattice '" + lat.label + "')");
  SphereSet set;
  set.a2 = a2;
  std::vector<QVec> raw = ball_points(rs, lat, a2, true, &set.scan);
  std::sort(raw.begin(), raw.end());
  for (QVec& mu : raw) {
    SpherePoint p;
    p.shifted = vadd(mu, rs.delta());
    bool regular = true;
    for (const PositiveRoot& beta : rs.positive_roots())
      if (rs.inner(p.shifted, beta.coords).is_zero()) {
        regular = false;
        break;
      }
    if (!regular) {
      ++set.singular_excluded;
      continue;
    }
    p.raw = std::move(mu);
    set.points.push_back(std::move(p));
  }
  int n = rs.rank();
  QMat span(static_cast<int>(set.points.size()), n);
  for (size_t i = 0; i < set.points.size(); ++i)
    for (int j = 0; j < n; ++j)
      span.at(static_cast<int>(i), j) = set.points[i].shifted[j];
  set.spans = (rank(span) == n);
  return set;
}

QVec shifted_weyl_action(const RootSystem& rs, const WeylElement& w, const QVec& mu) {
  return vsub(rs.act(w, vadd(mu, rs.delta())), rs.delta());
}

Containment verify_weyl_containment(const RootSystem& rs, const SphereSet& set) {
  std::set<QVec> raw;
  for (const SpherePoint& p : set.points) raw.insert(p.raw);
  Containment out;
  out.contained = true;
  const auto& weyl = rs.weyl();
  for (size_t wi = 0; wi < weyl.size(); ++wi)
    for (const SpherePoint& p : set.points) {
      QVec img = shifted_weyl_action(rs, weyl[wi], p.raw);
      if (!raw.count(img)) {
        out.contained = false;
        out.violations.push_back({wi, p.raw, img});
      }
    }
  return out;
}

namespace {

struct Search {
  const std::vector<SpherePoint>& pts;
  const std::vector<std::vector<Rat>>& gram;  // pairwise inner products
  const std::vector<size_t>& basis;
  long budget;
  std::vector<size_t> images;
  std::vector<std::vector<size_t>>* tuples;

  void run(size_t depth) {
    if (depth == basis.size()) {
      tuples->push_back(images);
      return;
    }
    for (size_t c = 0; c < pts.size(); ++c) {
      if (--budget < 0)
        fail(errc::capacity, "symmetry search exceeded its candidate budget");
      bool ok = true;
      for (size_t l = 0; l < depth && ok; ++l)
        ok = (gram[c][images[l]] == gram[basis[depth]][basis[l]]);
      if (!ok) continue;
      images.push_back(c);
      run(depth + 1);
      images.pop_back();
    }
  }
};

}  // namespace

SymmetryGroup symmetry_group(const RootSystem& rs, const Lattice& lat,
                             const SphereSet& set, long max_candidates) {
  if (!set.spans)
    fail(errc::domain,
         "shell does not span the space; its symmetry group is not "
         "determined by the point set");
  int n = rs.rank();
  size_t count = set.points.size();

  std::vector<std::vector<Rat>> gram(count, std::vector<Rat>(count));
  for (size_t i = 0; i < count; ++i)
    for (size_t j = i; j < count; ++j) {
      gram[i][j] = rs.inner(set.points[i].shifted, set.points[j].shifted);
      gram[j][i] = gram[i][j];
    }

  // Greedy base: first subset of points whose shifted vectors span.
  std::vector<size_t> basis;
  QMat picked(n, n);
  int have = 0;
  for (size_t i = 0; i < count && have < n; ++i) {
    QMat trial = picked;
    for (int j = 0; j < n; ++j)
      trial.at(have, j) = set.points[i].shifted[j];
    QMat upper(have + 1, n);
    for (int r = 0; r <= have; ++r)
      for (int j = 0; j < n; ++j) upper.at(r, j) = trial.at(r, j);
    if (rank(upper) == have + 1) {
      picked = trial;
      basis.push_back(i);
      ++have;
    }
  }
  check_invariant(have == n, "spanning shell yielded no base");

  // X columns are the base vectors; any symmetry T satisfies T X = Y.
  QMat x(n, n);
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j) x.at(j, k) = set.points[basis[k]].shifted[j];
  std::optional<QMat> xinv = inverse(x);
  check_invariant(xinv.has_value(), "base matrix is singular");

  std::vector<std::vector<size_t>> tuples;
  Search search{set.points, gram, basis, max_candidates, {}, &tuples};
  search.run(0);

  std::map<QVec, size_t> shifted_index;
  for (size_t i = 0; i < count; ++i) shifted_index[set.points[i].shifted] = i;

  std::set<QMat> seen;
  std::vector<SymmetryElement> elements;
  std::set<QMat> weyl_mats;
  for (const WeylElement& w : rs.weyl()) weyl_mats.insert(w.matrix);

  for (const std::vector<size_t>& tuple : tuples) {
    QMat y(n, n);
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j)
        y.at(j, k) = set.points[tuple[k]].shifted[j];
    QMat t = y * *xinv;
    // Matching pairings on a base force form preservation everywhere.
    check_invariant(t.transpose() * rs.gram() * t == rs.gram(),
                    "candidate map does not preserve the inner product");
    std::vector<int> perm(count);
    bool permutes = true;
    for (size_t i = 0; i < count && permutes; ++i) {
      QVec img = mat_vec(t, set.points[i].shifted);
      auto it = shifted_index.find(img);
      if (it == shifted_index.end()) permutes = false;
      else perm[i] = static_cast<int>(it->second);
    }
    if (!permutes || !seen.insert(t).second) continue;
    SymmetryElement el;
    el.matrix = std::move(t);
    el.perm = std::move(perm);
    el.preserves_lattice = true;
    for (const QVec& b : lat.basis)
      if (!in_lattice(lat, mat_vec(el.matrix, b))) {
        el.preserves_lattice = false;
        break;
      }
    el.in_weyl_image = weyl_mats.count(el.matrix) > 0;
    elements.push_back(std::move(el));
  }

  std::sort(elements.begin(), elements.end(),
            [](const SymmetryElement& a, const SymmetryElement& b) {
              return a.matrix < b.matrix;
            });

  // Safety: the collected set must be a group containing the identity.
  bool has_id = false;
  for (const SymmetryElement& el : elements)
    if (el.matrix == QMat::identity(n)) { has_id = true; break; }
  check_invariant(has_id, "symmetry set lacks the identity");
  for (const SymmetryElement& a : elements)
    for (const SymmetryElement& b : elements)
      check_invariant(seen.count(a.matrix * b.matrix) > 0,
                      "symmetry set is not closed under composition");

  SymmetryGroup group;
  group.order = static_cast<long>(elements.size());
  group.basis = basis;
  for (const SymmetryElement& el : elements)
    if (el.in_weyl_image) ++group.weyl_image_count;

  // Orbits via union-find over the permutations.
  std::vector<size_t> parent(count);
  for (size_t i = 0; i < count; ++i) parent[i] = i;
  std::function<size_t(size_t)> find = [&](size_t v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  for (const SymmetryElement& el : elements)
    for (size_t i = 0; i < count; ++i) {
      size_t a = find(i), b = find(static_cast<size_t>(el.perm[i]));
      if (a != b) parent[a] = b;
    }
  std::map<size_t, std::vector<size_t>> orbit_map;
  for (size_t i = 0; i < count; ++i) orbit_map[find(i)].push_back(i);
  for (auto& [root, members] : orbit_map) group.orbits.push_back(members);
  std::sort(group.orbits.begin(), group.orbits.end());
  group.transitive = (count > 0 && group.orbits.size() == 1);
  group.elements = std::move(elements);
  return group;
}

}  // namespace lsp
