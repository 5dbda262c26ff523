#include "core/root_system.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>

namespace lsp {

namespace {

constexpr long kDefaultMaxWeyl = 100000;

long weyl_cap(long requested) {
  if (requested > 0) return requested;
  const char* env = std::getenv("LAPLACE_SPECTRA_MAX_CLOSURE");
  if (env == nullptr || *env == '\0') return kDefaultMaxWeyl;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == nullptr || *end != '\0' || v <= 0)
    fail(errc::usage, "LAPLACE_SPECTRA_MAX_CLOSURE must be a positive integer");
  return v;
}

struct Realization {
  std::vector<QVec> simple_e;  // ambient coordinates
  Rat scale;                   // inner product = scale * standard dot
};

// Rational ambient realizations normalized so long roots square to 2
// (BC: the middle roots e_i +- e_j square to 2).
Realization realize(Family f, int rank) {
  Realization r;
  r.scale = Rat(1);
  auto unit = [](int dim, int i) {
    QVec v(dim, Rat(0));
    v[i] = Rat(1);
    return v;
  };
  switch (f) {
    case Family::A: {
      int d = rank + 1;
      for (int i = 0; i < rank; ++i) {
        QVec v(d, Rat(0));
        v[i] = Rat(1);
        v[i + 1] = Rat(-1);
        r.simple_e.push_back(std::move(v));
      }
      break;
    }
    case Family::B:
    case Family::BC: {
      int d = rank;
      for (int i = 0; i + 1 < rank; ++i) {
        QVec v(d, Rat(0));
        v[i] = Rat(1);
        v[i + 1] = Rat(-1);
        r.simple_e.push_back(std::move(v));
      }
      r.simple_e.push_back(unit(d, rank - 1));
      break;
    }
    case Family::C: {
      int d = rank;
      for (int i = 0; i + 1 < rank; ++i) {
        QVec v(d, Rat(0));
        v[i] = Rat(1);
        v[i + 1] = Rat(-1);
        r.simple_e.push_back(std::move(v));
      }
      QVec last(d, Rat(0));
      last[rank - 1] = Rat(2);
      r.simple_e.push_back(std::move(last));
      r.scale = Rat(1, 2);
      break;
    }
    case Family::D: {
      int d = rank;
      for (int i = 0; i + 1 < rank; ++i) {
        QVec v(d, Rat(0));
        v[i] = Rat(1);
        v[i + 1] = Rat(-1);
        r.simple_e.push_back(std::move(v));
      }
      QVec last(d, Rat(0));
      last[rank - 2] = Rat(1);
      last[rank - 1] = Rat(1);
      r.simple_e.push_back(std::move(last));
      break;
    }
    case Family::G2: {
      r.simple_e.push_back({Rat(1), Rat(-1), Rat(0)});
      r.simple_e.push_back({Rat(-2), Rat(1), Rat(1)});
      r.scale = Rat(1, 3);
      break;
    }
  }
  return r;
}

size_t expected_positive_count(Family f, int rank) {
  size_t n = static_cast<size_t>(rank);
  switch (f) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
    case Family::BC: return n * n + n;
    case Family::G2: return 6;
  }
  return 0;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::BC: return "BC";
    case Family::G2: return "G2";
  }
  return "?";
}

}  // namespace

Rat RootSystem::coroot_pairing(const QVec& v, const QVec& beta) const {
  Rat b2 = inner(beta, beta);
  if (b2.is_zero()) fail(errc::domain, "coroot pairing with zero vector");
  return Rat(2) * inner(v, beta) / b2;
}

bool RootSystem::is_dominant(const QVec& v) const {
  for (int j = 0; j < rank_; ++j) {
    QVec alpha(rank_, Rat(0));
    alpha[j] = Rat(1);
    if (coroot_pairing(v, alpha).sign() < 0) return false;
  }
  return true;
}

bool RootSystem::in_weight_lattice(const QVec& v) const {
  for (const Rat& c : fw_coords(v))
    if (!c.is_integer()) return false;
  return true;
}

QVec RootSystem::fw_coords(const QVec& v) const {
  // v = sum_j <v, alpha_j^vee> omega_j for v in the span of the roots.
  QVec out(rank_);
  for (int j = 0; j < rank_; ++j) {
    Rat s;
    for (int k = 0; k < rank_; ++k) s += v[k] * cartan_.at(k, j);
    out[j] = std::move(s);
  }
  return out;
}

QVec RootSystem::from_fw(const QVec& fw) const {
  if (static_cast<int>(fw.size()) != rank_)
    fail(errc::usage, "weight coordinate count does not match rank");
  QVec v(rank_, Rat(0));
  for (int i = 0; i < rank_; ++i) v = vadd(v, vscale(fw[i], fweights_[i]));
  return v;
}

bool RootSystem::all_mult_one() const {
  for (const PositiveRoot& p : positive_)
    if (p.mult != 1) return false;
  return true;
}

RootSystem RootSystem::parse(const std::string& token, const Options& opt) {
  if (token == "G2") return build(Family::G2, 2, opt);
  size_t letters = 0;
  while (letters < token.size() && token[letters] >= 'A' && token[letters] <= 'Z')
    ++letters;
  if (letters == 0 || letters == token.size())
    fail(errc::usage, "bad system token '" + token + "'");
  std::string fam = token.substr(0, letters);
  std::string digits = token.substr(letters);
  for (char c : digits)
    if (c < '0' || c > '9') fail(errc::usage, "bad system token '" + token + "'");
  int rank = std::atoi(digits.c_str());
  Family f;
  if (fam == "A") f = Family::A;
  else if (fam == "B") f = Family::B;
  else if (fam == "C") f = Family::C;
  else if (fam == "D") f = Family::D;
  else if (fam == "BC") f = Family::BC;
  else fail(errc::capability, "unsupported family '" + fam + "'");
  return build(f, rank, opt);
}

RootSystem RootSystem::build(Family f, int rank, const Options& opt) {
  // Supported table; everything else is out of scope, not an input error.
  bool ok = false;
  switch (f) {
    case Family::A: ok = rank >= 1 && rank <= 4; break;
    case Family::B:
    case Family::C:
    case Family::D: ok = rank >= 2 && rank <= 4; break;
    case Family::BC: ok = rank >= 1 && rank <= 4; break;
    case Family::G2: ok = rank == 2; break;
  }
  if (!ok)
    fail(errc::capability, "unsupported system " + family_name(f) +
                               std::to_string(rank) +
                               " (rank range: A 1..4, B/C/D 2..4, BC 1..4, G2)");

  RootSystem rs;
  rs.family_ = f;
  rs.rank_ = rank;
  rs.label_ = (f == Family::G2) ? "G2" : family_name(f) + std::to_string(rank);
  rs.delta_mode_ = opt.delta_mode;

  // Gram matrix from the ambient realization.
  Realization real = realize(f, rank);
  rs.gram_ = QMat(rank, rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      Rat s;
      for (size_t k = 0; k < real.simple_e[i].size(); ++k)
        s += real.simple_e[i][k] * real.simple_e[j][k];
      rs.gram_.at(i, j) = real.scale * s;
    }

  // Cartan pairings <alpha_i, alpha_j^vee>; integrality is an invariant of
  // a correctly transcribed realization.
  rs.cartan_ = QMat(rank, rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      Rat c = Rat(2) * rs.gram_.at(i, j) / rs.gram_.at(j, j);
      check_invariant(c.is_integer(), "non-integer Cartan pairing");
      rs.cartan_.at(i, j) = c;
    }

  // Positive roots: close the simple roots under the simple reflections,
  // keeping the representative with nonnegative coordinates.  For BC run
  // the closure on the reduced (B) part, then append the doubled shorts.
  std::set<QVec> pos;
  std::deque<QVec> queue;
  for (int i = 0; i < rank; ++i) {
    QVec e(rank, Rat(0));
    e[i] = Rat(1);
    pos.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    QVec v = queue.front();
    queue.pop_front();
    for (int j = 0; j < rank; ++j) {
      Rat pairing;
      for (int k = 0; k < rank; ++k) pairing += v[k] * rs.cartan_.at(k, j);
      QVec w = v;
      w[j] = w[j] - pairing;
      bool nonneg = true;
      for (const Rat& c : w)
        if (c.sign() < 0) { nonneg = false; break; }
      if (nonneg && pos.insert(w).second) queue.push_back(w);
    }
  }
  std::vector<QVec> pos_list(pos.begin(), pos.end());
  if (f == Family::BC) {
    std::vector<QVec> doubled;
    for (const QVec& v : pos_list)
      if (dot(rs.gram_, v, v) == Rat(1)) doubled.push_back(vscale(Rat(2), v));
    pos_list.insert(pos_list.end(), doubled.begin(), doubled.end());
    std::sort(pos_list.begin(), pos_list.end());
  }
  check_invariant(pos_list.size() == expected_positive_count(f, rank),
                  "positive root count mismatch for " + rs.label_);

  // Length classes, shortest first.
  std::set<Rat> lengths;
  for (const QVec& v : pos_list) lengths.insert(dot(rs.gram_, v, v));
  std::vector<Rat> len_order(lengths.begin(), lengths.end());
  switch (len_order.size()) {
    case 1: rs.class_names_ = {"long"}; break;
    case 2: rs.class_names_ = {"short", "long"}; break;
    case 3: rs.class_names_ = {"short", "middle", "long"}; break;
    default: fail(errc::invariant, "more than three root lengths");
  }

  std::map<std::string, long> mult;
  for (const std::string& name : rs.class_names_) mult[name] = 1;
  for (const auto& [name, m] : opt.mult) {
    auto it = mult.find(name);
    if (it == mult.end())
      fail(errc::usage, "system " + rs.label_ + " has no '" + name +
                            "' root class");
    if (m < 1) fail(errc::usage, "multiplicity for '" + name + "' must be >= 1");
    it->second = m;
  }

  for (const QVec& v : pos_list) {
    PositiveRoot p;
    p.coords = v;
    p.len2 = dot(rs.gram_, v, v);
    p.length_class = static_cast<int>(
        std::find(len_order.begin(), len_order.end(), p.len2) - len_order.begin());
    p.mult = mult.at(rs.class_names_[p.length_class]);
    rs.positive_.push_back(std::move(p));
  }

  // Half-sum vector, weighted by multiplicities or plain.
  QVec delta(rank, Rat(0));
  for (const PositiveRoot& p : rs.positive_) {
    Rat w = (opt.delta_mode == DeltaMode::weighted)
                ? Rat(p.mult)
                : Rat(1);
    delta = vadd(delta, vscale(w, p.coords));
  }
  rs.delta_ = vscale(Rat(1, 2), delta);
  rs.delta_norm2_ = dot(rs.gram_, rs.delta_, rs.delta_);

  // Fundamental weights: rows of the inverse Cartan-pairing matrix.
  std::optional<QMat> cinv = inverse(rs.cartan_);
  check_invariant(cinv.has_value(), "singular Cartan matrix");
  for (int i = 0; i < rank; ++i) {
    QVec w(rank);
    for (int k = 0; k < rank; ++k) w[k] = cinv->at(i, k);
    rs.fweights_.push_back(std::move(w));
  }
  for (int i = 0; i < rank; ++i) {
    QVec fw = rs.fw_coords(rs.fweights_[i]);
    for (int j = 0; j < rank; ++j)
      check_invariant(fw[j] == Rat(i == j ? 1 : 0),
                      "fundamental weight pairing is not dual to the simples");
  }

  // Weyl group by breadth-first closure of the simple reflections.
  long cap = weyl_cap(opt.max_weyl);
  std::vector<QMat> gens;
  for (int j = 0; j < rank; ++j) {
    QMat s = QMat::identity(rank);
    // s_j: e_k -> e_k - <alpha_k, alpha_j^vee> e_j
    for (int k = 0; k < rank; ++k)
      s.at(j, k) = (k == j ? Rat(1) : Rat(0)) - rs.cartan_.at(k, j);
    gens.push_back(std::move(s));
  }
  std::map<QMat, size_t> seen;
  std::deque<size_t> bfs;
  rs.weyl_.push_back({QMat::identity(rank), {}});
  seen.emplace(rs.weyl_[0].matrix, 0);
  bfs.push_back(0);
  while (!bfs.empty()) {
    size_t idx = bfs.front();
    bfs.pop_front();
    for (int j = 0; j < rank; ++j) {
      QMat m = rs.weyl_[idx].matrix * gens[j];
      if (seen.count(m)) continue;
      if (static_cast<long>(rs.weyl_.size()) >= cap)
        fail(errc::capacity,
             "Weyl closure exceeded " + std::to_string(cap) +
                 " elements (LAPLACE_SPECTRA_MAX_CLOSURE)");
      std::vector<int> word = rs.weyl_[idx].word;
      word.push_back(j);
      seen.emplace(m, rs.weyl_.size());
      bfs.push_back(rs.weyl_.size());
      rs.weyl_.push_back({std::move(m), std::move(word)});
    }
  }

  // Longest element: sends every simple root to a negative root.
  size_t found = rs.weyl_.size();
  for (size_t i = 0; i < rs.weyl_.size(); ++i) {
    bool all_neg = true;
    for (int j = 0; j < rank && all_neg; ++j) {
      QVec img(rank);
      for (int k = 0; k < rank; ++k) img[k] = rs.weyl_[i].matrix.at(k, j);
      for (const Rat& c : img)
        if (c.sign() > 0) { all_neg = false; break; }
    }
    if (all_neg) {
      check_invariant(found == rs.weyl_.size(), "longest element not unique");
      found = i;
    }
  }
  check_invariant(found < rs.weyl_.size(), "no longest element found");
  rs.longest_ = found;
  check_invariant(
      rs.weyl_[found].matrix * rs.weyl_[found].matrix == QMat::identity(rank),
      "longest element is not an involution");

  return rs;
}

namespace {

Lattice make_lattice(const RootSystem& rs, std::string label,
                     std::vector<QVec> basis) {
  Lattice lat;
  lat.label = std::move(label);
  lat.basis = std::move(basis);
  int n = rs.rank();
  if (static_cast<int>(lat.basis.size()) != n)
    fail(errc::usage, "lattice basis must have exactly rank vectors");
  lat.basis_matrix = QMat(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) lat.basis_matrix.at(i, j) = lat.basis[j][i];
  std::optional<QMat> inv = inverse(lat.basis_matrix);
  if (!inv) fail(errc::usage, "lattice basis is not full rank");
  lat.basis_inv = *inv;
  return lat;
}

}  // namespace

Lattice weight_lattice(const RootSystem& rs) {
  return make_lattice(rs, "weight", rs.fundamental_weights());
}

Lattice root_lattice(const RootSystem& rs) {
  std::vector<QVec> basis;
  for (int i = 0; i < rs.rank(); ++i) {
    QVec e(rs.rank(), Rat(0));
    e[i] = Rat(1);
    basis.push_back(std::move(e));
  }
  return make_lattice(rs, "root", std::move(basis));
}

Lattice scaled_weight_lattice(const RootSystem& rs, long k) {
  if (k < 1) fail(errc::usage, "lattice scale must be a positive integer");
  std::vector<QVec> basis;
  for (const QVec& w : rs.fundamental_weights())
    basis.push_back(vscale(Rat(k), w));
  return make_lattice(rs, "weight*" + std::to_string(k), std::move(basis));
}

Lattice custom_lattice(const RootSystem& rs, const std::string& label,
                       const std::vector<QVec>& basis_fw) {
  std::vector<QVec> basis;
  for (const QVec& fw : basis_fw) basis.push_back(rs.from_fw(fw));
  return make_lattice(rs, label, std::move(basis));
}

QVec lattice_coords(const Lattice& lat, const QVec& v) {
  return mat_vec(lat.basis_inv, v);
}

bool in_lattice(const Lattice& lat, const QVec& v) {
  for (const Rat& c : lattice_coords(lat, v))
    if (!c.is_integer()) return false;
  return true;
}

std::vector<QVec> ball_points(const RootSystem& rs, const Lattice& lat,
                              const Rat& a2, bool boundary_only,
                              BallScan* scan, long max_volume) {
  int n = rs.rank();
  // Gram of the lattice basis; positive definite since the root-space
  // inner product is and the basis is full rank.
  QMat a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      a.at(i, j) = rs.inner(lat.basis[i], lat.basis[j]);
  std::optional<QMat> ainv = inverse(a);
  check_invariant(ainv.has_value(), "lattice Gram matrix is singular");

  // mu + delta = sum_i (m_i + t_i) b_i with t the basis coordinates of delta.
  QVec t = lattice_coords(lat, rs.delta());

  std::vector<std::pair<Int, Int>> box(n);
  Int volume(1);
  if (a2.sign() >= 0) {
    for (int i = 0; i < n; ++i) {
      Rat r2 = a2 * ainv->at(i, i);
      check_invariant(r2.sign() >= 0, "negative box radius");
      box[i] = {lower_int_bound(-t[i], r2), upper_int_bound(-t[i], r2)};
      Int width = box[i].second - box[i].first + 1;
      if (width < 0) width = 0;
      volume *= width;
    }
  } else {
    for (int i = 0; i < n; ++i) box[i] = {Int(0), Int(-1)};
    volume = 0;
  }
  if (volume > max_volume)
    fail(errc::capacity, "enumeration box holds " + volume.get_str() +
                             " points, above the limit of " +
                             std::to_string(max_volume));
  if (scan) {
    scan->box = box;
    scan->volume = volume;
  }

  std::vector<QVec> out;
  if (volume == 0) return out;
  std::vector<Int> m(n);
  for (int i = 0; i < n; ++i) m[i] = box[i].first;
  while (true) {
    QVec x(n);
    for (int i = 0; i < n; ++i) x[i] = Rat(m[i]) + t[i];
    // x^T A x without materializing mu first.
    Rat q;
    for (int i = 0; i < n; ++i) {
      if (x[i].is_zero()) continue;
      Rat row;
      for (int j = 0; j < n; ++j) row += a.at(i, j) * x[j];
      q += x[i] * row;
    }
    bool keep = boundary_only ? (q == a2) : (q <= a2);
    if (keep) {
      QVec mu(n, Rat(0));
      for (int i = 0; i < n; ++i)
        mu = vadd(mu, vscale(Rat(m[i]), lat.basis[i]));
      out.push_back(std::move(mu));
    }
    int pos = n - 1;
    while (pos >= 0) {
      m[pos] += 1;
      if (m[pos] <= box[pos].second) break;
      m[pos] = box[pos].first;
      --pos;
    }
    if (pos < 0) break;
  }
  return out;
}

}  // namespace lsp
