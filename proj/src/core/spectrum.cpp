#include "core/spectrum.hpp"

#include <algorithm>
#include <map>

namespace lsp {

Rat casimir_a2(const RootSystem& rs, const QVec& mu) {
  QVec shifted = vadd(mu, rs.delta());
  return rs.inner(shifted, shifted);
}

Rat casimir_eigenvalue(const RootSystem& rs, const QVec& mu) {
  return casimir_a2(rs, mu) - rs.delta_norm2();
}

Int weyl_dim(const RootSystem& rs, const QVec& mu) {
  if (!rs.reduced() || !rs.all_mult_one())
    fail(errc::capability,
         "the dimension formula requires a reduced system with trivial "
         "multiplicities (" + rs.label() + ")");
  if (!rs.is_dominant(mu)) fail(errc::domain, "weight is not dominant");
  if (!rs.in_weight_lattice(mu)) fail(errc::domain, "weight is not integral");
  QVec shifted = vadd(mu, rs.delta());
  Rat prod(1);
  for (const PositiveRoot& p : rs.positive_roots()) {
    Rat den = rs.inner(rs.delta(), p.coords);
    check_invariant(!den.is_zero(), "half-sum orthogonal to a positive root");
    prod *= rs.inner(shifted, p.coords) / den;
  }
  check_invariant(prod.is_integer() && prod.sign() > 0,
                  "dimension product is not a positive integer");
  return prod.num();
}

namespace {

bool dim_and_type_apply(const RootSystem& rs, const QVec& mu) {
  return rs.reduced() && rs.all_mult_one() && rs.in_weight_lattice(mu);
}

WeightRecord make_record(const RootSystem& rs, const QVec& mu) {
  WeightRecord rec;
  rec.mu = mu;
  rec.mu_fw = rs.fw_coords(mu);
  rec.a2 = casimir_a2(rs, mu);
  rec.lambda = rec.a2 - rs.delta_norm2();
  QVec dual = dual_weight(rs, mu);
  rec.dual_fw = rs.fw_coords(dual);
  rec.self_dual = (rec.dual_fw == rec.mu_fw);
  check_invariant(casimir_a2(rs, dual) == rec.a2,
                  "dual weight moved to a different shell");
  if (dim_and_type_apply(rs, mu)) {
    rec.dim = weyl_dim(rs, mu);
    rec.type = rep_type_name(type_of(rs, mu).type);
    check_invariant(weyl_dim(rs, dual) == *rec.dim,
                    "dual weight has a different dimension");
  } else {
    rec.type = "unknown";
  }
  return rec;
}

}  // namespace

SpectrumResult enumerate_spherical(const RootSystem& rs, const Lattice& lat,
                                   const Rat& a2max) {
  SpectrumResult out;
  out.cutoff_below_delta = (a2max < rs.delta_norm2());
  std::vector<QVec> points = ball_points(rs, lat, a2max, false, &out.scan);
  for (const QVec& mu : points) {
    if (!rs.is_dominant(mu)) continue;
    out.records.push_back(make_record(rs, mu));
  }
  std::sort(out.records.begin(), out.records.end(),
            [](const WeightRecord& a, const WeightRecord& b) {
              if (a.a2 != b.a2) return a.a2 < b.a2;
              return a.mu_fw < b.mu_fw;
            });
  for (const WeightRecord& rec : out.records) {
    // The eigenvalue is nonnegative, and only the trivial weight sits at 0.
    bool zero_wt = std::all_of(rec.mu.begin(), rec.mu.end(),
                               [](const Rat& x) { return x.is_zero(); });
    check_invariant(rec.lambda.sign() > 0 || (rec.lambda.is_zero() && zero_wt),
                    "eigenvalue positivity failed on a dominant weight");
  }
  check_invariant(!out.cutoff_below_delta || out.records.empty(),
                  "records found below the half-sum norm");
  return out;
}

std::vector<CollisionClass> collisions(const std::vector<WeightRecord>& records) {
  std::map<Rat, std::vector<size_t>> by_a2;
  for (size_t i = 0; i < records.size(); ++i)
    by_a2[records[i].a2].push_back(i);
  std::vector<CollisionClass> out;
  for (const auto& [a2, members] : by_a2) {
    if (members.size() < 2) continue;
    CollisionClass c;
    c.a2 = a2;
    c.lambda = records[members.front()].lambda;
    c.members = members;
    for (size_t i = 0; i < members.size() && !c.has_nondual_pair; ++i)
      for (size_t j = i + 1; j < members.size(); ++j) {
        const WeightRecord& a = records[members[i]];
        const WeightRecord& b = records[members[j]];
        if (b.mu_fw != a.mu_fw && b.mu_fw != a.dual_fw) {
          c.has_nondual_pair = true;
          break;
        }
      }
    out.push_back(std::move(c));
  }
  return out;  // std::map iteration keeps classes sorted by a2
}

}  // namespace lsp
