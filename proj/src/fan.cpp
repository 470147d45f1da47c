#include "toric/fan.hpp"

#include <map>
#include <random>
#include <set>

#include "toric/lp.hpp"

namespace toric {

Cone::Cone(std::vector<LatticeVector> rays, std::size_t ambient_rank)
    : rays_(std::move(rays)), ambient_rank_(ambient_rank) {
  for (const auto& r : rays_) {
    if (r.size() != ambient_rank_) throw Error("cone ray has wrong length");
    if (r.is_zero()) throw Error("zero ray");
    if (gcd_of(r) != 1) throw Error("cone ray " + r.to_string() + " is not primitive");
  }
  if (rays_.size() > ambient_rank_ || rank(columns_matrix(rays_)) != rays_.size())
    throw Error("cone rays are linearly dependent");
}

Cone Cone::negated() const {
  std::vector<LatticeVector> neg;
  neg.reserve(rays_.size());
  for (const auto& r : rays_) neg.push_back(-r);
  return Cone(std::move(neg), ambient_rank_);
}

bool cone_is_smooth(const Cone& c) {
  if (!c.full_dimensional()) throw Error("not full-dimensional");
  Integer d = determinant(columns_matrix(c.rays()));
  return d == 1 || d == -1;
}

bool cone_contains(const Cone& c, const LatticeVector& v) {
  if (v.size() != c.ambient_rank()) throw Error("cone_contains: length mismatch");
  auto lambda = solve(to_rational(columns_matrix(c.rays())), to_rational(v));
  if (!lambda) return false;
  return std::all_of(lambda->begin(), lambda->end(), [](const Rational& x) { return x >= 0; });
}

IntegerMatrix gl_change_of_basis(const Cone& src) {
  if (!src.full_dimensional() || !cone_is_smooth(src))
    throw Error("no unimodular normalization");
  RationalMatrix inv = inverse(to_rational(columns_matrix(src.rays())));
  IntegerMatrix a = to_integer(inv);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = -a(i, j);
  return a;
}

Fan Fan::make(std::size_t rank, std::vector<LatticeVector> rays,
              std::vector<std::vector<std::size_t>> max_cones) {
  if (rank == 0) throw InputError("fan rank must be positive", "rank");
  Fan f;
  f.rank = rank;
  for (std::size_t i = 0; i < rays.size(); ++i) {
    if (rays[i].size() != rank)
      throw InputError("ray has wrong length", "rays[" + std::to_string(i) + "]");
    if (rays[i].is_zero()) throw InputError("zero ray", "rays[" + std::to_string(i) + "]");
    f.rays.push_back(primitivize(rays[i]));
  }
  for (std::size_t k = 0; k < max_cones.size(); ++k)
    for (std::size_t idx : max_cones[k])
      if (idx >= f.rays.size())
        throw InputError("ray index out of range", "max_cones[" + std::to_string(k) + "]");
  f.max_cones = std::move(max_cones);
  return f;
}

std::vector<LatticeVector> Fan::cone_rays(std::size_t k) const {
  std::vector<LatticeVector> out;
  for (std::size_t idx : max_cones.at(k)) out.push_back(rays.at(idx));
  return out;
}

Cone Fan::cone(std::size_t k) const { return Cone(cone_rays(k), rank); }

namespace {

// R^{-1} = adj / det; interior membership only needs sign(det) * adj * v > 0.
struct ConeFrame {
  IntegerMatrix signed_adj;  // rows are inward facet normals
};

ConeFrame frame_of(const Fan& f, std::size_t k) {
  IntegerMatrix r = columns_matrix(f.cone_rays(k));
  Integer det = determinant(r);
  RationalMatrix inv = inverse(to_rational(r));
  ConeFrame fr;
  fr.signed_adj = IntegerMatrix(f.rank, f.rank);
  Integer s = det > 0 ? Integer(1) : Integer(-1);
  for (std::size_t i = 0; i < f.rank; ++i)
    for (std::size_t j = 0; j < f.rank; ++j) {
      Rational e = inv(i, j) * Rational(det * s);
      fr.signed_adj(i, j) = e.get_num();
    }
  return fr;
}

// -1: v outside; 0: on the boundary; 1: interior.
int classify(const ConeFrame& fr, const LatticeVector& v) {
  bool zero = false;
  for (std::size_t i = 0; i < fr.signed_adj.rows(); ++i) {
    Integer s = 0;
    for (std::size_t j = 0; j < v.size(); ++j) s += fr.signed_adj(i, j) * v[j];
    if (s < 0) return -1;
    if (s == 0) zero = true;
  }
  return zero ? 0 : 1;
}

// Some facet hyperplane of one cone weakly separates all rays of the other.
bool separated_by_facet(const ConeFrame& fr, const std::vector<LatticeVector>& other) {
  for (std::size_t i = 0; i < fr.signed_adj.rows(); ++i) {
    bool all_nonpos = true;
    for (const auto& v : other) {
      Integer s = 0;
      for (std::size_t j = 0; j < v.size(); ++j) s += fr.signed_adj(i, j) * v[j];
      if (s > 0) {
        all_nonpos = false;
        break;
      }
    }
    if (all_nonpos) return true;
  }
  return false;
}

// LP: exists lambda, mu >= 1 with R lambda = S mu.
bool interiors_meet(const std::vector<LatticeVector>& a, const std::vector<LatticeVector>& b,
                    std::size_t n) {
  const std::size_t vars = a.size() + b.size();
  RationalMatrix ineq(vars, vars);
  RationalVector rhs(vars, Rational(-1));
  for (std::size_t i = 0; i < vars; ++i) ineq(i, i) = -1;
  RationalMatrix eq(n, vars);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) eq(i, j) = a[j][i];
    for (std::size_t j = 0; j < b.size(); ++j) eq(i, a.size() + j) = -b[j][i];
  }
  return lp::feasible(ineq, rhs, eq, RationalVector(n, Rational(0)));
}

}  // namespace

Location locate(const Fan& f, const LatticeVector& v) {
  Location loc;
  for (std::size_t k = 0; k < f.max_cones.size(); ++k) {
    int c = classify(frame_of(f, k), v);
    if (c == 1) loc.interior.push_back(k);
    if (c == 0) loc.on_boundary = true;
  }
  return loc;
}

ValidationReport validate_fan(const Fan& f, const ValidationOptions& opts) {
  ValidationReport rep;
  const std::size_t n = f.rank;
  auto fail = [&rep](std::string msg) {
    if (rep.error.empty()) rep.error = std::move(msg);
  };

  {
    std::set<LatticeVector> seen;
    for (std::size_t i = 0; i < f.rays.size(); ++i)
      if (!seen.insert(f.rays[i]).second) fail("duplicate ray " + std::to_string(i));
  }
  if (f.max_cones.empty()) fail("fan has no maximal cones");

  rep.simplicial = true;
  rep.smooth_cones.assign(f.max_cones.size(), false);
  std::vector<bool> used(f.rays.size(), false);
  for (std::size_t k = 0; k < f.max_cones.size(); ++k) {
    const auto& idx = f.max_cones[k];
    std::set<std::size_t> distinct(idx.begin(), idx.end());
    if (idx.size() != n || distinct.size() != n) {
      rep.simplicial = false;
      fail("maximal cone " + std::to_string(k) + " does not have exactly rank-many rays");
      continue;
    }
    for (std::size_t i : idx) used[i] = true;
    Integer det = determinant(columns_matrix(f.cone_rays(k)));
    if (det == 0) {
      rep.simplicial = false;
      fail("maximal cone " + std::to_string(k) + " is not simplicial");
      continue;
    }
    rep.smooth_cones[k] = det == 1 || det == -1;
  }
  rep.smooth = rep.simplicial &&
               std::all_of(rep.smooth_cones.begin(), rep.smooth_cones.end(), [](bool b) { return b; });
  for (std::size_t i = 0; i < used.size(); ++i)
    if (!used[i]) fail("ray " + std::to_string(i) + " lies in no maximal cone");
  if (!rep.simplicial) return rep;

  std::vector<ConeFrame> frames;
  frames.reserve(f.max_cones.size());
  for (std::size_t k = 0; k < f.max_cones.size(); ++k) frames.push_back(frame_of(f, k));

  // Facet pairing: each (n-1)-face lies in exactly two maximal cones, on opposite sides.
  bool paired = true;
  std::map<std::vector<std::size_t>, std::vector<std::pair<std::size_t, std::size_t>>> facets;
  for (std::size_t k = 0; k < f.max_cones.size(); ++k) {
    std::vector<std::size_t> idx = f.max_cones[k];
    std::sort(idx.begin(), idx.end());
    for (std::size_t drop = 0; drop < n; ++drop) {
      std::vector<std::size_t> facet;
      for (std::size_t j = 0; j < n; ++j)
        if (j != drop) facet.push_back(idx[j]);
      facets[facet].emplace_back(k, idx[drop]);
    }
  }
  for (const auto& [facet, owners] : facets) {
    if (owners.size() != 2) {
      paired = false;
      fail("facet shared by " + std::to_string(owners.size()) + " maximal cones (expected 2)");
      continue;
    }
    std::vector<LatticeVector> frows;
    for (std::size_t i : facet) frows.push_back(f.rays[i]);
    LatticeVector normal = n == 1 ? LatticeVector{1} : kernel_basis(rows_matrix(frows)).front();
    Integer sa = dot(normal, f.rays[owners[0].second]);
    Integer sb = dot(normal, f.rays[owners[1].second]);
    if (sgn(sa) * sgn(sb) >= 0) {
      paired = false;
      fail("two maximal cones lie on the same side of a shared facet");
    }
  }

  bool disjoint = true;
  for (std::size_t a = 0; a < f.max_cones.size() && disjoint; ++a)
    for (std::size_t b = a + 1; b < f.max_cones.size(); ++b) {
      auto ra = f.cone_rays(a);
      auto rb = f.cone_rays(b);
      if (separated_by_facet(frames[b], ra) || separated_by_facet(frames[a], rb)) continue;
      if (interiors_meet(ra, rb, n)) {
        disjoint = false;
        fail("maximal cones " + std::to_string(a) + " and " + std::to_string(b) +
             " overlap in their interiors");
        break;
      }
    }

  bool located = true;
  if (paired && disjoint) {
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<long> coord(-1000000, 1000000);
    std::size_t attempts = 0;
    while (rep.samples_checked < opts.samples && attempts < 20 * opts.samples + 100) {
      ++attempts;
      LatticeVector v(n);
      for (std::size_t i = 0; i < n; ++i) v[i] = coord(rng);
      if (v.is_zero()) continue;
      std::size_t inside = 0;
      bool boundary = false;
      for (const auto& fr : frames) {
        int c = classify(fr, v);
        inside += c == 1;
        boundary |= c == 0;
      }
      if (boundary) continue;  // perturb by resampling
      if (inside != 1) {
        located = false;
        fail("random direction " + v.to_string() + " lies in " + std::to_string(inside) +
             " maximal cones");
        break;
      }
      ++rep.samples_checked;
    }
  }
  rep.complete = paired && disjoint && located;
  rep.valid = rep.simplicial && rep.complete && rep.error.empty();
  return rep;
}

void require_valid(const Fan& f) {
  ValidationReport rep = validate_fan(f);
  if (!rep.valid) throw InputError("invalid fan: " + rep.error, "fan");
}

Fan transform(const Fan& f, const IntegerMatrix& a) {
  Fan g = f;
  for (auto& r : g.rays) r = apply(a, r);
  return g;
}

Fan reorder_rays(const Fan& f, const std::vector<std::size_t>& order) {
  if (order.size() != f.rays.size()) throw Error("reorder_rays: not a permutation");
  std::vector<std::size_t> new_index(order.size(), order.size());
  Fan g;
  g.rank = f.rank;
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (order[k] >= order.size() || new_index[order[k]] != order.size())
      throw Error("reorder_rays: not a permutation");
    new_index[order[k]] = k;
    g.rays.push_back(f.rays[order[k]]);
  }
  for (const auto& c : f.max_cones) {
    std::vector<std::size_t> nc;
    for (std::size_t i : c) nc.push_back(new_index[i]);
    g.max_cones.push_back(std::move(nc));
  }
  return g;
}

}  // namespace toric
