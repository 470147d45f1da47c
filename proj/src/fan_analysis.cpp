#include "toric/fan_analysis.hpp"

#include <map>
#include <numeric>
#include <set>

#include "toric/cox.hpp"
#include "toric/lp.hpp"

namespace toric {

bool cone_is_transitive(const Fan& f, std::size_t k) {
  Cone c = f.cone(k);
  if (!c.full_dimensional() || !cone_is_smooth(c)) return false;
  Cone neg = c.negated();
  const auto& idx = f.max_cones[k];
  for (std::size_t j = 0; j < f.rays.size(); ++j) {
    if (std::find(idx.begin(), idx.end(), j) != idx.end()) continue;
    if (!cone_contains(neg, f.rays[j])) return false;
  }
  return true;
}

TransitivityVerdict normalize_at(const Fan& f, std::size_t k) {
  std::vector<std::size_t> idx = f.max_cones.at(k);
  std::sort(idx.begin(), idx.end());
  std::vector<LatticeVector> rays;
  for (std::size_t i : idx) rays.push_back(f.rays[i]);
  TransitivityVerdict v;
  v.basis_change = gl_change_of_basis(Cone(rays, f.rank));
  v.ray_order = idx;
  for (std::size_t i = 0; i < f.rays.size(); ++i)
    if (!std::binary_search(idx.begin(), idx.end(), i)) v.ray_order.push_back(i);
  v.normalized_fan = reorder_rays(transform(f, v.basis_change), v.ray_order);
  return v;
}

TransitivityVerdict transitive_cones(const Fan& f) {
  require_valid(f);
  std::vector<std::size_t> found;
  for (std::size_t k = 0; k < f.max_cones.size(); ++k)
    if (cone_is_transitive(f, k)) found.push_back(k);
  if (found.empty()) return {};
  TransitivityVerdict v = normalize_at(f, found.front());
  v.transitive_cone_indices = std::move(found);
  return v;
}

bool is_demazure_root(const Fan& f, const DemazureRoot& root) {
  if (root.ray_index >= f.rays.size() || root.m.size() != f.rank) return false;
  for (std::size_t j = 0; j < f.rays.size(); ++j) {
    Integer s = dot(root.m, f.rays[j]);
    if (j == root.ray_index ? s != -1 : s < 0) return false;
  }
  return true;
}

std::vector<DemazureRoot> demazure_roots(const Fan& f) {
  if (!validate_fan(f).complete) throw Error("root polytope may be unbounded");
  const std::size_t n = f.rank;
  std::vector<DemazureRoot> out;
  for (std::size_t i = 0; i < f.rays.size(); ++i) {
    std::vector<Inequality> eq{{f.rays[i], Integer(-1)}};
    std::vector<Inequality> ineqs;
    for (std::size_t j = 0; j < f.rays.size(); ++j)
      if (j != i) ineqs.push_back({-f.rays[j], Integer(0)});
    auto verts = enumerate_vertices(ineqs, eq, n);
    if (verts.empty()) continue;
    std::vector<long> lo(n), hi(n);
    for (std::size_t c = 0; c < n; ++c) {
      Rational mn = verts[0][c], mx = verts[0][c];
      for (const auto& v : verts) {
        if (v[c] < mn) mn = v[c];
        if (v[c] > mx) mx = v[c];
      }
      Integer l, h;
      mpz_cdiv_q(l.get_mpz_t(), mn.get_num_mpz_t(), mn.get_den_mpz_t());
      mpz_fdiv_q(h.get_mpz_t(), mx.get_num_mpz_t(), mx.get_den_mpz_t());
      lo[c] = to_long(l);
      hi[c] = to_long(h);
      if (lo[c] > hi[c]) goto next_ray;
    }
    {
      std::vector<long> cur = lo;
      for (;;) {
        DemazureRoot root{LatticeVector(n), i};
        for (std::size_t c = 0; c < n; ++c) root.m[c] = cur[c];
        if (is_demazure_root(f, root)) out.push_back(std::move(root));
        std::size_t c = n;
        bool done = false;
        for (;;) {
          if (c == 0) {
            done = true;
            break;
          }
          --c;
          if (cur[c] < hi[c]) {
            ++cur[c];
            break;
          }
          cur[c] = lo[c];
        }
        if (done) break;
      }
    }
  next_ray:;
  }
  return out;
}

bool roots_outside_sigma_check(const TransitivityVerdict& verdict,
                               const std::vector<DemazureRoot>& roots) {
  if (!verdict.normalized_fan) throw Error("roots_outside_sigma_check: fan is not quasi-transitive");
  const std::size_t n = verdict.normalized_fan->rank;
  for (const auto& r : roots) {
    if (r.ray_index < n) continue;
    std::size_t minus_ones = 0;
    bool other_zero = true;
    for (const auto& c : r.m) {
      if (c == -1)
        ++minus_ones;
      else if (c != 0)
        other_zero = false;
    }
    if (minus_ones != 1 || !other_zero) return false;
  }
  return true;
}

RayIndexPartition ray_index_partition(const CoxPresentation& cp) {
  const std::size_t n = cp.n, r = cp.r, k = r - n;
  RayIndexPartition part;
  part.I_sets.assign(k, {});
  std::vector<bool> placed(r, false);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      bool is_unit = true;
      for (std::size_t row = 0; row < k; ++row)
        if (cp.Q(row, i) != (row == j ? 1 : 0)) is_unit = false;
      if (is_unit) {
        part.I_sets[j].push_back(i);
        placed[i] = true;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!placed[i]) part.I.push_back(i);
  return part;
}

std::vector<DemazureRoot> predicted_root_family(const CoxPresentation& cp) {
  const std::size_t n = cp.n;
  RayIndexPartition part = ray_index_partition(cp);
  std::vector<DemazureRoot> out;
  for (std::size_t i : part.I)
    for (std::size_t j = 0; j < part.I_sets.size(); ++j) {
      if (cp.P(i, n + j) < 1) continue;
      for (std::size_t k : part.I_sets[j]) {
        if (k >= n) continue;
        LatticeVector m = LatticeVector::unit(n, i) - LatticeVector::unit(n, k);
        out.push_back({std::move(m), i});
      }
    }
  return out;
}

bool hull_contains(const std::vector<RationalVector>& points, const RationalVector& q) {
  if (points.empty()) return false;
  const std::size_t n = q.size();
  const std::size_t k = points.size();
  RationalMatrix ineq(k, k);
  for (std::size_t i = 0; i < k; ++i) ineq(i, i) = -1;
  RationalMatrix eq(n + 1, k);
  RationalVector rhs(n + 1);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t i = 0; i < k; ++i) eq(c, i) = points[i][c];
    rhs[c] = q[c];
  }
  for (std::size_t i = 0; i < k; ++i) eq(n, i) = 1;
  rhs[n] = 1;
  return lp::feasible(ineq, RationalVector(k, Rational(0)), eq, rhs);
}

CapsuleResult vertex_capsule(const LatticePolytope& p, const LatticeVector& vertex) {
  const std::size_t n = p.dim();
  RationalVector pv = to_rational(vertex);
  const auto& verts = p.vertices();
  if (std::find(verts.begin(), verts.end(), pv) == verts.end())
    throw Error("point " + vertex.to_string() + " is not a vertex of the polytope");
  VertexEdges edges = edges_at(p, pv);
  if (edges.directions.size() != n) throw Error("capsule undefined at non-smooth vertex");
  Integer det = determinant(columns_matrix(edges.directions));
  if (det != 1 && det != -1) throw Error("capsule undefined at non-smooth vertex");

  CapsuleResult res;
  res.vertex = vertex;
  res.edge_endpoints = edges.endpoints;
  res.reflection.assign(n, Rational(0));
  for (std::size_t c = 0; c < n; ++c) {
    for (const auto& e : edges.endpoints) res.reflection[c] += e[c];
    res.reflection[c] -= Rational(static_cast<long>(n) - 1) * pv[c];
  }
  res.capsule_vertices.push_back(pv);
  for (const auto& e : edges.endpoints) res.capsule_vertices.push_back(e);
  res.capsule_vertices.push_back(res.reflection);
  res.contains_polytope = std::all_of(verts.begin(), verts.end(), [&](const RationalVector& v) {
    return hull_contains(res.capsule_vertices, v);
  });
  res.certified = n == 2;
  return res;
}

namespace {

std::vector<Integer> flat(const IntegerMatrix& m) {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m(i, j));
  return out;
}

}  // namespace

std::vector<IntegerMatrix> fan_symmetries(const Fan& f) {
  const std::size_t n = f.rank;
  if (f.max_cones.empty()) return {};
  std::map<LatticeVector, std::size_t> ray_index;
  for (std::size_t i = 0; i < f.rays.size(); ++i) ray_index[f.rays[i]] = i;
  std::vector<std::size_t> degree(f.rays.size(), 0);
  std::set<std::vector<std::size_t>> cone_set;
  for (const auto& c : f.max_cones) {
    for (std::size_t i : c) ++degree[i];
    std::vector<std::size_t> s = c;
    std::sort(s.begin(), s.end());
    cone_set.insert(s);
  }

  const auto& base = f.max_cones.front();
  RationalMatrix base_inv = inverse(to_rational(columns_matrix(f.cone_rays(0))));
  std::map<std::vector<Integer>, IntegerMatrix> found;
  for (const auto& target_cone : f.max_cones) {
    std::vector<std::size_t> perm = target_cone;
    std::sort(perm.begin(), perm.end());
    do {
      bool degrees_match = true;
      for (std::size_t c = 0; c < n; ++c)
        if (degree[perm[c]] != degree[base[c]]) degrees_match = false;
      if (!degrees_match) continue;
      std::vector<LatticeVector> images;
      for (std::size_t i : perm) images.push_back(f.rays[i]);
      RationalMatrix a_rat = to_rational(columns_matrix(images)) * base_inv;
      bool integral = true;
      for (std::size_t i = 0; i < n && integral; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (a_rat(i, j).get_den() != 1) {
            integral = false;
            break;
          }
      if (!integral) continue;
      IntegerMatrix a = to_integer(a_rat);
      Integer det = determinant(a);
      if (det != 1 && det != -1) continue;
      std::vector<std::size_t> image(f.rays.size());
      bool ok = true;
      for (std::size_t i = 0; i < f.rays.size() && ok; ++i) {
        auto it = ray_index.find(apply(a, f.rays[i]));
        if (it == ray_index.end())
          ok = false;
        else
          image[i] = it->second;
      }
      if (!ok) continue;
      for (const auto& c : f.max_cones) {
        std::vector<std::size_t> mapped;
        for (std::size_t i : c) mapped.push_back(image[i]);
        std::sort(mapped.begin(), mapped.end());
        if (!cone_set.count(mapped)) {
          ok = false;
          break;
        }
      }
      if (ok) found.emplace(flat(a), a);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  std::vector<IntegerMatrix> out;
  for (auto& [key, m] : found) out.push_back(std::move(m));
  return out;
}

std::optional<P1PowerIdentification> detect_p1_power(const Fan& f) {
  TransitivityVerdict v = transitive_cones(f);
  const auto& t = v.transitive_cone_indices;
  const std::size_t n = f.rank;
  if (f.rays.size() != 2 * n) return std::nullopt;
  for (std::size_t a = 0; a < t.size(); ++a)
    for (std::size_t b = a + 1; b < t.size(); ++b) {
      const auto& ca = f.max_cones[t[a]];
      const auto& cb = f.max_cones[t[b]];
      bool disjoint = std::none_of(ca.begin(), ca.end(), [&](std::size_t i) {
        return std::find(cb.begin(), cb.end(), i) != cb.end();
      });
      if (!disjoint) continue;
      P1PowerIdentification id;
      id.n = n;
      id.cone_a = t[a];
      id.cone_b = t[b];
      bool antipodal = true;
      for (std::size_t i : ca) {
        auto it = std::find_if(cb.begin(), cb.end(), [&](std::size_t j) { return f.rays[j] == -f.rays[i]; });
        if (it == cb.end()) {
          antipodal = false;
          break;
        }
        id.pairing.emplace_back(i, *it);
      }
      if (!antipodal) continue;
      std::sort(id.pairing.begin(), id.pairing.end());
      return id;
    }
  return std::nullopt;
}

}  // namespace toric
