#include "toric/polytope.hpp"

#include <mutex>
#include <set>

#include "toric/lp.hpp"

namespace toric {

struct LatticePolytope::Cache {
  std::once_flag once;
  std::vector<RationalVector> vertices;
};

LatticePolytope::LatticePolytope(std::size_t dim, std::vector<Inequality> inequalities)
    : dim_(dim), ineqs_(std::move(inequalities)), cache_(std::make_shared<Cache>()) {
  for (const auto& q : ineqs_)
    if (q.normal.size() != dim_) throw Error("inequality normal has wrong length");
}

bool LatticePolytope::contains(const LatticeVector& m) const {
  return std::all_of(ineqs_.begin(), ineqs_.end(), [&](const Inequality& q) { return q.holds(m); });
}

bool LatticePolytope::contains(const RationalVector& m) const {
  return std::all_of(ineqs_.begin(), ineqs_.end(), [&](const Inequality& q) { return q.holds(m); });
}

const std::vector<RationalVector>& LatticePolytope::vertices() const {
  if (!cache_) throw Error("vertices of a default-constructed polytope");
  std::call_once(cache_->once, [this] { cache_->vertices = enumerate_vertices(ineqs_, {}, dim_); });
  return cache_->vertices;
}

bool LatticePolytope::full_dimensional() const {
  return affine_dimension(vertices()) == static_cast<long>(dim_);
}

LatticePolytope LatticePolytope::intersected(Inequality extra) const {
  auto q = ineqs_;
  q.push_back(std::move(extra));
  return LatticePolytope(dim_, std::move(q));
}

LatticePolytope LatticePolytope::translated(const LatticeVector& t) const {
  auto q = ineqs_;
  for (auto& ineq : q) ineq.offset += dot(ineq.normal, t);
  return LatticePolytope(dim_, std::move(q));
}

LatticePolytope LatticePolytope::dilated(const Integer& t) const {
  auto q = ineqs_;
  for (auto& ineq : q) ineq.offset *= t;
  return LatticePolytope(dim_, std::move(q));
}

std::optional<IntegerBox> bounding_box(const LatticePolytope& p) {
  const std::size_t n = p.dim();
  lp::Problem prob;
  prob.num_vars = n;
  prob.A = RationalMatrix(p.inequalities().size(), n);
  for (std::size_t i = 0; i < p.inequalities().size(); ++i) {
    const auto& q = p.inequalities()[i];
    for (std::size_t j = 0; j < n; ++j) prob.A(i, j) = q.normal[j];
    prob.b.emplace_back(q.offset);
  }
  IntegerBox box;
  for (std::size_t j = 0; j < n; ++j) {
    for (int sign : {1, -1}) {
      prob.c.assign(n, Rational(0));
      prob.c[j] = sign;
      lp::Result r = lp::maximize(prob);
      if (r.status == lp::Status::Infeasible) return std::nullopt;
      if (r.status == lp::Status::Unbounded) throw Error("unbounded polyhedron");
      if (sign == 1) {
        Integer hi;
        mpz_fdiv_q(hi.get_mpz_t(), r.value.get_num_mpz_t(), r.value.get_den_mpz_t());
        box.hi.push_back(to_long(hi));
      } else {
        Rational lo_value = -r.value;
        Integer lo;
        mpz_cdiv_q(lo.get_mpz_t(), lo_value.get_num_mpz_t(), lo_value.get_den_mpz_t());
        box.lo.push_back(to_long(lo));
      }
    }
  }
  for (std::size_t j = 0; j < n; ++j)
    if (box.lo[j] > box.hi[j]) return std::nullopt;
  return box;
}

std::vector<LatticeVector> lattice_points(const LatticePolytope& p) {
  std::vector<LatticeVector> out;
  auto box = bounding_box(p);
  if (!box) return out;
  const std::size_t n = p.dim();
  std::vector<long> cur = box->lo;
  for (;;) {
    LatticeVector m(n);
    for (std::size_t j = 0; j < n; ++j) m[j] = cur[j];
    if (p.contains(m)) out.push_back(std::move(m));
    std::size_t j = n;
    for (;;) {
      if (j == 0) return out;
      --j;
      if (cur[j] < box->hi[j]) {
        ++cur[j];
        break;
      }
      cur[j] = box->lo[j];
    }
  }
}

std::vector<RationalVector> enumerate_vertices(const std::vector<Inequality>& ineqs,
                                               const std::vector<Inequality>& equalities,
                                               std::size_t dim) {
  std::set<RationalVector> found;
  if (equalities.size() > dim) return {};
  const std::size_t pick = dim - equalities.size();
  const std::size_t m = ineqs.size();
  if (pick > m) return {};
  std::vector<std::size_t> idx(pick);
  for (std::size_t i = 0; i < pick; ++i) idx[i] = i;
  for (;;) {
    RationalMatrix a(dim, dim);
    RationalVector b(dim);
    for (std::size_t r = 0; r < equalities.size(); ++r) {
      for (std::size_t j = 0; j < dim; ++j) a(r, j) = equalities[r].normal[j];
      b[r] = equalities[r].offset;
    }
    for (std::size_t r = 0; r < pick; ++r) {
      const auto& q = ineqs[idx[r]];
      for (std::size_t j = 0; j < dim; ++j) a(equalities.size() + r, j) = q.normal[j];
      b[equalities.size() + r] = q.offset;
    }
    if (rank(a) == dim) {
      auto x = solve(a, b);
      if (x && std::all_of(ineqs.begin(), ineqs.end(), [&](const Inequality& q) { return q.holds(*x); }))
        found.insert(*x);
    }
    // next combination
    std::size_t i = pick;
    while (i > 0 && idx[i - 1] == m - pick + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t k = i; k < pick; ++k) idx[k] = idx[k - 1] + 1;
  }
  return {found.begin(), found.end()};
}

long affine_dimension(const std::vector<RationalVector>& pts) {
  if (pts.empty()) return -1;
  const std::size_t n = pts.front().size();
  RationalMatrix diff(pts.size() - 1, n);
  for (std::size_t i = 1; i < pts.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) diff(i - 1, j) = pts[i][j] - pts[0][j];
  return static_cast<long>(rank(diff));
}

namespace {

bool tight(const Inequality& q, const RationalVector& v) { return dot(v, q.normal) == Rational(q.offset); }

// Same closed halfspace: positive rational multiples.
bool same_halfspace(const Inequality& a, const Inequality& b) {
  Integer ga = gcd_of(a.normal), gb = gcd_of(b.normal);
  if (ga == 0 || gb == 0) return false;
  for (std::size_t j = 0; j < a.normal.size(); ++j)
    if (a.normal[j] * gb != b.normal[j] * ga) return false;
  return a.offset * gb == b.offset * ga;
}

}  // namespace

std::vector<std::size_t> facet_indices(const LatticePolytope& p) {
  std::vector<std::size_t> out;
  const auto& verts = p.vertices();
  const auto& q = p.inequalities();
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i].normal.is_zero()) continue;
    bool dup = false;
    for (std::size_t k : out) dup |= same_halfspace(q[k], q[i]);
    if (dup) continue;
    std::vector<RationalVector> on;
    for (const auto& v : verts)
      if (tight(q[i], v)) on.push_back(v);
    if (affine_dimension(on) == static_cast<long>(p.dim()) - 1) out.push_back(i);
  }
  return out;
}

VertexEdges edges_at(const LatticePolytope& p, const RationalVector& vertex) {
  const std::size_t n = p.dim();
  if (!p.contains(vertex)) throw Error("point is not in the polytope");
  std::vector<LatticeVector> active;
  for (const auto& q : p.inequalities())
    if (!q.normal.is_zero() && tight(q, vertex)) active.push_back(q.normal);
  if (active.empty() || rank(rows_matrix(active)) != n) throw Error("point is not a vertex");

  std::set<LatticeVector> dirs;
  if (n == 1) {
    for (long s : {1L, -1L}) {
      LatticeVector d{s};
      if (std::all_of(active.begin(), active.end(), [&](const LatticeVector& a) { return dot(a, d) <= 0; }))
        dirs.insert(d);
    }
  } else {
    const std::size_t k = active.size();
    std::vector<std::size_t> idx(n - 1);
    for (std::size_t i = 0; i < n - 1; ++i) idx[i] = i;
    for (;;) {
      std::vector<LatticeVector> sub;
      for (std::size_t i : idx) sub.push_back(active[i]);
      auto ker = kernel_basis(rows_matrix(sub));
      if (ker.size() == 1) {
        for (const LatticeVector& d : {ker[0], LatticeVector(-ker[0])}) {
          if (std::all_of(active.begin(), active.end(), [&](const LatticeVector& a) { return dot(a, d) <= 0; }))
            dirs.insert(d);
        }
      }
      std::size_t i = n - 1;
      while (i > 0 && idx[i - 1] == k - (n - 1) + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < n - 1; ++j) idx[j] = idx[j - 1] + 1;
    }
  }

  VertexEdges out;
  for (const auto& d : dirs) {
    std::optional<Rational> tmax;
    for (const auto& q : p.inequalities()) {
      Integer slope = dot(q.normal, d);
      if (slope <= 0) continue;
      Rational t = (Rational(q.offset) - dot(vertex, q.normal)) / Rational(slope);
      if (!tmax || t < *tmax) tmax = t;
    }
    if (!tmax) throw Error("unbounded polyhedron");
    RationalVector end = vertex;
    for (std::size_t j = 0; j < n; ++j) end[j] += *tmax * Rational(d[j]);
    out.directions.push_back(d);
    out.endpoints.push_back(std::move(end));
  }
  return out;
}

bool is_smooth_vertex(const LatticePolytope& p, const RationalVector& vertex) {
  VertexEdges e = edges_at(p, vertex);
  if (e.directions.size() != p.dim()) return false;
  Integer det = determinant(columns_matrix(e.directions));
  return det == 1 || det == -1;
}

NormalFan normal_fan(const LatticePolytope& p) {
  if (!p.full_dimensional()) throw Error("normal fan of a polytope that is not full-dimensional");
  const auto facets = facet_indices(p);
  NormalFan nf;
  std::vector<LatticeVector> rays;
  for (std::size_t i : facets) {
    rays.push_back(primitivize(-p.inequalities()[i].normal));
    nf.facet_of_ray.push_back(i);
  }
  std::vector<std::vector<std::size_t>> cones;
  for (const auto& v : p.vertices()) {
    std::vector<std::size_t> cone;
    for (std::size_t r = 0; r < facets.size(); ++r)
      if (tight(p.inequalities()[facets[r]], v)) cone.push_back(r);
    if (cone.size() != p.dim()) throw Error("normal fan: polytope is not simple at " + [&] {
        std::string s;
        for (const auto& c : v) s += c.get_str() + " ";
        return s;
      }());
    cones.push_back(std::move(cone));
  }
  nf.fan = Fan::make(p.dim(), std::move(rays), std::move(cones));
  nf.vertices = p.vertices();
  return nf;
}

}  // namespace toric
