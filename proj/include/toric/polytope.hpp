#pragma once

// Lattice polytopes in M given by inequalities <m, normal> <= offset.

#include <memory>
#include <optional>
#include <vector>

#include "toric/fan.hpp"
#include "toric/lattice.hpp"

namespace toric {

struct Inequality {
  LatticeVector normal;
  Integer offset;

  bool holds(const LatticeVector& m) const { return dot(m, normal) <= offset; }
  bool holds(const RationalVector& m) const { return dot(m, normal) <= Rational(offset); }
  friend bool operator==(const Inequality&, const Inequality&) = default;
};

class LatticePolytope {
 public:
  LatticePolytope() = default;
  LatticePolytope(std::size_t dim, std::vector<Inequality> inequalities);

  std::size_t dim() const { return dim_; }
  const std::vector<Inequality>& inequalities() const { return ineqs_; }

  bool contains(const LatticeVector& m) const;
  bool contains(const RationalVector& m) const;

  /// Exact vertices, computed once from basic solutions and cached.
  const std::vector<RationalVector>& vertices() const;
  bool empty() const { return vertices().empty(); }
  bool full_dimensional() const;

  LatticePolytope intersected(Inequality extra) const;
  LatticePolytope translated(const LatticeVector& t) const;
  LatticePolytope dilated(const Integer& t) const;

  friend bool operator==(const LatticePolytope& a, const LatticePolytope& b) {
    return a.dim_ == b.dim_ && a.ineqs_ == b.ineqs_;
  }

 private:
  struct Cache;
  std::size_t dim_ = 0;
  std::vector<Inequality> ineqs_;
  std::shared_ptr<Cache> cache_;
};

/// Integer bounding box of a polytope; nullopt when the polytope is empty.
/// Throws "unbounded polyhedron".
struct IntegerBox {
  std::vector<long> lo;
  std::vector<long> hi;
};
std::optional<IntegerBox> bounding_box(const LatticePolytope& p);

/// All lattice points, lexicographically ordered. Throws "unbounded polyhedron".
std::vector<LatticeVector> lattice_points(const LatticePolytope& p);

/// Vertices of {A x <= b, E x = f}; E must have full row rank.
std::vector<RationalVector> enumerate_vertices(const std::vector<Inequality>& ineqs,
                                               const std::vector<Inequality>& equalities,
                                               std::size_t dim);

/// Indices of inequalities that define facets (first representative of duplicates).
std::vector<std::size_t> facet_indices(const LatticePolytope& p);

/// Edges leaving a vertex: primitive directions and the far endpoints.
struct VertexEdges {
  std::vector<LatticeVector> directions;
  std::vector<RationalVector> endpoints;
};
VertexEdges edges_at(const LatticePolytope& p, const RationalVector& vertex);

/// Normal fan of a full-dimensional simple polytope. Rays are the primitive
/// inner facet normals; maximal cone k belongs to vertices[k].
struct NormalFan {
  Fan fan;
  std::vector<RationalVector> vertices;
  /// index into the polytope's inequality list for each ray
  std::vector<std::size_t> facet_of_ray;
};
NormalFan normal_fan(const LatticePolytope& p);

/// Smooth vertex: exactly dim edges whose primitive directions form a lattice basis.
bool is_smooth_vertex(const LatticePolytope& p, const RationalVector& vertex);

/// Affine dimension of a finite point set (-1 for the empty set).
long affine_dimension(const std::vector<RationalVector>& pts);

}  // namespace toric
