#pragma once

// Quasi-transitivity of complete simplicial fans, Demazure roots, vertex
// capsules of polytopes, and fan symmetries.

#include <optional>
#include <utility>
#include <vector>

#include "toric/fan.hpp"
#include "toric/polytope.hpp"

namespace toric {

struct CoxPresentation;

/// Maximal cones whose invariant point can be moved into the dense torus.
/// When nonempty, the fan is also normalized so the first transitive cone
/// becomes <-e_1, ..., -e_n>.
struct TransitivityVerdict {
  std::vector<std::size_t> transitive_cone_indices;
  std::optional<Fan> normalized_fan;
  IntegerMatrix basis_change;
  /// normalized ray k is original ray ray_order[k]
  std::vector<std::size_t> ray_order;

  bool quasi_transitive() const { return !transitive_cone_indices.empty(); }
};

/// Smooth, full-dimensional, and every ray outside the cone lies in its negative.
bool cone_is_transitive(const Fan& f, std::size_t cone_index);

/// Requires a valid fan. Lists every transitive maximal cone in input order.
TransitivityVerdict transitive_cones(const Fan& f);

/// Normalization with respect to one smooth maximal cone: its rays (ascending
/// original index) become -e_1..-e_n and come first; the rest keep input order.
TransitivityVerdict normalize_at(const Fan& f, std::size_t cone_index);

struct DemazureRoot {
  LatticeVector m;
  std::size_t ray_index = 0;

  friend bool operator==(const DemazureRoot&, const DemazureRoot&) = default;
};

bool is_demazure_root(const Fan& f, const DemazureRoot& root);

/// All Demazure roots, grouped by ray index and sorted. Requires a complete fan.
std::vector<DemazureRoot> demazure_roots(const Fan& f);

/// On a normalized fan, every root of a ray outside <-e_1..-e_n> is some -e_i.
bool roots_outside_sigma_check(const TransitivityVerdict& verdict,
                               const std::vector<DemazureRoot>& roots);

/// Column classes of the grading matrix: I_sets[j] holds the rays whose degree
/// is the j-th basis class, I the first-n rays outside every I_sets[j].
struct RayIndexPartition {
  std::vector<std::vector<std::size_t>> I_sets;
  std::vector<std::size_t> I;
};
RayIndexPartition ray_index_partition(const CoxPresentation& cp);

/// Roots e_i - e_k predicted for rays -e_i with i in I: one for every k in
/// I_j among the first n indices, whenever ray n+j has i-th coordinate >= 1.
std::vector<DemazureRoot> predicted_root_family(const CoxPresentation& cp);

struct CapsuleResult {
  LatticeVector vertex;
  std::vector<RationalVector> edge_endpoints;
  RationalVector reflection;
  std::vector<RationalVector> capsule_vertices;
  bool contains_polytope = false;
  /// Only planar verdicts are certified; in higher rank the fan criterion decides.
  bool certified = false;
};

/// Convex capsule at a smooth vertex: the vertex, the far ends p_1..p_n of
/// its edges and the point reflection r = sum p_i - (n - 1) p.
CapsuleResult vertex_capsule(const LatticePolytope& p, const LatticeVector& vertex);

/// Exact convex-hull membership by LP feasibility.
bool hull_contains(const std::vector<RationalVector>& points, const RationalVector& q);

/// All unimodular maps permuting the rays and the maximal cones, sorted.
std::vector<IntegerMatrix> fan_symmetries(const Fan& f);

struct P1PowerIdentification {
  std::size_t n = 0;
  std::size_t cone_a = 0;
  std::size_t cone_b = 0;
  /// (ray of cone_a, antipodal ray of cone_b)
  std::vector<std::pair<std::size_t, std::size_t>> pairing;
};

/// Two transitive cones with disjoint rays force the fan of (P^1)^n.
std::optional<P1PowerIdentification> detect_p1_power(const Fan& f);

}  // namespace toric
