#pragma once

// Simplicial cones and fans in N, with exact membership and validation.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "toric/lattice.hpp"

namespace toric {

/// A simplicial pointed cone spanned by primitive, linearly independent rays.
class Cone {
 public:
  /// Throws on zero, non-primitive or dependent rays.
  Cone(std::vector<LatticeVector> rays, std::size_t ambient_rank);

  const std::vector<LatticeVector>& rays() const { return rays_; }
  std::size_t ambient_rank() const { return ambient_rank_; }
  std::size_t dim() const { return rays_.size(); }
  bool full_dimensional() const { return rays_.size() == ambient_rank_; }

  /// The cone spanned by the negated rays.
  Cone negated() const;

 private:
  std::vector<LatticeVector> rays_;
  std::size_t ambient_rank_;
};

/// True iff the ray matrix has determinant +-1. Throws "not full-dimensional"
/// unless the cone has exactly ambient_rank rays.
bool cone_is_smooth(const Cone& c);

/// True iff v is a nonnegative rational combination of the rays.
bool cone_contains(const Cone& c, const LatticeVector& v);

/// Unimodular A with A * ray_i = -e_i for the cone's ray order.
IntegerMatrix gl_change_of_basis(const Cone& src);

/// Rays plus maximal cones given as index sets into the ray list.
struct Fan {
  std::size_t rank = 0;
  std::vector<LatticeVector> rays;
  std::vector<std::vector<std::size_t>> max_cones;

  /// Primitivizes rays and checks index ranges; deeper invariants live in validate_fan.
  static Fan make(std::size_t rank, std::vector<LatticeVector> rays,
                  std::vector<std::vector<std::size_t>> max_cones);

  Cone cone(std::size_t k) const;
  std::vector<LatticeVector> cone_rays(std::size_t k) const;

  friend bool operator==(const Fan&, const Fan&) = default;
};

struct ValidationReport {
  bool valid = false;
  bool simplicial = false;
  bool complete = false;
  bool smooth = false;
  std::vector<bool> smooth_cones;
  /// First violated invariant; empty when valid.
  std::string error;
  std::size_t samples_checked = 0;
};

struct ValidationOptions {
  std::uint64_t seed = 1;
  std::size_t samples = 200;
};

ValidationReport validate_fan(const Fan& f, const ValidationOptions& opts = {});

/// Throws InputError carrying the first violated invariant when the fan is invalid.
void require_valid(const Fan& f);

/// Maximal cones containing v: those with v in the interior, and a flag for
/// hitting a boundary (some barycentric coordinate exactly zero).
struct Location {
  std::vector<std::size_t> interior;
  bool on_boundary = false;
};
Location locate(const Fan& f, const LatticeVector& v);

/// Applies a linear map to every ray (cone index sets unchanged).
Fan transform(const Fan& f, const IntegerMatrix& a);

/// New fan whose k-th ray is the old ray order[k]; order must be a permutation.
Fan reorder_rays(const Fan& f, const std::vector<std::size_t>& order);

}  // namespace toric
