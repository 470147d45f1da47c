#pragma once

// Coordinate-hyperplane degenerations of standard-form polytopes and a
// recursive search for toric non-speciality certificates.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "toric/linsys.hpp"

namespace toric {

/// Full-dimensional, inside the first orthant, origin a smooth transitive
/// vertex whose edges run along the coordinate axes.
struct StandardFormCheck {
  bool ok = false;
  std::string reason;
};
StandardFormCheck check_standard_form(const LatticePolytope& p);

/// Axis is 0-based. Points mults[0..s) go to the minus side, the rest to the plus side.
struct SplitSpec {
  std::size_t axis = 0;
  long level = 1;
  std::size_t s = 0;

  friend bool operator==(const SplitSpec&, const SplitSpec&) = default;
};

/// The four slabs {m_i <= c-1}, {m_i <= c}, {m_i >= c-1}, {m_i >= c} of P, untranslated.
struct SlabPieces {
  LatticePolytope minus_cm1;
  LatticePolytope minus_c;
  LatticePolytope plus_cm1;
  LatticePolytope plus_c;
};
SlabPieces split_polytope(const LatticePolytope& p, std::size_t axis, long c);

/// {m >= 0 : m_axis >= c, sum_{j != axis} m_j + (m_axis - c) <= mu - 1}, lexicographic.
std::vector<LatticeVector> delta_c_mu(std::size_t n, std::size_t axis, long c, long mu);

struct ChildSummary {
  long tvdim = 0;
  bool toric_non_special = false;
};

struct HypothesisTranscript {
  bool passed = false;
  bool children_non_special = false;
  long tvdim_minus = 0;
  long tvdim_plus = 0;
  /// (tvdim+ + 1)(tvdim- + 1) >= 0
  bool product_ok = false;
  /// Delta(c, mu_i) inside P+_c for the minus-side points
  bool minus_points_ok = false;
  /// Delta(0, mu_i) inside P-_{c-1} for the plus-side points
  bool plus_points_ok = false;
  /// first failing condition, empty on success
  std::string witness;

  friend bool operator==(const HypothesisTranscript&, const HypothesisTranscript&) = default;
};

HypothesisTranscript check_hypotheses(const LatticePolytope& p, const SplitSpec& split,
                                      const std::vector<long>& mults, const ChildSummary& minus,
                                      const ChildSummary& plus);

struct Certificate {
  enum class Kind { Leaf, Split };
  Kind kind = Kind::Leaf;
  /// as analyzed; plus children are translated so that c e_i becomes the origin
  LatticePolytope polytope;
  std::vector<long> multiplicities;
  long h0 = 0;
  long tvdim = 0;
  long tedim = 0;
  std::optional<SpecialityReport> report;
  std::optional<SplitSpec> split;
  HypothesisTranscript transcript;
  std::shared_ptr<const Certificate> minus;
  std::shared_ptr<const Certificate> plus;
};

struct CertifyOptions {
  std::size_t max_depth = 3;
  RankConfig rank;
};

struct CertifyResult {
  bool certified = false;
  std::optional<Certificate> certificate;
  std::string reason;
  std::size_t nodes_explored = 0;
};

/// Semi-decision: a certificate proves toric non-speciality, its absence proves nothing.
CertifyResult certify(const LatticePolytope& p, const std::vector<long>& mults, const CertifyOptions& opts);

struct VerifyResult {
  bool ok = false;
  std::string failure;
};

/// Recomputes every piece, transcript and leaf rank (with cfg's seed).
VerifyResult verify_certificate(const Certificate& cert, const RankConfig& cfg);

/// Child polytopes as certify stores them; the plus child is shifted by -c e_i.
LatticePolytope plus_child_polytope(const LatticePolytope& p, const SplitSpec& split);
LatticePolytope minus_child_polytope(const LatticePolytope& p, const SplitSpec& split);

}  // namespace toric
