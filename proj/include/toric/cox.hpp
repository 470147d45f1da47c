#pragma once

// Cox presentation of a normalized quasi-transitive fan: grading matrices,
// standard-form divisors, section polytopes and root automorphisms.

#include <vector>

#include "toric/fan_analysis.hpp"
#include "toric/polytope.hpp"

namespace toric {

struct CoxPresentation {
  std::size_t n = 0;
  std::size_t r = 0;
  /// normalized fan: rays 0..n-1 are -e_1..-e_n
  Fan fan;
  /// n x r, [-Id | P0]
  IntegerMatrix P;
  /// (r-n) x r, [P0^t | Id]
  IntegerMatrix Q;
  std::vector<std::size_t> ray_order;

  std::size_t class_rank() const { return r - n; }
};

/// Throws unless the verdict carries a normalized fan.
CoxPresentation build_presentation(const TransitivityVerdict& verdict);

/// For a fan that is already normalized (rays 0..n-1 equal to -e_i).
CoxPresentation build_presentation(const Fan& normalized);

struct TDivisor {
  std::vector<Integer> coeffs;
};

/// Coefficients d_{n+1}..d_r; the first n are zero.
struct StandardFormDivisor {
  std::vector<Integer> coeffs;

  friend bool operator==(const StandardFormDivisor&, const StandardFormDivisor&) = default;
};

/// Class of a divisor in the basis [D_{n+1}], ..., [D_r]: Q d.
std::vector<Integer> divisor_class(const CoxPresentation& cp, const TDivisor& d);

StandardFormDivisor to_standard_form(const CoxPresentation& cp, const TDivisor& d);

/// div(chi^e) = sum <e, rho_i> D_i.
TDivisor principal_divisor(const Fan& f, const LatticeVector& e);

TDivisor padded(const CoxPresentation& cp, const StandardFormDivisor& d);

struct SectionPolytope {
  LatticePolytope polytope;
  std::vector<LatticeVector> points;
  std::size_t h0 = 0;
};

/// {m : m_i >= 0 for i < n, <m, rho_j> <= d_j for j >= n}.
SectionPolytope section_polytope(const CoxPresentation& cp, const StandardFormDivisor& d);

/// {m : <m, rho_i> <= d_i for every ray}; works for any T-divisor on any fan
/// and agrees with the section polytope up to translation.
LatticePolytope sections_of(const Fan& f, const TDivisor& d);

/// Primitive collections: minimal ray sets that span no cone of the fan.
std::vector<std::vector<std::size_t>> irrelevant_generators(const Fan& f);

struct CoxAutomorphismStep {
  DemazureRoot root;
  Rational t;
};

/// x_i -> x_i + t prod_{j != i} x_j^<m, rho_j>, i the root's ray. Throws "invalid root".
RationalVector apply_root_step(const Fan& f, const RationalVector& point, const CoxAutomorphismStep& step);

struct TorusMove {
  std::vector<CoxAutomorphismStep> steps;
  RationalVector image;
};

/// Moves a point with all coordinates nonzero onto the fixed point of
/// <-e_1, ..., -e_n> with roots e_1, ..., e_n. Throws "not a torus point".
TorusMove move_torus_point_to_invariant(const CoxPresentation& cp, const RationalVector& p);

Rational power(const Rational& x, unsigned long e);

}  // namespace toric
