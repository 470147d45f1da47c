#pragma once

// Multipoint linear systems: interpolation matrices, generic rank by random
// specialization, and the dimension / expected dimension bookkeeping.

#include <cstdint>
#include <string>
#include <vector>

#include "toric/cox.hpp"
#include "toric/modp.hpp"

namespace toric {

struct LinearSystem {
  std::size_t n = 0;
  LatticePolytope polytope;
  /// lattice points of the polytope, lexicographic; column order of the matrix
  std::vector<LatticeVector> monomials;
  /// all >= 1; zeros are dropped on construction
  std::vector<long> multiplicities;

  static LinearSystem from_divisor(const CoxPresentation& cp, const StandardFormDivisor& d,
                                   const std::vector<long>& mults);
  /// Any polytope in the first orthant. Throws on points with a negative coordinate.
  static LinearSystem on_polytope(const LatticePolytope& p, const std::vector<long>& mults);

  std::size_t h0() const { return monomials.size(); }
};

/// Orders u >= 0 with |u| <= mu - 1, lexicographic.
std::vector<std::vector<long>> derivative_orders(std::size_t n, long mu);

Integer binomial(long n, long k);

/// Rows: for each point i and each order u of multiplicity mu_i, the u-th
/// derivative of every monomial at that point.
RationalMatrix build_matrix(const LinearSystem& L, const std::vector<RationalVector>& points);
modp::Matrix build_matrix(const LinearSystem& L, const std::vector<std::vector<std::uint64_t>>& points,
                          std::uint64_t p);

struct RankConfig {
  unsigned prime_bits = 61;
  std::size_t trials = 5;
  std::uint64_t seed = 1;
  /// integer points and rank over Q instead of prime fields
  bool exact = false;
};

struct TrialEvidence {
  /// 0 in exact mode
  std::uint64_t prime = 0;
  std::uint64_t seed = 0;
  std::size_t rank = 0;
};

struct RankResult {
  std::size_t rank = 0;
  std::vector<TrialEvidence> evidence;
  /// degree bound for a maximal nonzero minor: rank * max |m|
  std::uint64_t minor_degree = 0;
  /// probability that every trial undershoots the generic rank, assuming the
  /// generic minor survives reduction mod p
  double failure_bound = 0;
};

RankResult generic_rank(const LinearSystem& L, const RankConfig& cfg);

/// Number of derivative orders of each multiplicity that lie in the polytope.
std::vector<std::size_t> toric_truncation(const LinearSystem& L);

struct SpecialityReport {
  std::size_t n = 0;
  std::vector<long> multiplicities;
  long h0 = 0;
  long rank = 0;
  long dim = 0;
  long vdim = 0;
  long edim = 0;
  long tvdim = 0;
  long tedim = 0;
  bool special = false;
  bool toric_special = false;
  std::vector<std::size_t> truncation;
  std::vector<TrialEvidence> samples;
  double failure_bound = 0;
  RankConfig config;
};

/// Throws GenericityError when dim >= tedim >= edim fails.
SpecialityReport analyze(const LinearSystem& L, const RankConfig& cfg);

void check_inequality_chain(const SpecialityReport& r);

}  // namespace toric
