#pragma once

// Built-in examples: pn:<n>, p1n:<n>, hirzebruch:<a>, bl3p2, box:<a1>x<a2>x...

#include <optional>
#include <string>
#include <vector>

#include "toric/fan.hpp"
#include "toric/polytope.hpp"

namespace toric::catalog {

Fan projective_space(std::size_t n);
/// rays -e_1..-e_n, then e_1..e_n
Fan p1_power(std::size_t n);
/// rays (-1,0), (0,-1), (1,a), (0,1)
Fan hirzebruch(long a);
/// the hexagon fan: rays (1,0), (1,1), (0,1), (-1,0), (-1,-1), (0,-1)
Fan blowup_p2_three_points();

LatticePolytope box(const std::vector<long>& sides);
LatticePolytope hexagon();
/// conv{(0,0), (1,0), (2,1), (0,1)}
LatticePolytope f1_trapezoid();
/// standard simplex scaled by d
LatticePolytope simplex(std::size_t n, long d);

struct Entry {
  std::string name;
  Fan fan;
  std::optional<LatticePolytope> polytope;
  /// standard-form class the example implies, if any (boxes)
  std::optional<std::vector<Integer>> default_class;
};

/// Throws InputError on an unknown or malformed example string.
Entry parse_example(const std::string& spec);

}  // namespace toric::catalog
