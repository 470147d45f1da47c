#include <doctest.h>

#include "oracles.hpp"
#include "toric/catalog.hpp"
#include "toric/lp.hpp"

using namespace toric;

TEST_CASE("primitivize") {
  CHECK(primitivize({2, 4}) == LatticeVector{1, 2});
  CHECK(primitivize({-1, 0}) == LatticeVector{-1, 0});
  CHECK(primitivize({6, -9, 3}) == LatticeVector{2, -3, 1});
  CHECK_THROWS_WITH(primitivize({0, 0}), "zero ray");
  LatticeVector v{12, 18, -30};
  CHECK(primitivize(primitivize(v)) == primitivize(v));
}

TEST_CASE("determinant, rank, inverse, kernel") {
  IntegerMatrix a = columns_matrix(std::vector<LatticeVector>{{2, 1, 0}, {1, 3, 1}, {0, 1, 4}});
  CHECK(determinant(a) == 18);
  CHECK(rank(a) == 3);
  RationalMatrix inv = inverse(to_rational(a));
  CHECK(to_rational(a) * inv == RationalMatrix::identity(3));
  IntegerMatrix b = rows_matrix(std::vector<LatticeVector>{{1, 2, 3}, {2, 4, 6}});
  CHECK(rank(b) == 1);
  auto ker = kernel_basis(b);
  REQUIRE(ker.size() == 2);
  for (const auto& k : ker) CHECK(apply(b, k).is_zero());
  CHECK_THROWS(inverse(to_rational(b.transpose() * b)));
}

TEST_CASE("exact LP") {
  // maximize x + y with x <= 3/2, y <= 2, x + y <= 3
  lp::Problem p;
  p.num_vars = 2;
  p.A = RationalMatrix(3, 2);
  p.A(0, 0) = 1;
  p.A(1, 1) = 1;
  p.A(2, 0) = 1;
  p.A(2, 1) = 1;
  p.b = {Rational(3, 2), Rational(2), Rational(3)};
  p.c = {Rational(1), Rational(1)};
  auto r = lp::maximize(p);
  CHECK(r.status == lp::Status::Optimal);
  CHECK(r.value == 3);
  p.c = {Rational(1), Rational(0)};
  CHECK(lp::maximize(p).value == Rational(3, 2));
  p.c = {Rational(-1), Rational(0)};
  CHECK(lp::maximize(p).status == lp::Status::Unbounded);
  RationalMatrix e(1, 2);
  e(0, 0) = 1;
  CHECK_FALSE(lp::feasible(p.A, p.b, e, {Rational(2)}));
  CHECK(lp::feasible(p.A, p.b, e, {Rational(1)}));
}

TEST_CASE("cone smoothness and membership") {
  CHECK(cone_is_smooth(Cone({{1, 0}, {0, 1}}, 2)));
  CHECK_FALSE(cone_is_smooth(Cone({{1, 0}, {1, 2}}, 2)));
  CHECK(cone_is_smooth(Cone({{0, -1}, {1, 1}}, 2)));
  CHECK_THROWS_WITH(cone_is_smooth(Cone({{1, 0, 0}}, 3)), "not full-dimensional");
  CHECK_THROWS(Cone({{2, 0}, {0, 1}}, 2));
  CHECK_THROWS(Cone({{1, 0}, {-1, 0}}, 2));

  CHECK(cone_contains(Cone({{-1, 0}, {0, -1}}, 2).negated(), {1, 1}));
  CHECK(cone_contains(Cone({{0, -1}, {1, 1}}, 2).negated(), {-1, 0}));
  CHECK_FALSE(cone_contains(Cone({{0, 1}, {-1, 0}}, 2).negated(), {1, 1}));
  CHECK(cone_contains(Cone({{1, 0}, {0, 1}}, 2), {0, 0}));
}

TEST_CASE("unimodular normalization") {
  CHECK(gl_change_of_basis(Cone({{-1, 0}, {0, -1}}, 2)) == IntegerMatrix::identity(2));
  IntegerMatrix neg = IntegerMatrix::identity(2);
  neg(0, 0) = -1;
  neg(1, 1) = -1;
  CHECK(gl_change_of_basis(Cone({{1, 0}, {0, 1}}, 2)) == neg);
  IntegerMatrix a = gl_change_of_basis(Cone({{0, -1}, {1, 1}}, 2));
  CHECK(apply(a, {0, -1}) == LatticeVector{-1, 0});
  CHECK(apply(a, {1, 1}) == LatticeVector{0, -1});
  CHECK(abs(determinant(a)) == 1);
  CHECK_THROWS_WITH(gl_change_of_basis(Cone({{1, 0}, {1, 2}}, 2)), "no unimodular normalization");
}

TEST_CASE("fan validation") {
  Fan p2 = Fan::make(2, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}, {2, 0}});
  auto r = validate_fan(p2);
  CHECK(r.valid);
  CHECK(r.complete);
  CHECK(r.smooth);

  Fan missing = Fan::make(2, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}});
  r = validate_fan(missing);
  CHECK_FALSE(r.complete);
  CHECK_FALSE(r.valid);

  auto f1 = validate_fan(catalog::hirzebruch(1));
  CHECK(f1.valid);
  CHECK(f1.smooth);

  // two cones overlapping: every facet paired but interiors meet
  Fan overlap = Fan::make(2, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}, {1, 1}},
                          {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 1}});
  CHECK_FALSE(validate_fan(overlap).valid);

  Fan singular = Fan::make(2, {{1, 0}, {1, 2}, {-1, -1}}, {{0, 1}, {1, 2}, {2, 0}});
  r = validate_fan(singular);
  CHECK(r.valid);
  CHECK_FALSE(r.smooth);

  for (const char* ex : {"pn:3", "p1n:3", "hirzebruch:3", "bl3p2"}) CHECK(validate_fan(catalog::parse_example(ex).fan).valid);
}

TEST_CASE("point location covers the plane once") {
  Fan f = catalog::hirzebruch(2);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> d(-1000, 1000);
  for (int i = 0; i < 1000; ++i) {
    LatticeVector v{d(rng), d(rng)};
    Location loc = locate(f, v);
    if (loc.on_boundary) continue;
    CHECK(loc.interior.size() == 1);
  }
}

TEST_CASE("lattice points") {
  CHECK(lattice_points(catalog::simplex(2, 1)) == std::vector<LatticeVector>{{0, 0}, {0, 1}, {1, 0}});
  LatticePolytope trap(2, {{{-1, 0}, 0}, {{0, -1}, 0}, {{1, 1}, 2}, {{0, 1}, 1}});
  CHECK(lattice_points(trap).size() == 5);
  CHECK(lattice_points(catalog::box(std::vector<long>(7, 1))).size() == 128);
  LatticePolytope half(2, {{{-1, 0}, 0}});
  CHECK_THROWS_WITH(lattice_points(half), "unbounded polyhedron");
  LatticePolytope empty(1, {{{1}, -1}, {{-1}, -1}});
  CHECK(lattice_points(empty).empty());

  // dilates against a brute-force scan
  LatticePolytope tri(2, {{{-1, 0}, 0}, {{1, -2}, 0}, {{1, 1}, 3}});
  for (long t = 1; t <= 3; ++t) {
    auto p = tri.dilated(t);
    CHECK(lattice_points(p).size() == oracle::points_in_cube(p.inequalities(), 2, 12).size());
  }
}

TEST_CASE("vertices, facets, edges, normal fan") {
  LatticePolytope trap = catalog::f1_trapezoid();
  CHECK(trap.vertices().size() == 4);
  CHECK(trap.full_dimensional());
  CHECK(facet_indices(trap).size() == 4);
  VertexEdges e = edges_at(trap, {Rational(0), Rational(1)});
  CHECK(e.directions.size() == 2);
  CHECK(is_smooth_vertex(trap, {Rational(0), Rational(0)}));
  NormalFan nf = normal_fan(trap);
  CHECK(nf.fan.rays.size() == 4);
  CHECK(validate_fan(nf.fan).valid);

  // a square with a redundant inequality
  LatticePolytope sq(2, {{{1, 0}, 1}, {{0, 1}, 1}, {{-1, 0}, 0}, {{0, -1}, 0}, {{1, 1}, 5}, {{2, 0}, 2}});
  CHECK(facet_indices(sq).size() == 4);
  CHECK(normal_fan(sq).fan.rays.size() == 4);

  // octahedron vertices are not simple
  std::vector<Inequality> oct;
  for (long a : {-1, 1})
    for (long b : {-1, 1})
      for (long c : {-1, 1}) oct.push_back({{a, b, c}, 1});
  CHECK_THROWS(normal_fan(LatticePolytope(3, oct)));
}

TEST_CASE("fan transforms keep verdicts") {
  Fan f = catalog::hirzebruch(1);
  IntegerMatrix a = gl_change_of_basis(f.cone(1));
  Fan g = transform(f, a);
  CHECK(validate_fan(g).valid == validate_fan(f).valid);
  CHECK(validate_fan(g).smooth == validate_fan(f).smooth);
  Fan h = reorder_rays(f, {3, 2, 1, 0});
  CHECK(h.rays[0] == f.rays[3]);
  CHECK(validate_fan(h).valid);
}
