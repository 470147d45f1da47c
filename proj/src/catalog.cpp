#include "toric/catalog.hpp"

#include <charconv>

#include "toric/error.hpp"

namespace toric::catalog {

Fan projective_space(std::size_t n) {
  std::vector<LatticeVector> rays;
  for (std::size_t i = 0; i < n; ++i) rays.push_back(-LatticeVector::unit(n, i));
  LatticeVector sum(n);
  for (std::size_t i = 0; i < n; ++i) sum[i] = 1;
  rays.push_back(sum);
  std::vector<std::vector<std::size_t>> cones;
  for (std::size_t skip = n + 1; skip-- > 0;) {
    std::vector<std::size_t> c;
    for (std::size_t i = 0; i <= n; ++i)
      if (i != skip) c.push_back(i);
    cones.push_back(std::move(c));
  }
  return Fan::make(n, std::move(rays), std::move(cones));
}

Fan p1_power(std::size_t n) {
  if (n > 20) throw InputError("p1n: n too large", "example");
  std::vector<LatticeVector> rays;
  for (std::size_t i = 0; i < n; ++i) rays.push_back(-LatticeVector::unit(n, i));
  for (std::size_t i = 0; i < n; ++i) rays.push_back(LatticeVector::unit(n, i));
  std::vector<std::vector<std::size_t>> cones;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> c;
    for (std::size_t i = 0; i < n; ++i) c.push_back((mask >> i) & 1 ? n + i : i);
    cones.push_back(std::move(c));
  }
  return Fan::make(n, std::move(rays), std::move(cones));
}

Fan hirzebruch(long a) {
  return Fan::make(2, {{-1, 0}, {0, -1}, {1, a}, {0, 1}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
}

Fan blowup_p2_three_points() {
  return Fan::make(2, {{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}},
                   {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
}

LatticePolytope box(const std::vector<long>& sides) {
  const std::size_t n = sides.size();
  std::vector<Inequality> q;
  for (std::size_t i = 0; i < n; ++i) {
    q.push_back({-LatticeVector::unit(n, i), Integer(0)});
    q.push_back({LatticeVector::unit(n, i), Integer(sides[i])});
  }
  return LatticePolytope(n, std::move(q));
}

LatticePolytope hexagon() {
  return LatticePolytope(2, {{{1, 0}, 1}, {{-1, 0}, 1}, {{0, 1}, 1}, {{0, -1}, 1}, {{1, -1}, 1}, {{-1, 1}, 1}});
}

LatticePolytope f1_trapezoid() {
  return LatticePolytope(2, {{{-1, 0}, 0}, {{0, -1}, 0}, {{0, 1}, 1}, {{1, -1}, 1}});
}

LatticePolytope simplex(std::size_t n, long d) {
  std::vector<Inequality> q;
  LatticeVector sum(n);
  for (std::size_t i = 0; i < n; ++i) {
    q.push_back({-LatticeVector::unit(n, i), Integer(0)});
    sum[i] = 1;
  }
  q.push_back({sum, Integer(d)});
  return LatticePolytope(n, std::move(q));
}

namespace {

long parse_long(const std::string& s, const std::string& spec) {
  long v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty())
    throw InputError("bad number '" + s + "' in example '" + spec + "'", "example");
  return v;
}

}  // namespace

Entry parse_example(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  Entry e;
  e.name = spec;
  if (kind == "pn" || kind == "p1n") {
    long n = parse_long(arg, spec);
    if (n < 1 || n > 12) throw InputError("dimension out of range in '" + spec + "'", "example");
    e.fan = kind == "pn" ? projective_space(static_cast<std::size_t>(n)) : p1_power(static_cast<std::size_t>(n));
  } else if (kind == "hirzebruch") {
    long a = parse_long(arg, spec);
    if (a < 0) throw InputError("hirzebruch parameter must be >= 0", "example");
    e.fan = hirzebruch(a);
    if (a == 1) e.polytope = f1_trapezoid();
  } else if (kind == "bl3p2" && colon == std::string::npos) {
    e.fan = blowup_p2_three_points();
    e.polytope = hexagon();
  } else if (kind == "box") {
    std::vector<long> sides;
    std::size_t start = 0;
    for (;;) {
      const auto x = arg.find('x', start);
      sides.push_back(parse_long(arg.substr(start, x == std::string::npos ? std::string::npos : x - start), spec));
      if (x == std::string::npos) break;
      start = x + 1;
    }
    for (long s : sides)
      if (s < 0) throw InputError("box sides must be >= 0", "example");
    e.fan = p1_power(sides.size());
    e.polytope = box(sides);
    std::vector<Integer> cls;
    for (long s : sides) cls.emplace_back(s);
    e.default_class = std::move(cls);
  } else {
    throw InputError("unknown example '" + spec + "'", "example");
  }
  return e;
}

}  // namespace toric::catalog
