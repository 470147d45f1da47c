#include <doctest.h>

#include <algorithm>
#include <set>

#include "toric/catalog.hpp"
#include "toric/degeneration.hpp"
#include "toric/json_io.hpp"

using namespace toric;

namespace {

std::size_t count(const LatticePolytope& p) { return p.empty() ? 0 : lattice_points(p).size(); }

LatticePolytope trapezoid(long n) { return LatticePolytope(2, {{{-1, 0}, 0}, {{0, -1}, 0}, {{1, 1}, n}, {{0, 1}, 1}}); }

RankConfig cfg(std::uint64_t seed = 1) {
  RankConfig c;
  c.seed = seed;
  return c;
}

CertifyOptions opts(std::uint64_t seed = 1) {
  CertifyOptions o;
  o.rank = cfg(seed);
  return o;
}

}  // namespace

TEST_CASE("standard form detection") {
  CHECK(check_standard_form(catalog::box({2, 1})).ok);
  CHECK(check_standard_form(trapezoid(2)).ok);
  // the bottom corners of this one are not transitive
  CHECK_FALSE(check_standard_form(catalog::f1_trapezoid()).ok);
  CHECK(check_standard_form(catalog::simplex(3, 2)).ok);
  CHECK_FALSE(check_standard_form(catalog::box({2, 1}).translated({1, 0})).ok);
  CHECK_FALSE(check_standard_form(catalog::hexagon()).ok);
  LatticePolytope flat(2, {{{-1, 0}, 0}, {{0, -1}, 0}, {{1, 0}, 2}, {{0, 1}, 0}});
  CHECK_FALSE(check_standard_form(flat).ok);
  // origin is a vertex but the edge runs along (1,2)
  LatticePolytope skew(2, {{{-1, 0}, 0}, {{2, -1}, 0}, {{0, 1}, 4}});
  CHECK_FALSE(check_standard_form(skew).ok);
}

TEST_CASE("slabs") {
  auto s = split_polytope(catalog::box({2, 1}), 0, 1);
  CHECK(count(s.minus_cm1) == 2);
  CHECK(count(s.plus_c) == 4);

  s = split_polytope(trapezoid(3), 0, 2);
  CHECK(count(s.minus_cm1) == 4);
  CHECK(count(s.plus_c) == 3);

  s = split_polytope(catalog::box({2, 1}), 0, 2);
  CHECK(count(s.minus_c) == count(catalog::box({2, 1})));
  CHECK(affine_dimension(s.plus_c.vertices()) == 1);

  std::vector<LatticePolytope> ps{catalog::box({3, 2}), trapezoid(4), catalog::simplex(2, 4), catalog::simplex(3, 3),
                                  catalog::box({2, 2, 1})};
  for (const auto& p : ps)
    for (std::size_t axis = 0; axis < p.dim(); ++axis) {
      auto box = *bounding_box(p);
      for (long c = 1; c <= box.hi[axis]; ++c) {
        auto sp = split_polytope(p, axis, c);
        auto lo = lattice_points(sp.minus_cm1), hi = lattice_points(sp.plus_c);
        std::set<std::string> a, b;
        for (const auto& v : lo) a.insert(v.to_string());
        for (const auto& v : hi) b.insert(v.to_string());
        for (const auto& v : b) CHECK(a.count(v) == 0);
        CHECK(a.size() + b.size() == count(p));
        std::size_t slab = 0;
        for (const auto& m : lattice_points(p))
          if (m[axis] == c - 1) ++slab;
        CHECK(count(sp.minus_cm1) + count(sp.plus_cm1) == count(p) + slab);
        CHECK(count(plus_child_polytope(p, {axis, c, 0})) == count(sp.plus_c));
        CHECK(count(minus_child_polytope(p, {axis, c, 0})) == count(sp.minus_cm1));
      }
    }
}

TEST_CASE("anchored simplices") {
  CHECK(delta_c_mu(2, 0, 1, 1) == std::vector<LatticeVector>{{1, 0}});
  CHECK(delta_c_mu(2, 0, 0, 2) == std::vector<LatticeVector>{{0, 0}, {0, 1}, {1, 0}});
  CHECK(delta_c_mu(2, 0, 2, 2) == std::vector<LatticeVector>{{2, 0}, {2, 1}, {3, 0}});
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::size_t axis = 0; axis < n; ++axis)
      for (long c = 0; c <= 3; ++c)
        for (long mu = 1; mu <= 3; ++mu) {
          auto base = delta_c_mu(n, axis, 0, mu), moved = delta_c_mu(n, axis, c, mu);
          REQUIRE(base.size() == moved.size());
          for (std::size_t k = 0; k < base.size(); ++k)
            CHECK(moved[k] == base[k] + LatticeVector::unit(n, axis, c));
        }
}

TEST_CASE("hypothesis checks") {
  auto box = catalog::box({2, 1});
  auto t = check_hypotheses(box, {0, 1, 1}, {1, 1}, {0, true}, {2, true});
  CHECK(t.passed);
  CHECK(t.product_ok);
  CHECK(t.minus_points_ok);
  CHECK(t.plus_points_ok);
  CHECK(t.witness.empty());

  t = check_hypotheses(box, {0, 3, 1}, {1, 1}, {0, true}, {-1, true});
  CHECK_FALSE(t.passed);
  CHECK_FALSE(t.minus_points_ok);
  CHECK_FALSE(t.witness.empty());

  t = check_hypotheses(box, {0, 1, 1}, {1, 1}, {-3, true}, {1, true});
  CHECK_FALSE(t.passed);
  CHECK_FALSE(t.product_ok);

  t = check_hypotheses(box, {0, 1, 1}, {1, 1}, {0, false}, {2, true});
  CHECK_FALSE(t.passed);
  CHECK_FALSE(t.children_non_special);

  // a double point on the plus side needs the whole order-1 simplex in the minus slab
  t = check_hypotheses(box, {0, 1, 0}, {2}, {1, true}, {1, true});
  CHECK_FALSE(t.plus_points_ok);
}

TEST_CASE("certify and verify") {
  auto r = certify(catalog::box({2, 1}), {}, opts());
  REQUIRE(r.certified);
  CHECK(r.certificate->kind == Certificate::Kind::Leaf);
  CHECK(r.certificate->report->dim == 5);

  r = certify(catalog::box({2, 1}), {1, 1}, opts());
  REQUIRE(r.certified);
  const Certificate& c = *r.certificate;
  REQUIRE(c.kind == Certificate::Kind::Split);
  CHECK(*c.split == SplitSpec{0, 1, 1});
  CHECK(c.transcript.tvdim_minus == 0);
  CHECK(c.transcript.tvdim_plus == 2);
  CHECK(c.tedim == 3);
  CHECK(analyze(LinearSystem::on_polytope(catalog::box({2, 1}), {1, 1}), cfg()).dim == 3);
  CHECK(verify_certificate(c, cfg(77)).ok);

  r = certify(trapezoid(2), {2}, opts());
  REQUIRE(r.certified);
  CHECK(r.certificate->tedim == 1);
  CHECK(verify_certificate(*r.certificate, cfg(5)).ok);

  CHECK_THROWS(certify(catalog::hexagon(), {1}, opts()));

  // four double points on the quartic simplex is special, so nothing closes
  r = certify(catalog::simplex(2, 4), {2, 2, 2, 2, 2}, opts());
  CHECK_FALSE(r.certified);
  CHECK_FALSE(r.reason.empty());
}

TEST_CASE("tampered certificates are rejected") {
  auto r = certify(catalog::box({2, 1}), {1, 1}, opts());
  REQUIRE(r.certified);
  const io::Json good = io::certificate_to_json(*r.certificate);
  REQUIRE(verify_certificate(io::certificate_from_json(good), cfg(3)).ok);

  auto rejected = [](io::Json j) { return !verify_certificate(io::certificate_from_json(j), cfg(3)).ok; };
  io::Json j = good;
  j["tvdim"] = j["tvdim"].get<long>() + 1;
  CHECK(rejected(j));
  j = good;
  j["transcript"]["tvdim_plus"] = 7;
  CHECK(rejected(j));
  j = good;
  j["split"]["level"] = 2;
  CHECK(rejected(j));
  j = good;
  j["multiplicities"] = io::Json::array({2, 1});
  CHECK(rejected(j));
  j = good;
  j["plus"]["report"]["dim"] = 4;
  CHECK(rejected(j));
  j = good;
  std::swap(j["minus"], j["plus"]);
  CHECK(rejected(j));

  // a leaf claiming a special system is non-special
  Certificate bad;
  bad.polytope = catalog::simplex(2, 2);
  bad.multiplicities = {2, 2};
  bad.report = analyze(LinearSystem::on_polytope(bad.polytope, bad.multiplicities), cfg());
  bad.h0 = 6;
  bad.tvdim = bad.tedim = -1;
  bad.report->tedim = bad.report->dim;
  CHECK_FALSE(verify_certificate(bad, cfg(3)).ok);
}

TEST_CASE("certificates are sound and stable") {
  std::vector<std::pair<LatticePolytope, std::vector<long>>> systems;
  for (long a = 1; a <= 3; ++a)
    for (long b = 1; b <= 2; ++b) {
      systems.push_back({catalog::box({a, b}), {2, 1}});
      systems.push_back({catalog::box({a, b}), {1, 1, 1}});
    }
  for (long d = 2; d <= 4; ++d) {
    systems.push_back({catalog::simplex(2, d), {2, 1}});
    systems.push_back({catalog::simplex(2, d), {2, 2}});
    systems.push_back({catalog::simplex(2, d), {1, 1, 1, 1}});
  }
  for (long n = 2; n <= 4; ++n) {
    systems.push_back({trapezoid(n), {2}});
    systems.push_back({trapezoid(n), {2, 1, 1}});
  }
  systems.push_back({catalog::box({1, 1, 1}), {2}});
  systems.push_back({catalog::simplex(3, 2), {2, 1}});
  systems.push_back({catalog::box({2, 1, 1}), {1, 1, 1}});
  CHECK(systems.size() >= 30);

  std::size_t certified = 0;
  for (std::size_t i = 0; i < systems.size(); ++i) {
    const auto& [p, mults] = systems[i];
    auto r = certify(p, mults, opts(i + 1));
    if (!r.certified) continue;
    ++certified;
    CHECK(verify_certificate(*r.certificate, cfg(i + 1000)).ok);
    auto rep = analyze(LinearSystem::on_polytope(p, mults), cfg(i + 2000));
    CHECK(rep.dim == rep.tedim);

    auto rev = mults;
    std::reverse(rev.begin(), rev.end());
    auto r2 = certify(p, rev, opts(i + 1));
    REQUIRE(r2.certified);
    CHECK(io::certificate_to_json(*r2.certificate) == io::certificate_to_json(*r.certificate));
  }
  CHECK(certified >= 20);
}
