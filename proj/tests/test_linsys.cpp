#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "toric/catalog.hpp"
#include "toric/error.hpp"
#include "toric/modp.hpp"

using namespace toric;

namespace {

CoxPresentation presentation(const std::string& example) {
  return build_presentation(transitive_cones(catalog::parse_example(example).fan));
}

LinearSystem on(const std::string& example, std::vector<long> cls, std::vector<long> mults) {
  return LinearSystem::from_divisor(presentation(example), {{cls.begin(), cls.end()}}, mults);
}

RankConfig cfg(std::uint64_t seed = 1) {
  RankConfig c;
  c.seed = seed;
  return c;
}

long factorial(long x) { return x <= 1 ? 1 : x * factorial(x - 1); }

}  // namespace

TEST_CASE("prime fields") {
  CHECK(modp::is_prime(2));
  CHECK(modp::is_prime(2305843009213693951ULL));  // 2^61 - 1
  CHECK_FALSE(modp::is_prime(1));
  CHECK_FALSE(modp::is_prime(3215031751ULL));  // strong pseudoprime to 2, 3, 5, 7
  for (std::uint64_t x = 0; x < 2000; ++x) {
    bool trial = x >= 2;
    for (std::uint64_t d = 2; d * d <= x; ++d)
      if (x % d == 0) trial = false;
    CHECK(modp::is_prime(x) == trial);
  }
  std::mt19937_64 rng(3);
  for (unsigned bits : {8u, 20u, 40u, 61u, 63u}) {
    std::uint64_t p = modp::random_prime(bits, rng);
    CHECK(modp::is_prime(p));
    CHECK((p >> (bits - 1)) == 1);
    std::uint64_t a = rng() % (p - 1) + 1;
    CHECK(modp::mul(a, modp::inv(a, p), p) == 1);
    CHECK(modp::pow(a, p - 1, p) == 1);
  }
  modp::Matrix m(2, 3);
  m(0, 0) = 1, m(0, 1) = 2, m(0, 2) = 3, m(1, 0) = 2, m(1, 1) = 4, m(1, 2) = 6;
  CHECK(modp::rank(m, 101) == 1);
  m(1, 2) = 7;
  CHECK(modp::rank(m, 101) == 2);
}

TEST_CASE("derivative orders") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (long mu = 1; mu <= 5; ++mu) {
      auto o = derivative_orders(n, mu);
      CHECK(o.size() == binomial(static_cast<long>(n) + mu - 1, static_cast<long>(n)));
      CHECK(std::is_sorted(o.begin(), o.end()));
      for (const auto& u : o) {
        long s = 0;
        for (long x : u) {
          CHECK(x >= 0);
          s += x;
        }
        CHECK(s <= mu - 1);
      }
    }
}

TEST_CASE("interpolation matrix entries") {
  auto L = on("pn:2", {1}, {1});
  RationalMatrix m = build_matrix(L, {{Rational(2), Rational(3)}});
  REQUIRE(m.rows() == 1);
  REQUIRE(m.cols() == 3);
  // columns sorted lexicographically: 1, y, x
  CHECK(m(0, 0) == 1);
  CHECK(m(0, 1) == 3);
  CHECK(m(0, 2) == 2);
  CHECK(oracle::rank_q(m) == 1);

  // entry = u! times the Taylor coefficient of x^m at p
  std::mt19937_64 rng(19);
  for (const auto& [ex, cls, mults] : std::vector<std::tuple<std::string, std::vector<long>, std::vector<long>>>{
           {"pn:2", {3}, {3, 2}}, {"hirzebruch:1", {2, 1}, {2}}, {"p1n:3", {2, 1, 1}, {3}}, {"pn:3", {2}, {2, 1}}}) {
    auto L2 = on(ex, cls, mults);
    auto pts = oracle::random_points(mults.size(), L2.n, rng);
    RationalMatrix a = build_matrix(L2, pts);
    std::size_t row = 0;
    for (std::size_t k = 0; k < mults.size(); ++k)
      for (const auto& u : derivative_orders(L2.n, mults[k])) {
        long ufact = 1;
        for (long x : u) ufact *= factorial(x);
        for (std::size_t c = 0; c < L2.monomials.size(); ++c)
          CHECK(a(row, c) == ufact * oracle::taylor_coefficient(L2.monomials[c], u, pts[k]));
        ++row;
      }
    CHECK(row == a.rows());
    CHECK(oracle::rank_q(a) == oracle::conditions_rank(L2.monomials, mults, pts));
  }
  CHECK_THROWS(build_matrix(L, {{Rational(0), Rational(1)}}));
}

TEST_CASE("small classical systems") {
  auto r = analyze(on("pn:2", {1}, {1}), cfg());
  CHECK(r.rank == 1);
  CHECK(r.dim == 1);

  r = analyze(on("pn:2", {2}, {2}), cfg());
  CHECK(r.rank == 3);
  CHECK(r.dim == 2);

  r = analyze(on("hirzebruch:1", {2, 1}, {2}), cfg());
  CHECK(r.h0 == 5);
  CHECK(r.rank == 3);
  CHECK(r.dim == 1);

  r = analyze(on("pn:2", {4}, {2, 2, 2, 2, 2}), cfg());
  CHECK(r.h0 == 15);
  CHECK(r.vdim == -1);
  CHECK(r.rank == 14);
  CHECK(r.dim == 0);
  CHECK(r.edim == -1);
  CHECK(r.tedim == -1);
  CHECK(r.special);
  CHECK(r.toric_special);

  r = analyze(on("pn:2", {2}, {2, 2}), cfg());
  CHECK(r.rank == 5);
  CHECK(r.dim == 0);
  CHECK(r.special);

  r = analyze(on("pn:2", {1}, {2}), cfg());
  CHECK(r.dim == -1);
  CHECK_FALSE(r.special);

  r = analyze(on("pn:2", {3}, {}), cfg());
  CHECK(r.rank == 0);
  CHECK(r.dim == 9);

  r = analyze(on("pn:2", {-1}, {1}), cfg());
  CHECK(r.h0 == 0);
  CHECK(r.dim == -1);

  // zero multiplicities are dropped, negative ones rejected
  CHECK(on("pn:2", {2}, {0, 2, 0}).multiplicities == std::vector<long>{2});
  CHECK_THROWS(on("pn:2", {2}, {-1}));
}

TEST_CASE("seven lines, three triple points") {
  auto L = on("p1n:7", std::vector<long>(7, 1), {3, 3, 3});
  CHECK(L.h0() == 128);
  CHECK(toric_truncation(L) == std::vector<std::size_t>{29, 29, 29});
  auto r = analyze(L, cfg());
  CHECK(r.vdim == 128 - 3 * 36 - 1);
  CHECK(r.tedim == 40);
  CHECK(r.rank == 86);
  CHECK(r.dim == 41);
  CHECK(r.toric_special);
  CHECK(r.samples.size() == 5);
  CHECK(r.failure_bound < 1e-12);
}

TEST_CASE("truncation") {
  CHECK(toric_truncation(on("pn:2", {2}, {2})) == std::vector<std::size_t>{3});
  for (long n = 2; n <= 6; ++n) CHECK(toric_truncation(on("hirzebruch:1", {n, 1}, {2})) == std::vector<std::size_t>{3});
  CHECK(toric_truncation(on("pn:2", {1}, {3})) == std::vector<std::size_t>{3});
}

TEST_CASE("generic rank matches an exact rational oracle") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> mu(1, 3), k(1, 4), deg(1, 4);
  int checked = 0;
  for (int i = 0; i < 40; ++i) {
    std::string ex = i % 3 == 0 ? "pn:2" : (i % 3 == 1 ? "hirzebruch:1" : "p1n:2");
    std::vector<long> cls = ex == "pn:2" ? std::vector<long>{deg(rng)} : std::vector<long>{deg(rng), deg(rng)};
    std::vector<long> mults(static_cast<std::size_t>(k(rng)));
    for (auto& m : mults) m = mu(rng);
    auto L = on(ex, cls, mults);
    if (L.h0() > 30) continue;
    auto modular = generic_rank(L, cfg(static_cast<std::uint64_t>(i)));
    RankConfig ex_cfg = cfg(static_cast<std::uint64_t>(i));
    ex_cfg.exact = true;
    auto exact = generic_rank(L, ex_cfg);
    std::size_t orc = oracle::generic_rank_q(L.monomials, L.multiplicities, static_cast<std::uint64_t>(i) + 1000);
    CHECK(modular.rank == orc);
    CHECK(exact.rank == orc);
    ++checked;
  }
  CHECK(checked >= 20);
}

TEST_CASE("reports are reproducible") {
  auto L = on("hirzebruch:1", {4, 2}, {2, 2, 1});
  auto a = analyze(L, cfg(99)), b = analyze(L, cfg(99));
  REQUIRE(a.samples.size() == b.samples.size());
  for (std::size_t i = 0; i < a.samples.size(); ++i) {
    CHECK(a.samples[i].prime == b.samples[i].prime);
    CHECK(a.samples[i].seed == b.samples[i].seed);
  }
  CHECK(a.rank == b.rank);
  auto c = analyze(L, cfg(100));
  CHECK(c.samples[0].prime != a.samples[0].prime);
}

TEST_CASE("report invariants on random systems") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> mu(0, 4), k(0, 5), deg(0, 5);
  for (int i = 0; i < 50; ++i) {
    bool three = i % 2;
    std::string ex = three ? "pn:3" : "pn:2";
    long d = deg(rng);
    std::vector<long> mults(static_cast<std::size_t>(k(rng)));
    for (auto& m : mults) m = mu(rng);
    auto L = on(ex, {d}, mults);
    SpecialityReport r;
    try {
      r = analyze(L, cfg(static_cast<std::uint64_t>(i)));
    } catch (const GenericityError&) {
      FAIL("chain violated");
      continue;
    }
    CHECK(r.dim + r.rank + 1 == r.h0);
    CHECK(r.edim == std::max(r.vdim, -1L));
    CHECK(r.tedim == std::max(r.tvdim, -1L));
    CHECK(r.dim >= r.tedim);
    CHECK(r.tedim >= r.edim);
    CHECK(r.special == (r.dim > r.edim));
    CHECK(r.toric_special == (r.dim > r.tedim));
    long maxmu = L.multiplicities.empty() ? 0 : *std::max_element(L.multiplicities.begin(), L.multiplicities.end());
    if (d >= maxmu - 1) {
      CHECK(r.tvdim == r.vdim);
      CHECK(r.special == r.toric_special);
    }

    // permuting points leaves the report unchanged
    auto shuffled = L.multiplicities;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    auto r2 = analyze(on(ex, {d}, shuffled), cfg(static_cast<std::uint64_t>(i) + 7));
    CHECK(r2.rank == r.rank);
    CHECK(r2.tvdim == r.tvdim);

    // rank grows with an added point and with a raised multiplicity
    auto more = L.multiplicities;
    more.push_back(1);
    CHECK(analyze(on(ex, {d}, more), cfg(static_cast<std::uint64_t>(i) + 13)).rank >= r.rank);
    if (!L.multiplicities.empty()) {
      auto raised = L.multiplicities;
      ++raised[0];
      CHECK(analyze(on(ex, {d}, raised), cfg(static_cast<std::uint64_t>(i) + 17)).rank >= r.rank);
    }
  }
}

TEST_CASE("the F1 family is toric non-special") {
  for (long n = 2; n <= 6; ++n)
    for (long m = 1; m <= 2; ++m) {
      std::vector<long> mults(static_cast<std::size_t>(n / (m + 1)), m + 1);
      auto r = analyze(on("hirzebruch:1", {n, m}, mults), cfg());
      CHECK(r.dim == r.tedim);
    }
}

TEST_CASE("systems on arbitrary polytopes") {
  auto L = LinearSystem::on_polytope(catalog::f1_trapezoid(), {2});
  CHECK(L.h0() == 5);
  CHECK(analyze(L, cfg()).dim == 1);
  CHECK_THROWS(LinearSystem::on_polytope(catalog::f1_trapezoid().translated({-1, 0}), {1}));
}
