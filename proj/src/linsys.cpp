#include "toric/linsys.hpp"

#include <algorithm>

namespace toric {

namespace {

std::vector<long> checked_mults(const std::vector<long>& mults) {
  std::vector<long> out;
  for (long m : mults) {
    if (m < 0) throw InputError("negative multiplicity " + std::to_string(m), "multiplicities");
    if (m > 0) out.push_back(m);
  }
  return out;
}

long max_exponent(const std::vector<LatticeVector>& monomials, std::size_t j) {
  long mx = 0;
  for (const auto& m : monomials) mx = std::max(mx, to_long(m[j]));
  return mx;
}

// Fills a matrix through set(row, col, value) with entries in a ring given by
// one(), from_long() and mul().
template <class T, class Ops, class Set>
void fill_rows(const LinearSystem& L, const std::vector<std::vector<T>>& points, const Ops& ops, Set&& set) {
  const std::size_t n = L.n;
  if (points.size() != L.multiplicities.size())
    throw Error("expected " + std::to_string(L.multiplicities.size()) + " points");
  std::vector<long> max_exp(n);
  long top = 0;
  for (std::size_t j = 0; j < n; ++j) {
    max_exp[j] = max_exponent(L.monomials, j);
    top = std::max(top, max_exp[j]);
  }
  // falling factorials fall[m][u] = m (m-1) ... (m-u+1)
  std::vector<std::vector<T>> fall(top + 1);
  for (long m = 0; m <= top; ++m) {
    fall[m].resize(m + 1);
    fall[m][0] = ops.one();
    for (long u = 1; u <= m; ++u) fall[m][u] = ops.mul(fall[m][u - 1], ops.from_long(m - u + 1));
  }
  std::vector<std::vector<long>> mono(L.monomials.size(), std::vector<long>(n));
  for (std::size_t c = 0; c < L.monomials.size(); ++c)
    for (std::size_t j = 0; j < n; ++j) mono[c][j] = to_long(L.monomials[c][j]);

  std::size_t row = 0;
  for (std::size_t k = 0; k < points.size(); ++k) {
    const auto& pt = points[k];
    if (pt.size() != n) throw Error("point has the wrong dimension");
    std::vector<std::vector<T>> pw(n);
    for (std::size_t j = 0; j < n; ++j) {
      pw[j].resize(max_exp[j] + 1);
      pw[j][0] = ops.one();
      for (long e = 1; e <= max_exp[j]; ++e) pw[j][e] = ops.mul(pw[j][e - 1], pt[j]);
    }
    for (const auto& u : derivative_orders(n, L.multiplicities[k])) {
      for (std::size_t c = 0; c < mono.size(); ++c) {
        T v = ops.one();
        bool zero = false;
        for (std::size_t j = 0; j < n && !zero; ++j) {
          const long m = mono[c][j];
          if (u[j] > m) {
            zero = true;
            break;
          }
          v = ops.mul(v, ops.mul(fall[m][u[j]], pw[j][m - u[j]]));
        }
        if (!zero) set(row, c, v);
      }
      ++row;
    }
  }
}

template <class T>
struct FieldOps {
  T one() const { return T(1); }
  T mul(const T& a, const T& b) const { return a * b; }
  T from_long(long x) const { return T(x); }
};

struct ModOps {
  std::uint64_t p;
  std::uint64_t one() const { return 1 % p; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return modp::mul(a, b, p); }
  std::uint64_t from_long(long x) const { return static_cast<std::uint64_t>(x) % p; }
};

std::size_t row_count(const LinearSystem& L) {
  std::size_t rows = 0;
  for (long m : L.multiplicities) rows += derivative_orders(L.n, m).size();
  return rows;
}

IntegerMatrix build_integer_matrix(const LinearSystem& L, const std::vector<std::vector<Integer>>& points) {
  IntegerMatrix out(row_count(L), L.monomials.size());
  fill_rows(L, points, FieldOps<Integer>{}, [&](std::size_t i, std::size_t j, const Integer& v) { out(i, j) = v; });
  return out;
}

}  // namespace

LinearSystem LinearSystem::on_polytope(const LatticePolytope& p, const std::vector<long>& mults) {
  LinearSystem L;
  L.n = p.dim();
  L.polytope = p;
  L.monomials = lattice_points(p);
  for (const auto& m : L.monomials)
    for (const auto& c : m)
      if (c < 0) throw Error("section polytope leaves the first orthant at " + m.to_string());
  L.multiplicities = checked_mults(mults);
  return L;
}

LinearSystem LinearSystem::from_divisor(const CoxPresentation& cp, const StandardFormDivisor& d,
                                        const std::vector<long>& mults) {
  return on_polytope(section_polytope(cp, d).polytope, mults);
}

std::vector<std::vector<long>> derivative_orders(std::size_t n, long mu) {
  std::vector<std::vector<long>> out;
  if (mu <= 0) return out;
  std::vector<long> u(n, 0);
  // lexicographic walk over the simplex |u| <= mu - 1
  for (;;) {
    out.push_back(u);
    long total = 0;
    for (long x : u) total += x;
    std::size_t j = n;
    bool advanced = false;
    while (j > 0) {
      --j;
      long rest = total - u[j];
      if (rest + u[j] + 1 <= mu - 1) {
        ++u[j];
        for (std::size_t t = j + 1; t < n; ++t) u[t] = 0;
        advanced = true;
        break;
      }
      total = rest;
      u[j] = 0;
    }
    if (!advanced) return out;
  }
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

RationalMatrix build_matrix(const LinearSystem& L, const std::vector<RationalVector>& points) {
  for (const auto& pt : points)
    for (const auto& x : pt)
      if (x == 0) throw Error("interpolation points must lie in the torus");
  RationalMatrix out(row_count(L), L.monomials.size());
  fill_rows(L, points, FieldOps<Rational>{}, [&](std::size_t i, std::size_t j, const Rational& v) { out(i, j) = v; });
  return out;
}

modp::Matrix build_matrix(const LinearSystem& L, const std::vector<std::vector<std::uint64_t>>& points,
                          std::uint64_t p) {
  modp::Matrix out(row_count(L), L.monomials.size());
  fill_rows(L, points, ModOps{p}, [&](std::size_t i, std::size_t j, std::uint64_t v) { out(i, j) = v; });
  return out;
}

RankResult generic_rank(const LinearSystem& L, const RankConfig& cfg) {
  RankResult res;
  const std::size_t trials = std::max<std::size_t>(cfg.trials, 1);
  const std::size_t k = L.multiplicities.size();
  long max_total = 0;
  for (const auto& m : L.monomials) max_total = std::max(max_total, to_long(m.total()));
  if (k == 0 || L.monomials.empty()) {
    res.evidence.push_back({0, cfg.seed, 0});
    return res;
  }
  // exact mode draws integers from [-R, R] \ {0}
  constexpr long kExactRadius = 1L << 16;
  for (std::size_t t = 0; t < trials; ++t) {
    const std::uint64_t trial_seed = modp::mix(cfg.seed ^ modp::mix(t + 1));
    std::mt19937_64 rng(trial_seed);
    TrialEvidence ev;
    ev.seed = trial_seed;
    if (cfg.exact) {
      std::uniform_int_distribution<long> dist(-kExactRadius, kExactRadius - 1);
      std::vector<std::vector<Integer>> pts(k, std::vector<Integer>(L.n));
      for (auto& pt : pts)
        for (auto& x : pt) {
          long v = dist(rng);
          x = v >= 0 ? v + 1 : v;
        }
      ev.rank = rank(build_integer_matrix(L, pts));
    } else {
      ev.prime = modp::random_prime(cfg.prime_bits, rng);
      std::uniform_int_distribution<std::uint64_t> dist(1, ev.prime - 1);
      std::vector<std::vector<std::uint64_t>> pts(k, std::vector<std::uint64_t>(L.n));
      for (auto& pt : pts)
        for (auto& x : pt) x = dist(rng);
      ev.rank = modp::rank(build_matrix(L, pts, ev.prime), ev.prime);
    }
    res.rank = std::max(res.rank, ev.rank);
    res.evidence.push_back(ev);
  }
  res.minor_degree = static_cast<std::uint64_t>(res.rank) * static_cast<std::uint64_t>(max_total);
  // prod_t min(1, deg / |S_t|)
  res.failure_bound = 1;
  for (const auto& ev : res.evidence) {
    double s = cfg.exact ? 2.0 * kExactRadius : static_cast<double>(ev.prime - 1);
    res.failure_bound *= std::min(1.0, static_cast<double>(res.minor_degree) / s);
  }
  return res;
}

std::vector<std::size_t> toric_truncation(const LinearSystem& L) {
  std::vector<std::size_t> out;
  for (long mu : L.multiplicities) {
    std::size_t count = 0;
    for (const auto& u : derivative_orders(L.n, mu)) {
      LatticeVector v(L.n);
      for (std::size_t j = 0; j < L.n; ++j) v[j] = u[j];
      if (L.polytope.contains(v)) ++count;
    }
    out.push_back(count);
  }
  return out;
}

void check_inequality_chain(const SpecialityReport& r) {
  if (!(r.dim >= r.tedim && r.tedim >= r.edim))
    throw GenericityError("sampling produced sub-generic rank; increase trials");
}

SpecialityReport analyze(const LinearSystem& L, const RankConfig& cfg) {
  SpecialityReport rep;
  rep.n = L.n;
  rep.multiplicities = L.multiplicities;
  rep.config = cfg;
  rep.h0 = static_cast<long>(L.h0());
  RankResult rr = generic_rank(L, cfg);
  rep.rank = static_cast<long>(rr.rank);
  rep.samples = rr.evidence;
  rep.failure_bound = rr.failure_bound;
  rep.dim = rep.h0 - rep.rank - 1;
  Integer conditions = 0;
  for (long mu : L.multiplicities) conditions += binomial(static_cast<long>(L.n) + mu - 1, static_cast<long>(L.n));
  rep.vdim = to_long(Integer(rep.h0) - conditions - 1);
  rep.truncation = toric_truncation(L);
  long toric_conditions = 0;
  for (std::size_t c : rep.truncation) toric_conditions += static_cast<long>(c);
  rep.tvdim = rep.h0 - toric_conditions - 1;
  rep.edim = std::max(rep.vdim, -1L);
  rep.tedim = std::max(rep.tvdim, -1L);
  rep.special = rep.dim > rep.edim;
  rep.toric_special = rep.dim > rep.tedim;
  check_inequality_chain(rep);
  return rep;
}

}  // namespace toric
