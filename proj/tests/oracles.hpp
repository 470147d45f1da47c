#pragma once

// Slow, independent reference computations used only by the tests. None of
// these call the library routine they are checking.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "toric/cox.hpp"
#include "toric/linsys.hpp"

namespace oracle {

using namespace toric;

// Rank over Q by textbook Gaussian elimination on rationals.
inline std::size_t rank_q(RationalMatrix m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    m.swap_rows(piv, r);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, c) == 0) continue;
      Rational f = m(i, c) / m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

// Lattice points of {<m, a_i> <= b_i} inside the cube [-R, R]^n.
inline std::vector<LatticeVector> points_in_cube(const std::vector<Inequality>& q, std::size_t n, long R) {
  std::vector<LatticeVector> out;
  std::vector<long> cur(n, -R);
  for (;;) {
    LatticeVector m(n);
    for (std::size_t j = 0; j < n; ++j) m[j] = cur[j];
    if (std::all_of(q.begin(), q.end(), [&](const Inequality& iq) { return iq.holds(m); })) out.push_back(m);
    std::size_t j = n;
    while (j > 0 && cur[j - 1] == R) cur[--j] = -R;
    if (j == 0) return out;
    ++cur[j - 1];
  }
}

inline std::vector<DemazureRoot> roots_by_scan(const Fan& f, long R) {
  std::vector<DemazureRoot> out;
  for (std::size_t i = 0; i < f.rays.size(); ++i) {
    std::vector<Inequality> q{{f.rays[i], Integer(-1)}, {-f.rays[i], Integer(1)}};
    for (std::size_t j = 0; j < f.rays.size(); ++j)
      if (j != i) q.push_back({-f.rays[j], Integer(0)});
    for (auto& m : points_in_cube(q, f.rank, R)) out.push_back({m, i});
  }
  return out;
}

inline std::set<std::vector<std::size_t>> cone_sets(const Fan& f) {
  std::set<std::vector<std::size_t>> s;
  for (auto c : f.max_cones) {
    std::sort(c.begin(), c.end());
    s.insert(c);
  }
  return s;
}

// Every permutation of the rays, solved against a fixed ray basis.
inline std::size_t symmetry_count(const Fan& f) {
  const std::size_t n = f.rank, r = f.rays.size();
  std::vector<std::size_t> basis;
  for (std::size_t i = 0; i < r && basis.size() < n; ++i) {
    std::vector<LatticeVector> trial;
    for (std::size_t b : basis) trial.push_back(f.rays[b]);
    trial.push_back(f.rays[i]);
    if (rank(columns_matrix(trial)) == trial.size()) basis.push_back(i);
  }
  std::vector<LatticeVector> bv;
  for (std::size_t b : basis) bv.push_back(f.rays[b]);
  RationalMatrix binv = inverse(to_rational(columns_matrix(bv)));
  const auto cones = cone_sets(f);
  std::vector<std::size_t> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  std::size_t count = 0;
  do {
    std::vector<LatticeVector> img;
    for (std::size_t b : basis) img.push_back(f.rays[perm[b]]);
    RationalMatrix a = to_rational(columns_matrix(img)) * binv;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (a(i, j).get_den() != 1) ok = false;
    if (!ok) continue;
    IntegerMatrix ai = to_integer(a);
    Integer det = determinant(ai);
    if (det != 1 && det != -1) continue;
    for (std::size_t i = 0; i < r && ok; ++i) ok = apply(ai, f.rays[i]) == f.rays[perm[i]];
    if (!ok) continue;
    for (const auto& c : cones) {
      std::vector<std::size_t> m;
      for (std::size_t i : c) m.push_back(perm[i]);
      std::sort(m.begin(), m.end());
      if (!cones.count(m)) ok = false;
    }
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

// Minimal non-faces by testing every subset of rays.
inline std::vector<std::vector<std::size_t>> primitive_collections(const Fan& f) {
  const std::size_t r = f.rays.size();
  const auto cones = cone_sets(f);
  auto is_face = [&](const std::vector<std::size_t>& s) {
    for (const auto& c : cones)
      if (std::includes(c.begin(), c.end(), s.begin(), s.end())) return true;
    return false;
  };
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t mask = 1; mask < (std::size_t{1} << r); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < r; ++i)
      if (mask >> i & 1) s.push_back(i);
    if (is_face(s)) continue;
    bool minimal = true;
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      auto t = s;
      t.erase(t.begin() + static_cast<long>(drop));
      if (!is_face(t)) minimal = false;
    }
    if (minimal) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

// Taylor coefficients of x^m at p: expand prod_j (p_j + t_j)^{m_j} by repeated
// polynomial multiplication and read off the coefficient of t^u.
inline Rational taylor_coefficient(const LatticeVector& m, const std::vector<long>& u, const RationalVector& p) {
  Rational out = 1;
  for (std::size_t j = 0; j < m.size(); ++j) {
    std::vector<Rational> poly{Rational(1)};
    for (long e = 0; e < to_long(m[j]); ++e) {
      std::vector<Rational> next(poly.size() + 1, Rational(0));
      for (std::size_t k = 0; k < poly.size(); ++k) {
        next[k] += poly[k] * p[j];
        next[k + 1] += poly[k];
      }
      poly = std::move(next);
    }
    out *= u[j] < static_cast<long>(poly.size()) ? poly[u[j]] : Rational(0);
  }
  return out;
}

// Rank of the Taylor-coefficient conditions at the given rational points.
inline std::size_t conditions_rank(const std::vector<LatticeVector>& monomials, const std::vector<long>& mults,
                                   const std::vector<RationalVector>& points) {
  if (monomials.empty()) return 0;
  const std::size_t n = monomials.front().size();
  std::vector<std::vector<Rational>> rows;
  for (std::size_t k = 0; k < mults.size(); ++k) {
    // all u with |u| < mu by a plain odometer over [0, mu)^n
    std::vector<long> u(n, 0);
    for (;;) {
      long tot = std::accumulate(u.begin(), u.end(), 0L);
      if (tot < mults[k]) {
        std::vector<Rational> row;
        for (const auto& m : monomials) row.push_back(taylor_coefficient(m, u, points[k]));
        rows.push_back(row);
      }
      std::size_t j = n;
      while (j > 0 && u[j - 1] == mults[k] - 1) u[--j] = 0;
      if (j == 0) break;
      ++u[j - 1];
    }
  }
  RationalMatrix mat(rows.size(), monomials.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < monomials.size(); ++j) mat(i, j) = rows[i][j];
  return rank_q(mat);
}

inline std::vector<RationalVector> random_points(std::size_t k, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(1, 97), den(1, 13), sign(0, 1);
  std::vector<RationalVector> pts(k, RationalVector(n));
  for (auto& p : pts)
    for (auto& x : p) {
      x = Rational(num(rng) * (sign(rng) ? 1 : -1), den(rng));
      x.canonicalize();
    }
  return pts;
}

// Generic rank as the maximum over several random rational specializations.
inline std::size_t generic_rank_q(const std::vector<LatticeVector>& monomials, const std::vector<long>& mults,
                                  std::uint64_t seed, int tries = 3) {
  std::mt19937_64 rng(seed);
  std::size_t best = 0;
  const std::size_t n = monomials.empty() ? 0 : monomials.front().size();
  for (int t = 0; t < tries; ++t)
    best = std::max(best, conditions_rank(monomials, mults, random_points(mults.size(), n, rng)));
  return best;
}

}  // namespace oracle
