#include "toric/cox.hpp"

#include <cstdint>

namespace toric {

CoxPresentation build_presentation(const TransitivityVerdict& verdict) {
  if (!verdict.normalized_fan) throw Error("Cox presentation needs a quasi-transitive fan");
  CoxPresentation cp = build_presentation(*verdict.normalized_fan);
  cp.ray_order = verdict.ray_order;
  return cp;
}

CoxPresentation build_presentation(const Fan& f) {
  const std::size_t n = f.rank, r = f.rays.size();
  if (r < n) throw Error("fan has fewer rays than its rank");
  for (std::size_t i = 0; i < n; ++i)
    if (f.rays[i] != -LatticeVector::unit(n, i)) throw Error("fan is not normalized");
  CoxPresentation cp;
  cp.n = n;
  cp.r = r;
  cp.fan = f;
  cp.P = columns_matrix(f.rays);
  cp.Q = IntegerMatrix(r - n, r);
  for (std::size_t j = 0; j < r - n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      cp.Q(j, i) = cp.P(i, n + j);
      if (cp.Q(j, i) < 0) throw Error("normalized fan has a ray outside the first orthant");
    }
    cp.Q(j, n + j) = 1;
  }
  cp.ray_order.resize(r);
  for (std::size_t i = 0; i < r; ++i) cp.ray_order[i] = i;
  return cp;
}

std::vector<Integer> divisor_class(const CoxPresentation& cp, const TDivisor& d) {
  if (d.coeffs.size() != cp.r)
    throw InputError("divisor has " + std::to_string(d.coeffs.size()) + " coefficients, fan has " +
                         std::to_string(cp.r) + " rays",
                     "divisor.coeffs");
  std::vector<Integer> out(cp.r - cp.n);
  for (std::size_t j = 0; j < out.size(); ++j)
    for (std::size_t i = 0; i < cp.r; ++i) out[j] += cp.Q(j, i) * d.coeffs[i];
  return out;
}

StandardFormDivisor to_standard_form(const CoxPresentation& cp, const TDivisor& d) {
  return {divisor_class(cp, d)};
}

TDivisor principal_divisor(const Fan& f, const LatticeVector& e) {
  TDivisor d;
  for (const auto& ray : f.rays) d.coeffs.push_back(dot(e, ray));
  return d;
}

TDivisor padded(const CoxPresentation& cp, const StandardFormDivisor& d) {
  if (d.coeffs.size() != cp.r - cp.n)
    throw InputError("standard divisor needs " + std::to_string(cp.r - cp.n) + " coefficients",
                     "divisor.standard");
  TDivisor out;
  out.coeffs.assign(cp.n, Integer(0));
  out.coeffs.insert(out.coeffs.end(), d.coeffs.begin(), d.coeffs.end());
  return out;
}

LatticePolytope sections_of(const Fan& f, const TDivisor& d) {
  if (d.coeffs.size() != f.rays.size()) throw Error("divisor length does not match the fan");
  std::vector<Inequality> q;
  for (std::size_t i = 0; i < f.rays.size(); ++i) q.push_back({f.rays[i], d.coeffs[i]});
  return LatticePolytope(f.rank, std::move(q));
}

SectionPolytope section_polytope(const CoxPresentation& cp, const StandardFormDivisor& d) {
  SectionPolytope s;
  s.polytope = sections_of(cp.fan, padded(cp, d));
  s.points = lattice_points(s.polytope);
  s.h0 = s.points.size();
  return s;
}

std::vector<std::vector<std::size_t>> irrelevant_generators(const Fan& f) {
  const std::size_t r = f.rays.size();
  if (r > 63) throw Error("too many rays for the primitive collection scan");
  std::vector<std::uint64_t> cones;
  for (const auto& c : f.max_cones) {
    std::uint64_t m = 0;
    for (std::size_t i : c) m |= std::uint64_t{1} << i;
    cones.push_back(m);
  }
  auto is_face = [&](std::uint64_t s) {
    for (auto c : cones)
      if ((s & c) == s) return true;
    return false;
  };
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t k = 1; k <= std::min(r, f.rank + 1); ++k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
      std::uint64_t s = 0;
      for (std::size_t i : idx) s |= std::uint64_t{1} << i;
      if (!is_face(s)) {
        bool minimal = true;
        for (std::size_t i : idx)
          if (!is_face(s & ~(std::uint64_t{1} << i))) minimal = false;
        if (minimal) out.push_back(idx);
      }
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == r - k + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return out;
}

Rational power(const Rational& x, unsigned long e) {
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), x.get_num_mpz_t(), e);
  mpz_pow_ui(out.get_den_mpz_t(), x.get_den_mpz_t(), e);
  out.canonicalize();
  return out;
}

RationalVector apply_root_step(const Fan& f, const RationalVector& point, const CoxAutomorphismStep& step) {
  if (!is_demazure_root(f, step.root)) throw Error("invalid root");
  if (point.size() != f.rays.size()) throw Error("point has the wrong number of Cox coordinates");
  const std::size_t i = step.root.ray_index;
  Rational prod = step.t;
  for (std::size_t j = 0; j < f.rays.size(); ++j) {
    if (j == i) continue;
    prod *= power(point[j], to_long(dot(step.root.m, f.rays[j])));
  }
  RationalVector out = point;
  out[i] += prod;
  return out;
}

TorusMove move_torus_point_to_invariant(const CoxPresentation& cp, const RationalVector& p) {
  if (p.size() != cp.r) throw Error("point has the wrong number of Cox coordinates");
  for (const auto& x : p)
    if (x == 0) throw Error("not a torus point");
  TorusMove mv;
  mv.image = p;
  for (std::size_t i = 0; i < cp.n; ++i) {
    Rational denom = 1;
    for (std::size_t j = cp.n; j < cp.r; ++j) denom *= power(p[j], to_long(cp.P(i, j)));
    CoxAutomorphismStep step{{LatticeVector::unit(cp.n, i), i}, -p[i] / denom};
    mv.image = apply_root_step(cp.fan, mv.image, step);
    mv.steps.push_back(std::move(step));
  }
  return mv;
}

}  // namespace toric
