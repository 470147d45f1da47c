#include "toric/lp.hpp"

namespace toric::lp {

namespace {

struct Tableau {
  RationalMatrix t;  // last column is the right-hand side
  std::vector<std::size_t> basis;
  std::vector<bool> row_alive;

  std::size_t rows() const { return t.rows(); }
  std::size_t vars() const { return t.cols() - 1; }
  const Rational& rhs(std::size_t i) const { return t(i, t.cols() - 1); }

  void pivot(std::size_t r, std::size_t c) {
    const std::size_t w = t.cols();
    Rational inv = 1 / t(r, c);
    for (std::size_t j = 0; j < w; ++j) t(r, j) *= inv;
    for (std::size_t i = 0; i < rows(); ++i) {
      if (i == r || t(i, c) == 0) continue;
      Rational f = t(i, c);
      for (std::size_t j = 0; j < w; ++j)
        if (t(r, j) != 0) t(i, j) -= f * t(r, j);
    }
    basis[r] = c;
  }

  // Maximizes cost over the current basic feasible solution. Columns with
  // allowed[j] == false never enter. Returns false when unbounded.
  bool optimize(const RationalVector& cost, const std::vector<bool>& allowed) {
    for (;;) {
      std::size_t enter = vars();
      for (std::size_t j = 0; j < vars() && enter == vars(); ++j) {
        if (!allowed[j]) continue;
        Rational reduced = cost[j];
        for (std::size_t i = 0; i < rows(); ++i)
          if (row_alive[i] && t(i, j) != 0) reduced -= cost[basis[i]] * t(i, j);
        if (reduced > 0) enter = j;
      }
      if (enter == vars()) return true;
      std::size_t leave = rows();
      Rational best;
      for (std::size_t i = 0; i < rows(); ++i) {
        if (!row_alive[i] || t(i, enter) <= 0) continue;
        Rational ratio = rhs(i) / t(i, enter);
        if (leave == rows() || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == rows()) return false;
      pivot(leave, enter);
    }
  }

  Rational objective(const RationalVector& cost) const {
    Rational v = 0;
    for (std::size_t i = 0; i < rows(); ++i)
      if (row_alive[i]) v += cost[basis[i]] * rhs(i);
    return v;
  }
};

}  // namespace

Result maximize(const Problem& p) {
  const std::size_t n = p.num_vars;
  const std::size_t m = p.A.rows();
  const std::size_t q = p.E.rows();
  if ((m && p.A.cols() != n) || (q && p.E.cols() != n) || p.b.size() != m || p.f.size() != q ||
      (!p.c.empty() && p.c.size() != n))
    throw Error("lp: inconsistent problem dimensions");

  // Columns: x+ (n), x- (n), slacks (m), artificials (m + q).
  const std::size_t structural = 2 * n + m;
  const std::size_t total = structural + m + q;
  Tableau tab;
  tab.t = RationalMatrix(m + q, total + 1);
  tab.basis.assign(m + q, 0);
  tab.row_alive.assign(m + q, true);
  for (std::size_t i = 0; i < m + q; ++i) {
    const bool ineq = i < m;
    Rational rhs = ineq ? p.b[i] : p.f[i - m];
    const int sign = rhs < 0 ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& a = ineq ? p.A(i, j) : p.E(i - m, j);
      tab.t(i, j) = sign * a;
      tab.t(i, n + j) = -sign * a;
    }
    if (ineq) tab.t(i, 2 * n + i) = sign;
    tab.t(i, structural + i) = 1;
    tab.t(i, total) = sign * rhs;
    tab.basis[i] = structural + i;
  }

  RationalVector phase1(total, Rational(0));
  for (std::size_t j = structural; j < total; ++j) phase1[j] = -1;
  std::vector<bool> all(total, true);
  tab.optimize(phase1, all);
  Result res;
  if (tab.objective(phase1) < 0) {
    res.status = Status::Infeasible;
    return res;
  }
  // Drive artificial variables out of the basis; drop redundant rows.
  for (std::size_t i = 0; i < tab.rows(); ++i) {
    if (tab.basis[i] < structural) continue;
    std::size_t c = structural;
    for (std::size_t j = 0; j < structural; ++j)
      if (tab.t(i, j) != 0) {
        c = j;
        break;
      }
    if (c == structural)
      tab.row_alive[i] = false;
    else
      tab.pivot(i, c);
  }

  RationalVector cost(total, Rational(0));
  for (std::size_t j = 0; j < n && !p.c.empty(); ++j) {
    cost[j] = p.c[j];
    cost[n + j] = -p.c[j];
  }
  std::vector<bool> allowed(total, false);
  for (std::size_t j = 0; j < structural; ++j) allowed[j] = true;
  if (!tab.optimize(cost, allowed)) {
    res.status = Status::Unbounded;
    return res;
  }
  res.status = Status::Optimal;
  res.value = tab.objective(cost);
  res.x.assign(n, Rational(0));
  for (std::size_t i = 0; i < tab.rows(); ++i) {
    if (!tab.row_alive[i]) continue;
    const std::size_t b = tab.basis[i];
    if (b < n)
      res.x[b] += tab.rhs(i);
    else if (b < 2 * n)
      res.x[b - n] -= tab.rhs(i);
  }
  return res;
}

bool feasible(const RationalMatrix& A, const RationalVector& b, const RationalMatrix& E,
              const RationalVector& f) {
  Problem p;
  p.num_vars = A.rows() ? A.cols() : E.cols();
  p.A = A;
  p.b = b;
  p.E = E;
  p.f = f;
  return maximize(p).status != Status::Infeasible;
}

}  // namespace toric::lp
