#include "toric/degeneration.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace toric {

StandardFormCheck check_standard_form(const LatticePolytope& p) {
  const std::size_t n = p.dim();
  if (p.empty()) return {false, "polytope is empty"};
  if (!p.full_dimensional()) return {false, "polytope is not full-dimensional"};
  for (const auto& v : p.vertices())
    for (const auto& c : v)
      if (c < 0) return {false, "polytope leaves the first orthant"};
  const RationalVector origin(n, Rational(0));
  const auto& verts = p.vertices();
  auto it = std::find(verts.begin(), verts.end(), origin);
  if (it == verts.end()) return {false, "origin is not a vertex"};
  VertexEdges edges = edges_at(p, origin);
  if (edges.directions.size() != n) return {false, "origin is not a simple vertex"};
  for (const auto& d : edges.directions) {
    bool axis = false;
    for (std::size_t i = 0; i < n; ++i)
      if (d == LatticeVector::unit(n, i)) axis = true;
    if (!axis) return {false, "edge " + d.to_string() + " at the origin is not a coordinate axis"};
  }
  NormalFan nf;
  try {
    nf = normal_fan(p);
  } catch (const Error& e) {
    return {false, e.what()};
  }
  const std::size_t k = static_cast<std::size_t>(it - verts.begin());
  if (!cone_is_transitive(nf.fan, k)) return {false, "origin is not a transitive vertex"};
  return {true, {}};
}

SlabPieces split_polytope(const LatticePolytope& p, std::size_t axis, long c) {
  const std::size_t n = p.dim();
  if (axis >= n) throw Error("split axis out of range");
  const LatticeVector e = LatticeVector::unit(n, axis);
  auto below = [&](long level) { return p.intersected({e, Integer(level)}); };
  auto above = [&](long level) { return p.intersected({-e, Integer(-level)}); };
  return {below(c - 1), below(c), above(c - 1), above(c)};
}

LatticePolytope minus_child_polytope(const LatticePolytope& p, const SplitSpec& split) {
  return split_polytope(p, split.axis, split.level).minus_cm1;
}

LatticePolytope plus_child_polytope(const LatticePolytope& p, const SplitSpec& split) {
  return split_polytope(p, split.axis, split.level)
      .plus_c.translated(-LatticeVector::unit(p.dim(), split.axis, split.level));
}

std::vector<LatticeVector> delta_c_mu(std::size_t n, std::size_t axis, long c, long mu) {
  std::vector<LatticeVector> out;
  for (const auto& u : derivative_orders(n, mu)) {
    LatticeVector m(n);
    for (std::size_t j = 0; j < n; ++j) m[j] = u[j];
    m[axis] += c;
    out.push_back(std::move(m));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Whether every Delta(c, mu) lies in q; fills witness with the first miss.
bool deltas_inside(const LatticePolytope& q, std::size_t axis, long c, const std::vector<long>& mults,
                   std::size_t from, std::size_t to, const std::string& label, std::string& witness) {
  for (std::size_t i = from; i < to; ++i)
    for (const auto& m : delta_c_mu(q.dim(), axis, c, mults[i]))
      if (!q.contains(m)) {
        if (witness.empty())
          witness = label + ": point " + std::to_string(i) + " (mult " + std::to_string(mults[i]) + "), " +
                    m.to_string() + " is outside";
        return false;
      }
  return true;
}

long tvdim_of(const LatticePolytope& p, const std::vector<long>& mults) {
  LinearSystem L = LinearSystem::on_polytope(p, mults);
  long t = static_cast<long>(L.h0()) - 1;
  for (std::size_t c : toric_truncation(L)) t -= static_cast<long>(c);
  return t;
}

HypothesisTranscript containment_part(const LatticePolytope& p, const SplitSpec& split,
                                      const std::vector<long>& mults, long tvdim_minus, long tvdim_plus) {
  HypothesisTranscript t;
  t.tvdim_minus = tvdim_minus;
  t.tvdim_plus = tvdim_plus;
  t.product_ok = (Integer(tvdim_plus) + 1) * (Integer(tvdim_minus) + 1) >= 0;
  SlabPieces pieces = split_polytope(p, split.axis, split.level);
  std::string wit;
  t.minus_points_ok = deltas_inside(pieces.plus_c, split.axis, split.level, mults, 0, split.s,
                                    "Delta(c, mu) not inside P+_c", wit);
  t.plus_points_ok = deltas_inside(pieces.minus_cm1, split.axis, 0, mults, split.s, mults.size(),
                                   "Delta(0, mu) not inside P-_{c-1}", wit);
  t.witness = wit;
  return t;
}

void finish(HypothesisTranscript& t, bool children_ok) {
  t.children_non_special = children_ok;
  std::string first;
  if (!t.children_non_special)
    first = "a child system is not certified toric non-special";
  else if (!t.product_ok)
    first = "(tvdim+ + 1)(tvdim- + 1) = " +
            Integer((Integer(t.tvdim_plus) + 1) * (Integer(t.tvdim_minus) + 1)).get_str() + " < 0";
  else
    first = t.witness;
  t.witness = first;
  t.passed = t.children_non_special && t.product_ok && t.minus_points_ok && t.plus_points_ok;
  if (t.passed) t.witness.clear();
}

std::vector<long> mults_slice(const std::vector<long>& mults, std::size_t from, std::size_t to) {
  return {mults.begin() + static_cast<long>(from), mults.begin() + static_cast<long>(to)};
}

template <class T>
std::vector<T> center_out(std::vector<T> items, double center) {
  std::stable_sort(items.begin(), items.end(), [&](const T& a, const T& b) {
    double da = std::abs(static_cast<double>(a) - center), db = std::abs(static_cast<double>(b) - center);
    if (da != db) return da < db;
    return a < b;
  });
  return items;
}

class Searcher {
 public:
  explicit Searcher(const CertifyOptions& opts) : opts_(opts) {}

  std::optional<Certificate> node(const LatticePolytope& p, const std::vector<long>& mults, std::size_t depth,
                                  bool root) {
    const std::string key = memo_key(p, mults, depth, root);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    ++explored_;
    std::optional<Certificate> out;
    if (root) {
      out = by_split(p, mults, depth);
      if (!out) out = as_leaf(p, mults);
    } else {
      out = as_leaf(p, mults);
      if (!out) out = by_split(p, mults, depth);
    }
    memo_[key] = out;
    return out;
  }

  std::size_t explored() const { return explored_; }

 private:
  static std::string memo_key(const LatticePolytope& p, const std::vector<long>& mults, std::size_t depth,
                              bool root) {
    std::ostringstream os;
    os << depth << (root ? 'r' : 'c') << '|';
    for (long m : mults) os << m << ',';
    for (const auto& q : p.inequalities()) {
      os << '|';
      for (const auto& c : q.normal) os << c.get_str() << ',';
      os << q.offset.get_str();
    }
    return os.str();
  }

  Certificate base(const LatticePolytope& p, const std::vector<long>& mults) {
    Certificate c;
    c.polytope = p;
    c.multiplicities = mults;
    LinearSystem L = LinearSystem::on_polytope(p, mults);
    c.h0 = static_cast<long>(L.h0());
    c.tvdim = tvdim_of(p, mults);
    c.tedim = std::max(c.tvdim, -1L);
    return c;
  }

  std::optional<Certificate> as_leaf(const LatticePolytope& p, const std::vector<long>& mults) {
    Certificate c = base(p, mults);
    c.kind = Certificate::Kind::Leaf;
    c.report = analyze(LinearSystem::on_polytope(p, mults), opts_.rank);
    if (c.report->dim != c.report->tedim) return std::nullopt;
    return c;
  }

  std::optional<Certificate> by_split(const LatticePolytope& p, const std::vector<long>& mults,
                                      std::size_t depth) {
    if (depth >= opts_.max_depth || mults.empty()) return std::nullopt;
    if (!check_standard_form(p).ok) return std::nullopt;
    const std::size_t n = p.dim(), k = mults.size();
    auto box = bounding_box(p);
    if (!box) return std::nullopt;
    std::vector<std::size_t> axes(n);
    for (std::size_t i = 0; i < n; ++i) axes[i] = i;
    std::stable_sort(axes.begin(), axes.end(), [&](std::size_t a, std::size_t b) { return box->hi[a] > box->hi[b]; });
    std::vector<std::size_t> sizes(k + 1);
    for (std::size_t s = 0; s <= k; ++s) sizes[s] = s;
    sizes = center_out(sizes, static_cast<double>(k) / 2.0);

    for (std::size_t axis : axes) {
      const long width = box->hi[axis];
      std::vector<long> levels;
      for (long c = 1; c <= width; ++c) levels.push_back(c);
      levels = center_out(levels, (static_cast<double>(width) + 1.0) / 2.0);
      for (long c : levels)
        for (std::size_t s : sizes) {
          SplitSpec split{axis, c, s};
          LatticePolytope minus_p = minus_child_polytope(p, split);
          LatticePolytope plus_p = plus_child_polytope(p, split);
          std::vector<long> minus_m = mults_slice(mults, 0, s), plus_m = mults_slice(mults, s, k);
          HypothesisTranscript t =
              containment_part(p, split, mults, tvdim_of(minus_p, minus_m), tvdim_of(plus_p, plus_m));
          if (!t.product_ok || !t.minus_points_ok || !t.plus_points_ok) continue;
          auto minus_c = node(minus_p, minus_m, depth + 1, false);
          if (!minus_c) continue;
          auto plus_c = node(plus_p, plus_m, depth + 1, false);
          if (!plus_c) continue;
          finish(t, true);
          Certificate cert = base(p, mults);
          cert.kind = Certificate::Kind::Split;
          cert.split = split;
          cert.transcript = t;
          cert.minus = std::make_shared<const Certificate>(std::move(*minus_c));
          cert.plus = std::make_shared<const Certificate>(std::move(*plus_c));
          return cert;
        }
    }
    return std::nullopt;
  }

  CertifyOptions opts_;
  std::map<std::string, std::optional<Certificate>> memo_;
  std::size_t explored_ = 0;
};

}  // namespace

HypothesisTranscript check_hypotheses(const LatticePolytope& p, const SplitSpec& split,
                                      const std::vector<long>& mults, const ChildSummary& minus,
                                      const ChildSummary& plus) {
  if (split.s > mults.size()) throw Error("split assigns more points than the system has");
  HypothesisTranscript t = containment_part(p, split, mults, minus.tvdim, plus.tvdim);
  finish(t, minus.toric_non_special && plus.toric_non_special);
  return t;
}

CertifyResult certify(const LatticePolytope& p, const std::vector<long>& mults, const CertifyOptions& opts) {
  CertifyResult res;
  StandardFormCheck sf = check_standard_form(p);
  if (!sf.ok) throw InputError("polytope is not in standard form: " + sf.reason, "polytope");
  std::vector<long> sorted;
  for (long m : mults) {
    if (m < 0) throw InputError("negative multiplicity", "multiplicities");
    if (m > 0) sorted.push_back(m);
  }
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  Searcher search(opts);
  res.certificate = search.node(p, sorted, 0, true);
  res.nodes_explored = search.explored();
  res.certified = res.certificate.has_value();
  if (!res.certified) res.reason = "no certificate found within depth " + std::to_string(opts.max_depth);
  return res;
}

namespace {

VerifyResult fail(const std::string& where, const std::string& what) { return {false, where + ": " + what}; }

VerifyResult verify_node(const Certificate& c, const RankConfig& cfg, const std::string& where) {
  if (std::any_of(c.multiplicities.begin(), c.multiplicities.end(), [](long m) { return m <= 0; }))
    return fail(where, "multiplicities must be positive");
  LinearSystem L = LinearSystem::on_polytope(c.polytope, c.multiplicities);
  if (c.h0 != static_cast<long>(L.h0())) return fail(where, "h0 does not match the lattice point count");
  const long tv = tvdim_of(c.polytope, c.multiplicities);
  if (c.tvdim != tv) return fail(where, "tvdim does not match the truncation count");
  if (c.tedim != std::max(tv, -1L)) return fail(where, "tedim does not match tvdim");

  if (c.kind == Certificate::Kind::Leaf) {
    if (!c.report) return fail(where, "leaf without a report");
    const SpecialityReport& stored = *c.report;
    if (stored.h0 != c.h0 || stored.tvdim != c.tvdim || stored.tedim != c.tedim)
      return fail(where, "leaf report disagrees with the node");
    if (stored.dim != stored.tedim) return fail(where, "leaf report is toric special");
    SpecialityReport fresh = analyze(L, cfg);
    if (fresh.dim != fresh.tedim)
      return fail(where, "re-sampled rank gives dim " + std::to_string(fresh.dim) + " but tedim " +
                             std::to_string(fresh.tedim));
    if (fresh.dim != stored.dim) return fail(where, "re-sampled dim differs from the stored dim");
    return {true, {}};
  }

  if (!c.split || !c.minus || !c.plus) return fail(where, "split node is incomplete");
  const SplitSpec& sp = *c.split;
  if (sp.axis >= c.polytope.dim()) return fail(where, "split axis out of range");
  if (sp.s > c.multiplicities.size()) return fail(where, "split size out of range");
  StandardFormCheck sf = check_standard_form(c.polytope);
  if (!sf.ok) return fail(where, "split node not in standard form: " + sf.reason);
  auto box = bounding_box(c.polytope);
  if (!box || sp.level < 1 || sp.level > box->hi[sp.axis]) return fail(where, "split level out of range");
  if (!(c.minus->polytope == minus_child_polytope(c.polytope, sp)))
    return fail(where, "minus child polytope does not match the split");
  if (!(c.plus->polytope == plus_child_polytope(c.polytope, sp)))
    return fail(where, "plus child polytope does not match the split");
  const std::size_t k = c.multiplicities.size();
  if (c.minus->multiplicities != mults_slice(c.multiplicities, 0, sp.s) ||
      c.plus->multiplicities != mults_slice(c.multiplicities, sp.s, k))
    return fail(where, "children do not partition the points as the split says");
  VerifyResult vm = verify_node(*c.minus, cfg, where + "/minus");
  if (!vm.ok) return vm;
  VerifyResult vp = verify_node(*c.plus, cfg, where + "/plus");
  if (!vp.ok) return vp;
  HypothesisTranscript t = check_hypotheses(c.polytope, sp, c.multiplicities, {c.minus->tvdim, true},
                                            {c.plus->tvdim, true});
  if (!(t == c.transcript)) return fail(where, "stored transcript differs from the recomputed one");
  if (!t.passed) return fail(where, "hypotheses fail: " + t.witness);
  return {true, {}};
}

}  // namespace

VerifyResult verify_certificate(const Certificate& cert, const RankConfig& cfg) {
  try {
    return verify_node(cert, cfg, "root");
  } catch (const std::exception& e) {
    return {false, std::string("root: ") + e.what()};
  }
}

}  // namespace toric
