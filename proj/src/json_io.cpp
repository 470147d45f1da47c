#include "toric/json_io.hpp"

#include <fstream>
#include <sstream>

namespace toric::io {

namespace {

const Json& field(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw InputError("expected an object", path);
  auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("missing field '") + key + "'", path);
  return *it;
}

const Json& array_at(const Json& j, const std::string& path) {
  if (!j.is_array()) throw InputError("expected an array", path);
  return j;
}

std::string at(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }
std::string at(const std::string& path, const char* key) { return path + "/" + key; }

bool bool_from_json(const Json& j, const std::string& path) {
  if (!j.is_boolean()) throw InputError("expected a boolean", path);
  return j.get<bool>();
}

std::vector<Integer> integers_from_json(const Json& j, const std::string& path) {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < array_at(j, path).size(); ++i) out.push_back(integer_from_json(j[i], at(path, i)));
  return out;
}

LatticeVector lattice_from_json(const Json& j, const std::string& path) {
  return LatticeVector(integers_from_json(j, path));
}

std::string str_from_json(const Json& j, const std::string& path) {
  if (!j.is_string()) throw InputError("expected a string", path);
  return j.get<std::string>();
}

}  // namespace

Json parse(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError("malformed JSON in " + what + ": " + e.what(), what);
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path, path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), path);
}

Json integer_to_json(const Integer& x) {
  if (x.fits_slong_p()) return Json(x.get_si());
  return Json(x.get_str());
}

Integer integer_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? Integer(j.get<unsigned long>()) : Integer(j.get<long>());
  if (j.is_string()) {
    Integer x;
    if (x.set_str(j.get<std::string>(), 10) == 0) return x;
  }
  throw InputError("expected an integer", path);
}

long long_from_json(const Json& j, const std::string& path) {
  Integer x = integer_from_json(j, path);
  if (!x.fits_slong_p()) throw InputError("integer out of range", path);
  return x.get_si();
}

std::vector<long> longs_from_json(const Json& j, const std::string& path) {
  std::vector<long> out;
  for (std::size_t i = 0; i < array_at(j, path).size(); ++i) out.push_back(long_from_json(j[i], at(path, i)));
  return out;
}

Json vector_to_json(const LatticeVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(integer_to_json(x));
  return a;
}

Json rational_to_json(const Rational& x) {
  if (x.get_den() == 1) return integer_to_json(x.get_num());
  return Json(x.get_str());
}

Json rational_vector_to_json(const RationalVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(rational_to_json(x));
  return a;
}

Json matrix_to_json(const IntegerMatrix& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(integer_to_json(m(i, j)));
    a.push_back(std::move(row));
  }
  return a;
}

Json fan_to_json(const Fan& f) {
  Json j;
  j["rank"] = f.rank;
  j["rays"] = Json::array();
  for (const auto& r : f.rays) j["rays"].push_back(vector_to_json(r));
  j["max_cones"] = f.max_cones;
  return j;
}

Fan fan_from_json(const Json& j, const std::string& path) {
  const long rank = long_from_json(field(j, "rank", path), at(path, "rank"));
  if (rank < 1) throw InputError("rank must be positive", at(path, "rank"));
  const std::string rays_path = at(path, "rays");
  const Json& rays_j = array_at(field(j, "rays", path), rays_path);
  std::vector<LatticeVector> rays;
  for (std::size_t i = 0; i < rays_j.size(); ++i) {
    LatticeVector v = lattice_from_json(rays_j[i], at(rays_path, i));
    if (v.size() != static_cast<std::size_t>(rank))
      throw InputError("ray has " + std::to_string(v.size()) + " coordinates, expected " + std::to_string(rank),
                       at(rays_path, i));
    rays.push_back(std::move(v));
  }
  const std::string cones_path = at(path, "max_cones");
  const Json& cones_j = array_at(field(j, "max_cones", path), cones_path);
  std::vector<std::vector<std::size_t>> cones;
  for (std::size_t i = 0; i < cones_j.size(); ++i) {
    std::vector<std::size_t> c;
    for (long x : longs_from_json(cones_j[i], at(cones_path, i))) {
      if (x < 0 || static_cast<std::size_t>(x) >= rays.size())
        throw InputError("ray index " + std::to_string(x) + " out of range", at(cones_path, i));
      c.push_back(static_cast<std::size_t>(x));
    }
    cones.push_back(std::move(c));
  }
  try {
    return Fan::make(static_cast<std::size_t>(rank), std::move(rays), std::move(cones));
  } catch (const InputError&) {
    throw;
  } catch (const Error& e) {
    throw InputError(e.what(), path);
  }
}

Json polytope_to_json(const LatticePolytope& p) {
  Json j;
  j["normals"] = Json::array();
  j["offsets"] = Json::array();
  for (const auto& q : p.inequalities()) {
    j["normals"].push_back(vector_to_json(q.normal));
    j["offsets"].push_back(integer_to_json(q.offset));
  }
  return j;
}

LatticePolytope polytope_from_json(const Json& j, const std::string& path) {
  const std::string np = at(path, "normals"), op = at(path, "offsets");
  const Json& normals = array_at(field(j, "normals", path), np);
  const Json& offsets = array_at(field(j, "offsets", path), op);
  if (normals.size() != offsets.size()) throw InputError("normals and offsets differ in length", path);
  if (normals.empty()) throw InputError("polytope needs at least one inequality", path);
  std::vector<Inequality> q;
  std::size_t dim = 0;
  for (std::size_t i = 0; i < normals.size(); ++i) {
    LatticeVector v = lattice_from_json(normals[i], at(np, i));
    if (i == 0) dim = v.size();
    if (v.size() != dim || dim == 0) throw InputError("normal has the wrong length", at(np, i));
    q.push_back({std::move(v), integer_from_json(offsets[i], at(op, i))});
  }
  return LatticePolytope(dim, std::move(q));
}

DivisorSpec divisor_from_json(const Json& j, const std::string& path) {
  if (!j.is_object()) throw InputError("expected an object", path);
  DivisorSpec d;
  if (j.contains("coeffs")) d.coeffs = integers_from_json(j["coeffs"], at(path, "coeffs"));
  if (j.contains("standard")) d.standard = integers_from_json(j["standard"], at(path, "standard"));
  if (d.coeffs.has_value() == d.standard.has_value())
    throw InputError("divisor needs exactly one of 'coeffs' or 'standard'", path);
  return d;
}

SystemSpec system_from_json(const Json& j, const std::string& path) {
  if (!j.is_object()) throw InputError("expected an object", path);
  SystemSpec s;
  if (j.contains("polytope")) {
    s.polytope = polytope_from_json(j["polytope"], at(path, "polytope"));
  } else {
    s.fan = fan_from_json(field(j, "fan", path), at(path, "fan"));
    s.divisor = divisor_from_json(field(j, "divisor", path), at(path, "divisor"));
  }
  if (j.contains("multiplicities")) {
    s.multiplicities = longs_from_json(j["multiplicities"], at(path, "multiplicities"));
    for (std::size_t i = 0; i < s.multiplicities.size(); ++i)
      if (s.multiplicities[i] < 0) throw InputError("negative multiplicity", at(at(path, "multiplicities"), i));
  }
  return s;
}

Json validation_to_json(const ValidationReport& r) {
  Json j;
  j["valid"] = r.valid;
  j["simplicial"] = r.simplicial;
  j["complete"] = r.complete;
  j["smooth"] = r.smooth;
  j["smooth_cones"] = r.smooth_cones;
  j["error"] = r.error;
  j["samples_checked"] = r.samples_checked;
  return j;
}

Json verdict_to_json(const TransitivityVerdict& v) {
  Json j;
  j["quasi_transitive"] = v.quasi_transitive();
  j["transitive_cones"] = v.transitive_cone_indices;
  if (v.normalized_fan) {
    j["normalized_fan"] = fan_to_json(*v.normalized_fan);
    j["basis_change"] = matrix_to_json(v.basis_change);
    j["ray_order"] = v.ray_order;
  }
  return j;
}

Json root_to_json(const DemazureRoot& r) {
  Json j;
  j["ray"] = r.ray_index;
  j["m"] = vector_to_json(r.m);
  return j;
}

Json capsule_to_json(const CapsuleResult& c) {
  Json j;
  j["vertex"] = vector_to_json(c.vertex);
  j["edge_endpoints"] = Json::array();
  for (const auto& e : c.edge_endpoints) j["edge_endpoints"].push_back(rational_vector_to_json(e));
  j["reflection"] = rational_vector_to_json(c.reflection);
  j["capsule_vertices"] = Json::array();
  for (const auto& e : c.capsule_vertices) j["capsule_vertices"].push_back(rational_vector_to_json(e));
  j["contains_polytope"] = c.contains_polytope;
  j["certified"] = c.certified;
  return j;
}

Json config_to_json(const RankConfig& c) {
  Json j;
  j["mode"] = c.exact ? "exact" : "modular";
  j["prime_bits"] = c.prime_bits;
  j["trials"] = c.trials;
  j["seed"] = c.seed;
  return j;
}

Json report_to_json(const SpecialityReport& r) {
  Json j;
  j["n"] = r.n;
  j["multiplicities"] = r.multiplicities;
  j["h0"] = r.h0;
  j["rank"] = r.rank;
  j["dim"] = r.dim;
  j["vdim"] = r.vdim;
  j["edim"] = r.edim;
  j["tvdim"] = r.tvdim;
  j["tedim"] = r.tedim;
  j["special"] = r.special;
  j["toric_special"] = r.toric_special;
  j["truncation"] = r.truncation;
  j["samples"] = Json::array();
  for (const auto& s : r.samples) j["samples"].push_back({{"prime", s.prime}, {"seed", s.seed}, {"rank", s.rank}});
  j["failure_bound"] = r.failure_bound;
  j["config"] = config_to_json(r.config);
  return j;
}

SpecialityReport report_from_json(const Json& j, const std::string& path) {
  SpecialityReport r;
  auto num = [&](const char* key) { return long_from_json(field(j, key, path), at(path, key)); };
  r.n = static_cast<std::size_t>(num("n"));
  r.multiplicities = longs_from_json(field(j, "multiplicities", path), at(path, "multiplicities"));
  r.h0 = num("h0");
  r.rank = num("rank");
  r.dim = num("dim");
  r.vdim = num("vdim");
  r.edim = num("edim");
  r.tvdim = num("tvdim");
  r.tedim = num("tedim");
  r.special = bool_from_json(field(j, "special", path), at(path, "special"));
  r.toric_special = bool_from_json(field(j, "toric_special", path), at(path, "toric_special"));
  for (long t : longs_from_json(field(j, "truncation", path), at(path, "truncation")))
    r.truncation.push_back(static_cast<std::size_t>(t));
  const std::string sp = at(path, "samples");
  const Json& samples = array_at(field(j, "samples", path), sp);
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const Json& s = samples[i];
    TrialEvidence ev;
    try {
      ev.prime = field(s, "prime", at(sp, i)).get<std::uint64_t>();
      ev.seed = field(s, "seed", at(sp, i)).get<std::uint64_t>();
      ev.rank = field(s, "rank", at(sp, i)).get<std::size_t>();
    } catch (const Json::exception&) {
      throw InputError("malformed sample", at(sp, i));
    }
    r.samples.push_back(ev);
  }
  const Json& fb = field(j, "failure_bound", path);
  if (!fb.is_number()) throw InputError("expected a number", at(path, "failure_bound"));
  r.failure_bound = fb.get<double>();
  const std::string cp = at(path, "config");
  const Json& cfg = field(j, "config", path);
  try {
    r.config.exact = str_from_json(field(cfg, "mode", cp), at(cp, "mode")) == "exact";
    r.config.prime_bits = field(cfg, "prime_bits", cp).get<unsigned>();
    r.config.trials = field(cfg, "trials", cp).get<std::size_t>();
    r.config.seed = field(cfg, "seed", cp).get<std::uint64_t>();
  } catch (const Json::exception&) {
    throw InputError("malformed config", cp);
  }
  return r;
}

Json transcript_to_json(const HypothesisTranscript& t) {
  Json j;
  j["passed"] = t.passed;
  j["children_non_special"] = t.children_non_special;
  j["tvdim_minus"] = t.tvdim_minus;
  j["tvdim_plus"] = t.tvdim_plus;
  j["product_ok"] = t.product_ok;
  j["minus_points_ok"] = t.minus_points_ok;
  j["plus_points_ok"] = t.plus_points_ok;
  j["witness"] = t.witness;
  return j;
}

HypothesisTranscript transcript_from_json(const Json& j, const std::string& path) {
  HypothesisTranscript t;
  auto flag = [&](const char* key) { return bool_from_json(field(j, key, path), at(path, key)); };
  t.passed = flag("passed");
  t.children_non_special = flag("children_non_special");
  t.tvdim_minus = long_from_json(field(j, "tvdim_minus", path), at(path, "tvdim_minus"));
  t.tvdim_plus = long_from_json(field(j, "tvdim_plus", path), at(path, "tvdim_plus"));
  t.product_ok = flag("product_ok");
  t.minus_points_ok = flag("minus_points_ok");
  t.plus_points_ok = flag("plus_points_ok");
  t.witness = str_from_json(field(j, "witness", path), at(path, "witness"));
  return t;
}

Json certificate_to_json(const Certificate& c) {
  Json j;
  j["kind"] = c.kind == Certificate::Kind::Leaf ? "leaf" : "split";
  j["polytope"] = polytope_to_json(c.polytope);
  j["multiplicities"] = c.multiplicities;
  j["h0"] = c.h0;
  j["tvdim"] = c.tvdim;
  j["tedim"] = c.tedim;
  if (c.kind == Certificate::Kind::Leaf) {
    if (c.report) j["report"] = report_to_json(*c.report);
  } else {
    if (c.split) j["split"] = {{"axis", c.split->axis}, {"level", c.split->level}, {"s", c.split->s}};
    j["transcript"] = transcript_to_json(c.transcript);
    if (c.minus) j["minus"] = certificate_to_json(*c.minus);
    if (c.plus) j["plus"] = certificate_to_json(*c.plus);
  }
  return j;
}

Certificate certificate_from_json(const Json& j, const std::string& path) {
  Certificate c;
  const std::string kind = str_from_json(field(j, "kind", path), at(path, "kind"));
  if (kind != "leaf" && kind != "split") throw InputError("kind must be 'leaf' or 'split'", at(path, "kind"));
  c.kind = kind == "leaf" ? Certificate::Kind::Leaf : Certificate::Kind::Split;
  c.polytope = polytope_from_json(field(j, "polytope", path), at(path, "polytope"));
  c.multiplicities = longs_from_json(field(j, "multiplicities", path), at(path, "multiplicities"));
  c.h0 = long_from_json(field(j, "h0", path), at(path, "h0"));
  c.tvdim = long_from_json(field(j, "tvdim", path), at(path, "tvdim"));
  c.tedim = long_from_json(field(j, "tedim", path), at(path, "tedim"));
  if (c.kind == Certificate::Kind::Leaf) {
    c.report = report_from_json(field(j, "report", path), at(path, "report"));
  } else {
    const std::string sp = at(path, "split");
    const Json& s = field(j, "split", path);
    const long axis = long_from_json(field(s, "axis", sp), at(sp, "axis"));
    const long size = long_from_json(field(s, "s", sp), at(sp, "s"));
    if (axis < 0) throw InputError("axis must be >= 0", at(sp, "axis"));
    if (size < 0) throw InputError("s must be >= 0", at(sp, "s"));
    c.split = SplitSpec{static_cast<std::size_t>(axis), long_from_json(field(s, "level", sp), at(sp, "level")),
                        static_cast<std::size_t>(size)};
    c.transcript = transcript_from_json(field(j, "transcript", path), at(path, "transcript"));
    c.minus = std::make_shared<const Certificate>(certificate_from_json(field(j, "minus", path), at(path, "minus")));
    c.plus = std::make_shared<const Certificate>(certificate_from_json(field(j, "plus", path), at(path, "plus")));
  }
  return c;
}

}  // namespace toric::io
