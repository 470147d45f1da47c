#include "toric/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <thread>

#include "toric/catalog.hpp"
#include "toric/json_io.hpp"

namespace toric::cli {

namespace {

using io::Json;

struct Options {
  std::string fan, polytope, system, divisor, certificate, grid, example, cls, mults, vertex, out;
  long axis = 0, level = 1;
  long s = -1;
  std::size_t trials = 5;
  unsigned prime_bits = 61;
  std::optional<std::uint64_t> seed;
  bool exact = false;
  bool points = false;
  std::size_t max_depth = 3;
  std::size_t threads = 0;
};

std::vector<long> parse_list(const std::string& text, const std::string& what) {
  std::vector<long> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  for (;;) {
    const auto comma = text.find(',', start);
    std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    item.erase(0, item.find_first_not_of(' '));
    item.erase(item.find_last_not_of(' ') + 1);
    long v = 0;
    auto [p, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || p != item.data() + item.size())
      throw InputError("bad integer '" + item + "' in --" + what, what);
    out.push_back(v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("TORIC_LINSYS_SEED")) {
    std::uint64_t v = 0;
    const std::string s(env);
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc() && p == s.data() + s.size() && !s.empty()) return v;
    throw InputError("TORIC_LINSYS_SEED is not an unsigned integer", "TORIC_LINSYS_SEED");
  }
  return 1;
}

RankConfig rank_config(const Options& o) {
  RankConfig c;
  c.trials = o.trials;
  c.prime_bits = o.prime_bits;
  c.seed = o.seed ? *o.seed : default_seed();
  c.exact = o.exact;
  if (c.prime_bits < 8 || c.prime_bits > 63) throw InputError("--prime-bits must be in 8..63", "prime-bits");
  if (c.trials == 0) throw InputError("--trials must be positive", "trials");
  return c;
}

Fan load_fan(const Options& o) {
  Fan f;
  if (!o.fan.empty())
    f = io::fan_from_json(io::read_file(o.fan));
  else if (!o.example.empty())
    f = catalog::parse_example(o.example).fan;
  else
    throw InputError("need --fan or --example", "fan");
  require_valid(f);
  return f;
}

CoxPresentation presentation_of(const Fan& f) {
  TransitivityVerdict v = transitive_cones(f);
  if (!v.quasi_transitive()) throw InputError("fan is not quasi-transitive", "fan");
  return build_presentation(v);
}

StandardFormDivisor standard_divisor(const CoxPresentation& cp, const io::DivisorSpec& d) {
  if (d.standard) {
    if (d.standard->size() != cp.r - cp.n)
      throw InputError("standard divisor needs " + std::to_string(cp.r - cp.n) + " coefficients",
                       "divisor/standard");
    return {*d.standard};
  }
  if (d.coeffs->size() != cp.r)
    throw InputError("divisor needs " + std::to_string(cp.r) + " coefficients", "divisor/coeffs");
  TDivisor normalized;
  for (std::size_t k = 0; k < cp.r; ++k) normalized.coeffs.push_back((*d.coeffs)[cp.ray_order[k]]);
  return to_standard_form(cp, normalized);
}

std::optional<io::DivisorSpec> divisor_option(const Options& o, const std::optional<catalog::Entry>& entry) {
  if (!o.divisor.empty()) return io::divisor_from_json(io::read_file(o.divisor));
  std::vector<Integer> cls;
  if (!o.cls.empty()) {
    for (long v : parse_list(o.cls, "class")) cls.emplace_back(v);
  } else if (entry && entry->default_class) {
    cls = *entry->default_class;
  } else {
    return std::nullopt;
  }
  io::DivisorSpec d;
  d.standard = std::move(cls);
  return d;
}

struct Resolved {
  LatticePolytope polytope;
  std::vector<long> mults;
  std::optional<StandardFormDivisor> standard;
};

Resolved from_spec(const io::SystemSpec& spec) {
  Resolved r;
  r.mults = spec.multiplicities;
  if (spec.polytope) {
    r.polytope = *spec.polytope;
    return r;
  }
  require_valid(*spec.fan);
  CoxPresentation cp = presentation_of(*spec.fan);
  r.standard = standard_divisor(cp, *spec.divisor);
  r.polytope = section_polytope(cp, *r.standard).polytope;
  return r;
}

// --system, or --example/--fan with --class/--divisor, or a polytope; plus --mults.
Resolved resolve_system(const Options& o, bool need_system) {
  if (!o.system.empty()) {
    Resolved r = from_spec(io::system_from_json(io::read_file(o.system)));
    if (!o.mults.empty()) r.mults = parse_list(o.mults, "mults");
    return r;
  }
  std::optional<catalog::Entry> entry;
  if (!o.example.empty()) entry = catalog::parse_example(o.example);
  Resolved r;
  r.mults = parse_list(o.mults, "mults");
  for (long m : r.mults)
    if (m < 0) throw InputError("negative multiplicity", "mults");
  auto div = divisor_option(o, entry);
  if (!o.polytope.empty()) {
    r.polytope = io::polytope_from_json(io::read_file(o.polytope));
  } else if (div && (entry || !o.fan.empty())) {
    Fan f = load_fan(o);
    CoxPresentation cp = presentation_of(f);
    r.standard = standard_divisor(cp, *div);
    r.polytope = section_polytope(cp, *r.standard).polytope;
  } else if (entry && entry->polytope) {
    r.polytope = *entry->polytope;
  } else {
    throw InputError(need_system ? "need --system, --polytope, or a fan with --class/--divisor"
                                 : "need a polytope",
                     "system");
  }
  return r;
}

LatticePolytope resolve_polytope(const Options& o) {
  if (!o.polytope.empty()) return io::polytope_from_json(io::read_file(o.polytope));
  return resolve_system(o, false).polytope;
}

void emit(const Options& o, const Json& j, std::ostream& out) {
  const std::string text = j.dump(2);
  out << text << "\n";
  if (!o.out.empty()) {
    std::ofstream f(o.out);
    if (!f) throw InputError("cannot write " + o.out, "out");
    f << text << "\n";
  }
}

int cmd_validate(const Options& o, std::ostream& out, std::ostream& err) {
  Fan f;
  if (!o.fan.empty())
    f = io::fan_from_json(io::read_file(o.fan));
  else if (!o.example.empty())
    f = catalog::parse_example(o.example).fan;
  else
    throw InputError("need --fan or --example", "fan");
  ValidationOptions vo;
  vo.seed = o.seed ? *o.seed : default_seed();
  ValidationReport r = validate_fan(f, vo);
  emit(o, io::validation_to_json(r), out);
  err << (r.valid ? "valid fan" : "invalid fan: " + r.error) << "\n";
  return r.valid ? kOk : kInputError;
}

int cmd_transitive(const Options& o, std::ostream& out, std::ostream& err) {
  TransitivityVerdict v = transitive_cones(load_fan(o));
  emit(o, io::verdict_to_json(v), out);
  err << v.transitive_cone_indices.size() << " transitive maximal cone(s)\n";
  return kOk;
}

int cmd_roots(const Options& o, std::ostream& out, std::ostream& err) {
  Fan f = load_fan(o);
  auto roots = demazure_roots(f);
  Json j;
  j["roots"] = Json::array();
  std::vector<std::size_t> per_ray(f.rays.size(), 0);
  for (const auto& r : roots) {
    j["roots"].push_back(io::root_to_json(r));
    ++per_ray[r.ray_index];
  }
  j["count"] = roots.size();
  j["per_ray"] = per_ray;
  j["aut_dimension"] = f.rank + roots.size();
  TransitivityVerdict v = transitive_cones(f);
  if (v.normalized_fan)
    j["outside_sigma_check"] = roots_outside_sigma_check(v, demazure_roots(*v.normalized_fan));
  else
    j["outside_sigma_check"] = nullptr;
  emit(o, j, out);
  err << roots.size() << " Demazure roots\n";
  return kOk;
}

int cmd_capsule(const Options& o, std::ostream& out, std::ostream& err) {
  LatticePolytope p = resolve_polytope(o);
  NormalFan nf = normal_fan(p);
  auto one = [&](const LatticeVector& v) {
    Json j = io::capsule_to_json(vertex_capsule(p, v));
    const auto it = std::find(nf.vertices.begin(), nf.vertices.end(), to_rational(v));
    const bool fan_says = cone_is_transitive(nf.fan, static_cast<std::size_t>(it - nf.vertices.begin()));
    j["fan_criterion"] = fan_says;
    j["agrees"] = fan_says == j["contains_polytope"].get<bool>();
    return j;
  };
  if (!o.vertex.empty()) {
    std::vector<Integer> c;
    for (long x : parse_list(o.vertex, "vertex")) c.emplace_back(x);
    if (c.size() != p.dim()) throw InputError("vertex has the wrong dimension", "vertex");
    emit(o, one(LatticeVector(c)), out);
    return kOk;
  }
  Json all = Json::array();
  std::size_t agree = 0;
  for (const auto& rv : p.vertices()) {
    std::vector<Integer> c;
    for (const auto& x : rv) {
      if (x.get_den() != 1) throw InputError("polytope has a non-lattice vertex", "polytope");
      c.push_back(x.get_num());
    }
    Json j = one(LatticeVector(c));
    agree += j["agrees"].get<bool>() ? 1 : 0;
    all.push_back(std::move(j));
  }
  emit(o, Json{{"vertices", all}, {"agreement", agree}, {"total", all.size()}}, out);
  err << agree << "/" << all.size() << " vertices agree with the fan criterion\n";
  return kOk;
}

int cmd_symmetries(const Options& o, std::ostream& out, std::ostream& err) {
  auto syms = fan_symmetries(load_fan(o));
  Json j;
  j["count"] = syms.size();
  j["matrices"] = Json::array();
  for (const auto& m : syms) j["matrices"].push_back(io::matrix_to_json(m));
  emit(o, j, out);
  err << syms.size() << " fan symmetries\n";
  return kOk;
}

int cmd_cox(const Options& o, std::ostream& out, std::ostream& err) {
  Fan f = load_fan(o);
  CoxPresentation cp = presentation_of(f);
  Json j;
  j["n"] = cp.n;
  j["r"] = cp.r;
  j["class_rank"] = cp.class_rank();
  j["P"] = io::matrix_to_json(cp.P);
  j["Q"] = io::matrix_to_json(cp.Q);
  j["ray_order"] = cp.ray_order;
  j["normalized_fan"] = io::fan_to_json(cp.fan);
  j["irrelevant_generators"] = irrelevant_generators(cp.fan);
  RayIndexPartition part = ray_index_partition(cp);
  j["ray_index_partition"] = {{"I_sets", part.I_sets}, {"I", part.I}};
  emit(o, j, out);
  err << "class group rank " << cp.class_rank() << "\n";
  return kOk;
}

int cmd_h0(const Options& o, std::ostream& out, std::ostream& err) {
  Fan f = load_fan(o);
  std::optional<catalog::Entry> entry;
  if (!o.example.empty()) entry = catalog::parse_example(o.example);
  auto div = divisor_option(o, entry);
  if (!div) throw InputError("need --divisor or --class", "divisor");
  Json j;
  LatticePolytope poly;
  TransitivityVerdict v = transitive_cones(f);
  if (v.quasi_transitive()) {
    CoxPresentation cp = build_presentation(v);
    StandardFormDivisor sd = standard_divisor(cp, *div);
    j["standard"] = Json::array();
    for (const auto& c : sd.coeffs) j["standard"].push_back(io::integer_to_json(c));
    poly = section_polytope(cp, sd).polytope;
  } else {
    if (!div->coeffs) throw InputError("standard form needs a quasi-transitive fan; pass coeffs", "divisor");
    if (div->coeffs->size() != f.rays.size()) throw InputError("divisor length does not match", "divisor/coeffs");
    poly = sections_of(f, TDivisor{*div->coeffs});
    j["standard"] = nullptr;
  }
  auto pts = lattice_points(poly);
  j["h0"] = pts.size();
  j["polytope"] = io::polytope_to_json(poly);
  if (o.points) {
    j["points"] = Json::array();
    for (const auto& m : pts) j["points"].push_back(io::vector_to_json(m));
  }
  emit(o, j, out);
  err << "h0 = " << pts.size() << "\n";
  return kOk;
}

int cmd_dim(const Options& o, std::ostream& out, std::ostream& err) {
  Resolved r = resolve_system(o, true);
  SpecialityReport rep = analyze(LinearSystem::on_polytope(r.polytope, r.mults), rank_config(o));
  emit(o, io::report_to_json(rep), out);
  err << "dim " << rep.dim << ", edim " << rep.edim << ", tedim " << rep.tedim
      << (rep.toric_special ? " (toric special)" : "") << "\n";
  return kOk;
}

int cmd_split(const Options& o, std::ostream& out, std::ostream& err) {
  Resolved r = resolve_system(o, false);
  const LatticePolytope& p = r.polytope;
  if (o.axis < 0 || static_cast<std::size_t>(o.axis) >= p.dim()) throw InputError("--axis out of range", "axis");
  auto box = bounding_box(p);
  if (!box || o.level < 1 || o.level > box->hi[o.axis])
    throw InputError("--level must lie in 1..width along the axis", "level");
  SlabPieces pieces = split_polytope(p, static_cast<std::size_t>(o.axis), o.level);
  auto piece = [](const LatticePolytope& q) {
    return Json{{"polytope", io::polytope_to_json(q)}, {"points", lattice_points(q).size()}};
  };
  Json j;
  j["axis"] = o.axis;
  j["level"] = o.level;
  j["pieces"] = {{"minus_cm1", piece(pieces.minus_cm1)},
                 {"minus_c", piece(pieces.minus_c)},
                 {"plus_cm1", piece(pieces.plus_cm1)},
                 {"plus_c", piece(pieces.plus_c)}};
  if (o.s >= 0) {
    if (static_cast<std::size_t>(o.s) > r.mults.size()) throw InputError("--s exceeds the number of points", "s");
    SplitSpec sp{static_cast<std::size_t>(o.axis), o.level, static_cast<std::size_t>(o.s)};
    RankConfig cfg = rank_config(o);
    std::vector<long> lo(r.mults.begin(), r.mults.begin() + o.s), hi(r.mults.begin() + o.s, r.mults.end());
    SpecialityReport rm = analyze(LinearSystem::on_polytope(minus_child_polytope(p, sp), lo), cfg);
    SpecialityReport rp = analyze(LinearSystem::on_polytope(plus_child_polytope(p, sp), hi), cfg);
    HypothesisTranscript t =
        check_hypotheses(p, sp, r.mults, {rm.tvdim, !rm.toric_special}, {rp.tvdim, !rp.toric_special});
    j["minus_report"] = io::report_to_json(rm);
    j["plus_report"] = io::report_to_json(rp);
    j["transcript"] = io::transcript_to_json(t);
    err << (t.passed ? "hypotheses hold" : "hypotheses fail: " + t.witness) << "\n";
  }
  emit(o, j, out);
  return kOk;
}

int cmd_certify(const Options& o, std::ostream& out, std::ostream& err) {
  Resolved r = resolve_system(o, true);
  CertifyOptions co;
  co.max_depth = o.max_depth;
  co.rank = rank_config(o);
  CertifyResult res = certify(r.polytope, r.mults, co);
  Json j;
  j["status"] = res.certified ? "certified" : "inconclusive";
  j["nodes_explored"] = res.nodes_explored;
  if (res.certified)
    j["certificate"] = io::certificate_to_json(*res.certificate);
  else
    j["reason"] = res.reason;
  emit(o, j, out);
  err << (res.certified ? "toric non-special (certified)" : "inconclusive: " + res.reason) << "\n";
  return res.certified ? kOk : kInconclusive;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.certificate.empty()) throw InputError("need --certificate", "certificate");
  Json doc = io::read_file(o.certificate);
  // accept both a bare certificate and certify's full output
  const Json& cj = doc.contains("certificate") ? doc["certificate"] : doc;
  Certificate cert = io::certificate_from_json(cj);
  RankConfig cfg = rank_config(o);
  cfg.seed = modp::mix(cfg.seed ^ 0xf5e5);
  VerifyResult v = verify_certificate(cert, cfg);
  Json j;
  j["ok"] = v.ok;
  j["failure"] = v.failure;
  j["seed"] = cfg.seed;
  emit(o, j, out);
  err << (v.ok ? "certificate verified" : "verification failed: " + v.failure) << "\n";
  return v.ok ? kOk : kVerificationFailed;
}

struct SweepTask {
  Json label;
  io::SystemSpec spec;
};

std::vector<SweepTask> sweep_tasks(const Json& grid) {
  std::vector<SweepTask> tasks;
  if (!grid.is_object()) throw InputError("sweep grid must be an object", "grid");
  if (grid.contains("systems")) {
    const Json& sys = grid["systems"];
    if (!sys.is_array()) throw InputError("expected an array", "grid/systems");
    for (std::size_t i = 0; i < sys.size(); ++i)
      tasks.push_back({Json{{"system", i}}, io::system_from_json(sys[i], "grid/systems/" + std::to_string(i))});
  }
  if (grid.contains("grids")) {
    const Json& gs = grid["grids"];
    if (!gs.is_array()) throw InputError("expected an array", "grid/grids");
    for (std::size_t g = 0; g < gs.size(); ++g) {
      const std::string path = "grid/grids/" + std::to_string(g);
      const Json& gj = gs[g];
      if (!gj.is_object() || !gj.contains("example") || !gj["example"].is_string())
        throw InputError("grid entry needs an 'example' string", path);
      const std::string ex = gj["example"].get<std::string>();
      catalog::Entry entry = catalog::parse_example(ex);
      if (!gj.contains("classes") || !gj["classes"].is_array() || !gj.contains("mults") || !gj["mults"].is_array())
        throw InputError("grid entry needs 'classes' and 'mults' arrays", path);
      for (std::size_t c = 0; c < gj["classes"].size(); ++c)
        for (std::size_t m = 0; m < gj["mults"].size(); ++m) {
          io::SystemSpec spec;
          spec.fan = entry.fan;
          io::DivisorSpec d;
          std::vector<Integer> cls;
          for (long v : io::longs_from_json(gj["classes"][c], path + "/classes/" + std::to_string(c)))
            cls.emplace_back(v);
          d.standard = std::move(cls);
          spec.divisor = d;
          spec.multiplicities = io::longs_from_json(gj["mults"][m], path + "/mults/" + std::to_string(m));
          tasks.push_back({Json{{"example", ex}, {"class", gj["classes"][c]}, {"mults", gj["mults"][m]}},
                           std::move(spec)});
        }
    }
  }
  if (tasks.empty()) throw InputError("sweep grid has no tasks", "grid");
  return tasks;
}

int cmd_sweep(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.grid.empty()) throw InputError("need --grid", "grid");
  std::vector<SweepTask> tasks = sweep_tasks(io::read_file(o.grid));
  const RankConfig base = rank_config(o);
  std::ofstream file;
  if (!o.out.empty()) {
    file.open(o.out);
    if (!file) throw InputError("cannot write " + o.out, "out");
  }

  std::vector<std::optional<Json>> done(tasks.size());
  std::size_t next_to_write = 0;
  std::mutex mu;
  Json inline_records = Json::array();
  auto write_ready = [&] {
    while (next_to_write < done.size() && done[next_to_write]) {
      if (file.is_open())
        file << done[next_to_write]->dump() << "\n";
      else
        inline_records.push_back(*done[next_to_write]);
      ++next_to_write;
    }
  };

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      Json rec;
      rec["task"] = i;
      rec["input"] = tasks[i].label;
      RankConfig cfg = base;
      cfg.seed = modp::mix(base.seed ^ modp::mix(i + 0x100));
      try {
        Resolved r = from_spec(tasks[i].spec);
        SpecialityReport rep = analyze(LinearSystem::on_polytope(r.polytope, r.mults), cfg);
        rec["report"] = io::report_to_json(rep);
      } catch (const GenericityError& e) {
        rec["error"] = e.what();
        rec["exit_code"] = static_cast<int>(kGenericity);
      } catch (const std::exception& e) {
        rec["error"] = e.what();
        rec["exit_code"] = static_cast<int>(kInputError);
      }
      std::lock_guard<std::mutex> lock(mu);
      done[i] = std::move(rec);
      write_ready();
    }
  };
  std::size_t threads = o.threads ? o.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, tasks.size());
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  std::size_t ok = 0, failed = 0, special = 0, toric_special = 0;
  for (const auto& rec : done) {
    if (rec->contains("report")) {
      ++ok;
      special += (*rec)["report"]["special"].get<bool>();
      toric_special += (*rec)["report"]["toric_special"].get<bool>();
    } else {
      ++failed;
    }
  }
  Json summary;
  summary["tasks"] = tasks.size();
  summary["ok"] = ok;
  summary["errors"] = failed;
  summary["special"] = special;
  summary["toric_special"] = toric_special;
  summary["seed"] = base.seed;
  if (file.is_open())
    summary["out"] = o.out;
  else
    summary["records"] = inline_records;
  out << summary.dump(2) << "\n";
  err << ok << " systems analyzed, " << special << " special, " << toric_special << " toric special, " << failed
      << " errors\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Linear systems of multiple points on quasi-transitive toric varieties", "toric-linsys"};
  app.require_subcommand(1);
  Options o;

  auto fan_in = [&](CLI::App* s) {
    s->add_option("--fan", o.fan, "fan JSON file");
    s->add_option("--example", o.example, "pn:<n>, p1n:<n>, hirzebruch:<a>, bl3p2, box:<a1>x<a2>...");
  };
  auto system_in = [&](CLI::App* s) {
    fan_in(s);
    s->add_option("--system", o.system, "system JSON file");
    s->add_option("--polytope", o.polytope, "polytope JSON file");
    s->add_option("--divisor", o.divisor, "divisor JSON file");
    s->add_option("--class", o.cls, "standard-form class, comma separated");
    s->add_option("--mults", o.mults, "multiplicities, comma separated");
  };
  auto rank_opts = [&](CLI::App* s) {
    s->add_option("--trials", o.trials, "random specializations")->capture_default_str();
    s->add_option("--prime-bits", o.prime_bits, "prime size in bits")->capture_default_str();
    s->add_option("--seed", o.seed, "seed (default $TORIC_LINSYS_SEED or 1)");
    s->add_flag("--exact", o.exact, "rank over Q at random integer points");
  };
  auto out_opt = [&](CLI::App* s) { s->add_option("--out", o.out, "also write the JSON output here"); };

  std::map<std::string, int (*)(const Options&, std::ostream&, std::ostream&)> commands;
  auto add = [&](const char* name, const char* help, int (*fn)(const Options&, std::ostream&, std::ostream&)) {
    commands[name] = fn;
    CLI::App* s = app.add_subcommand(name, help);
    out_opt(s);
    return s;
  };

  auto* s = add("validate", "check fan invariants", cmd_validate);
  fan_in(s);
  s->add_option("--seed", o.seed, "seed for the completeness sampler");
  fan_in(add("transitive", "transitive maximal cones and normalization", cmd_transitive));
  fan_in(add("roots", "Demazure roots", cmd_roots));
  s = add("capsule", "vertex capsules versus the fan criterion", cmd_capsule);
  system_in(s);
  s->add_option("--vertex", o.vertex, "vertex, comma separated");
  fan_in(add("symmetries", "unimodular automorphisms of the fan", cmd_symmetries));
  fan_in(add("cox", "Cox presentation", cmd_cox));
  s = add("h0", "global sections of a divisor", cmd_h0);
  fan_in(s);
  s->add_option("--divisor", o.divisor, "divisor JSON file");
  s->add_option("--class", o.cls, "standard-form class, comma separated");
  s->add_flag("--points", o.points, "list the lattice points");
  s = add("dim", "dimension and expected dimensions of a linear system", cmd_dim);
  system_in(s);
  rank_opts(s);
  s = add("split", "slab decomposition along a coordinate hyperplane", cmd_split);
  system_in(s);
  rank_opts(s);
  s->add_option("--axis", o.axis, "0-based axis")->required();
  s->add_option("--level", o.level, "level c >= 1")->required();
  s->add_option("--s", o.s, "points on the minus side; enables the hypothesis check");
  s = add("certify", "search for a degeneration certificate", cmd_certify);
  system_in(s);
  rank_opts(s);
  s->add_option("--max-depth", o.max_depth, "split depth limit")->capture_default_str();
  s = add("verify", "re-check a certificate with fresh samples", cmd_verify);
  s->add_option("--certificate", o.certificate, "certificate JSON file")->required();
  rank_opts(s);
  s = add("sweep", "analyze a batch of systems", cmd_sweep);
  s->add_option("--grid", o.grid, "batch JSON file")->required();
  rank_opts(s);
  s->add_option("--threads", o.threads, "worker threads (default: all cores)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << Json{{"help", app.help()}}.dump(2) << "\n";
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << Json{{"help", app.help("", CLI::AppFormatMode::All)}}.dump(2) << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    out << Json{{"error", e.what()}, {"path", "args"}}.dump(2) << "\n";
    err << e.what() << "\n";
    return kInputError;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    return commands.at(name)(o, out, err);
  } catch (const GenericityError& e) {
    out << Json{{"error", e.what()}, {"path", ""}}.dump(2) << "\n";
    err << e.what() << "\n";
    return kGenericity;
  } catch (const InputError& e) {
    out << Json{{"error", e.what()}, {"path", e.path()}}.dump(2) << "\n";
    err << "error: " << e.what() << (e.path().empty() ? "" : " (at " + e.path() + ")") << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    out << Json{{"error", e.what()}, {"path", ""}}.dump(2) << "\n";
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace toric::cli
