#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>

#include "suite.hpp"
#include "tangentfree/codes.hpp"
#include "tangentfree/constructions.hpp"
#include "tangentfree/error.hpp"
#include "tangentfree/exterior.hpp"
#include "tangentfree/search.hpp"

namespace tfs {

using namespace tangentfree;

namespace {

/// The JSON document every subcommand prints.
class Report {
 public:
  explicit Report(const std::string& command) {
    doc_["command"] = command;
    doc_["parameters"] = Json::object();
    doc_["field"] = nullptr;
    doc_["results"] = Json::object();
    doc_["verdicts"] = Json::array();
  }

  Json& parameters() { return doc_["parameters"]; }
  Json& results() { return doc_["results"]; }
  void field(const Field& f) { doc_["field"] = to_json(f.spec()); }

  void verdict(const std::string& check, bool pass) {
    doc_["verdicts"].push_back(Json{{"check", check}, {"verdict", pass ? "PASS" : "FAIL"}});
    ok_ = ok_ && pass;
  }

  /// Re-runs the tangent scan on the set before it is emitted.
  Json checked(const std::string& what, const PointSet& s) {
    const bool valid = is_set_without_tangents(s);
    doc_["verdicts"].push_back(Json{{"check", what}, {"verdict", valid ? "VALID" : "INVALID"}});
    ok_ = ok_ && valid;
    return to_json(s);
  }

  bool ok() const { return ok_; }

  std::string finish(double seconds) {
    doc_["wall_time"] = seconds;
    return doc_.dump(2);
  }

 private:
  Json doc_;
  bool ok_ = true;
};

Json read_json(const std::string& path, std::istream& in) {
  if (path == "-") return Json::parse(in);
  std::ifstream f(path);
  if (!f) throw Error(ErrorCode::Format, "cannot open " + path);
  return Json::parse(f);
}

/// A PointSet document, or a report of this tool carrying one.
Json set_document(const Json& j) {
  if (j.is_object() && !j.contains("points") && j.contains("results")) {
    const Json& r = j.at("results");
    for (const char* key : {"set", "witness", "residual"})
      if (r.contains(key) && r.at(key).is_object()) return r.at(key);
  }
  return j;
}

PointSet load_set(const std::string& path, std::istream& in) { return point_set_from_json(set_document(read_json(path, in))); }

ConicModel canonical_model(const PlanePtr& p) { return ConicModel(p, Conic::canonical(p->field())); }

SearchOptions search_options(int workers, bool serial) {
  SearchOptions o;
  o.workers = workers;
  o.parallel = !serial;
  return o;
}

struct Args {
  std::uint32_t q = 0;
  int n = 0;
  int cap = 0;
  int workers = 0;
  bool serial = false;
  bool long_mode = false;
  double budget = 4 * 3600.0;
  std::string name;
  std::string set_path;
  std::string erased_path;
  std::optional<Elem> a;
  int r = 1;
  std::optional<int> point;
  std::optional<std::uint64_t> seed;
  bool all_lines = false;
  bool no3 = false;
  bool list = false;
  int max_i = 0;
  std::string level = "quick";
};

void field_info(const Args& a, Report& rep) {
  const Field f = Field::of_order(a.q);
  rep.field(f);
  auto& r = rep.results();
  r["q"] = f.q();
  r["p"] = f.p();
  r["h"] = f.h();
  r["generator"] = f.generator();
  if (f.odd()) {
    r["smallest_nonsquare"] = f.smallest_nonsquare();
    r["valid_a"] = find_valid_a(f);
  }
  // Multiplicative order of the generator must be q - 1.
  bool primitive = true;
  for (std::uint64_t e = 1; e + 1 < f.q(); ++e)
    if (f.pow(f.generator(), e) == 1) primitive = false;
  rep.verdict("generator is primitive", primitive);
}

void construct(const Args& a, Report& rep) {
  const auto p = Plane::of_order(a.q);
  rep.field(p->field());
  rep.parameters()["name"] = a.name;
  Construction c{PointSet(p), {}};
  if (a.name == "trivial") {
    c = trivial(p);
  } else if (a.name == "two-conics") {
    Elem v = 0;
    if (a.a) {
      v = *a.a;
    } else {
      const auto valid = find_valid_a(p->field());
      if (valid.empty()) throw Error(ErrorCode::InvalidA, "no valid a for q = " + std::to_string(a.q));
      v = valid.front();
    }
    rep.parameters()["a"] = v;
    c = two_conics(p, v);
  } else if (a.name == "interior") {
    c = interior_points(canonical_model(p));
  } else if (a.name == "punctured") {
    const ConicModel m = canonical_model(p);
    const int pt = a.point ? *a.point : m.points_of_class(PointClass::Exterior).front();
    rep.parameters()["r"] = a.r;
    rep.parameters()["point"] = pt;
    c = punctured_interior(m, pt, a.r, a.seed ? std::optional<unsigned>(static_cast<unsigned>(*a.seed)) : std::nullopt);
  } else if (a.name == "frobenius") {
    c = frobenius_graph(p);
  } else if (a.name == "trace") {
    c = trace_graph(p);
  } else if (a.name == "ten-set") {
    if (a.q != 5) throw Error(ErrorCode::InvalidArgument, "ten-set is defined for q = 5");
    const TenSetReport t = pg25_ten_set();
    c = {t.set, certify("ten_set", t.set, 10)};
  }
  rep.results()["set"] = rep.checked(c.cert.name, c.set);
  rep.results()["certificate"] = to_json(c.cert);
  rep.verdict("certificate " + c.cert.status(), c.cert.valid());
}

void verify(const Args& a, std::istream& in, Report& rep) {
  const PointSet s = load_set(a.set_path, in);
  rep.field(s.plane().field());
  const Spectrum sp = spectrum(s);
  auto& r = rep.results();
  r["size"] = s.size();
  r["spectrum"] = format_spectrum(sp);
  r["max_secant"] = sp.max_secant();
  const bool without = is_set_without_tangents(s);
  r["status"] = without ? "VALID" : "INVALID";
  if (without) {
    r["trivial"] = is_trivial_set(s);
    if (s.size() == 10) r["desargues"] = verify_desargues(s);
    const double bound = size_lower_bound(s.plane().q());
    r["above_size_bound"] = s.size() >= bound;
    if (s.plane().field().odd()) rep.verdict("size bound", s.size() >= bound);
  }
  rep.verdict("counting identities", satisfies_counting_identities(sp, s.size(), s.plane().q()));
  rep.checked("set", s);
}

void spectrum_cmd(const Args& a, std::istream& in, Report& rep) {
  if (!a.set_path.empty()) {
    const PointSet s = load_set(a.set_path, in);
    rep.field(s.plane().field());
    rep.results()["spectrum"] = format_spectrum(spectrum(s));
    rep.results()["counts"] = spectrum(s).counts;
    return;
  }
  if (a.q == 0 || a.n == 0 || a.max_i < 2) throw CLI::ValidationError("spectrum", "need --set or --q, --n and --max-i");
  rep.parameters()["n"] = a.n;
  rep.parameters()["max_i"] = a.max_i;
  rep.results()["solutions"] = spectrum_solutions(a.n, a.q, a.max_i);
}

void search_min(const Args& a, Report& rep) {
  const auto p = Plane::of_order(a.q);
  rep.field(p->field());
  SearchOptions o = search_options(a.workers, a.serial);
  if (a.q > 7 && !a.long_mode) throw CLI::ValidationError("search-min", "q > 7 needs --long");
  MinSearchResult s;
  std::optional<PointSet> best_known;
  if (a.long_mode) {
    rep.parameters()["long"] = true;
    rep.parameters()["budget"] = a.budget;
    if (a.cap > 0) {
      o.time_budget = a.budget;
      s = min_tangent_free(p, a.cap, o);
    } else {
      ExtendedResult e = u_extended(p, a.budget, o);
      s = std::move(e.search);
      best_known = std::move(e.best_known);
    }
  } else {
    s = min_tangent_free(p, a.cap > 0 ? a.cap : 2 * static_cast<int>(a.q), o);
  }
  rep.parameters()["cap"] = s.cap;
  auto& r = rep.results();
  r["u"] = s.found ? Json(s.u) : Json();
  r["witness"] = s.witness ? rep.checked("witness", *s.witness) : Json();
  r["nodes_expanded"] = s.nodes;
  r["verified_lower_bound"] = s.verified_lower_bound;
  r["budget_exceeded"] = s.budget_exceeded;
  if (s.budget_exceeded && best_known) r["best_known"] = rep.checked("best known", *best_known);
  if (s.witness) rep.verdict("witness size equals u", s.witness->size() == s.u);
}

std::map<std::string, long> spectrum_histogram(const std::vector<PointSet>& sets) {
  std::map<std::string, long> h;
  for (const auto& s : sets) ++h[format_spectrum(spectrum(s))];
  return h;
}

void enumerate_cmd(const Args& a, Report& rep) {
  const auto p = Plane::of_order(a.q);
  rep.field(p->field());
  rep.parameters()["n"] = a.n;
  const auto sets = enumerate_tangent_free(p, a.n, search_options(a.workers, a.serial));
  auto& r = rep.results();
  r["count"] = sets.size();
  Json hist = Json::object();
  for (const auto& [k, v] : spectrum_histogram(sets)) hist[k] = v;
  r["spectra"] = hist;
  bool all = true;
  for (const auto& s : sets) all = all && is_set_without_tangents(s) && s.size() == a.n;
  rep.verdict("every set is without tangents", all);
  if (a.list) {
    Json arr = Json::array();
    for (const auto& s : sets) arr.push_back(s.members());
    r["sets"] = arr;
  }
}

void classify_cmd(const Args& a, Report& rep) {
  const auto p = Plane::of_order(a.q);
  rep.field(p->field());
  rep.parameters()["n"] = a.n;
  const auto sets = enumerate_tangent_free(p, a.n, search_options(a.workers, a.serial));
  const auto group = PglGroup::make(p);
  const auto reps = classify_up_to_pgl(*group, sets);
  auto& r = rep.results();
  r["group_order"] = group->order();
  r["sets"] = sets.size();
  Json classes = Json::array();
  long total = 0;
  for (const auto& o : reps) {
    total += o.class_size;
    classes.push_back(Json{{"representative", rep.checked("representative", o.canonical)},
                           {"spectrum", format_spectrum(spectrum(o.canonical))},
                           {"trivial", is_trivial_set(o.canonical)},
                           {"stabilizer_order", o.stabilizer_order},
                           {"class_size", o.class_size}});
  }
  r["classes"] = classes;
  rep.verdict("class sizes add up", total == static_cast<long>(sets.size()));
  bool orbit_stab = true;
  for (const auto& o : reps)
    orbit_stab = orbit_stab && static_cast<std::size_t>(o.class_size * o.stabilizer_order) == group->order();
  rep.verdict("orbit-stabilizer", orbit_stab);
}

void exterior_extend(const Args& a, Report& rep) {
  const auto p = Plane::of_order(a.q);
  rep.field(p->field());
  const ConicModel m = canonical_model(p);
  const Elem av = a.a ? *a.a : p->field().smallest_nonsquare();
  rep.parameters()["a"] = av;
  const ExteriorSetReport e = find_extenders(m, line_z_equals(*p, av));
  auto& r = rep.results();
  r["report"] = to_json(e);
  rep.verdict("dichotomy", e.dichotomy_holds);
  if (a.all_lines) {
    rep.parameters()["all_lines"] = true;
    const auto d = verify_extension_dichotomy(p, 0, 1, true);
    r["configurations"] = d.configurations;
    rep.verdict("dichotomy on every external line", d.holds && d.line_points_extend);
  }
}

void exterior_clique(const Args& a, Report& rep) {
  const auto p = Plane::of_order(a.q);
  rep.field(p->field());
  rep.parameters()["no3col"] = a.no3;
  const ConicModel m = canonical_model(p);
  CliqueOptions o;
  o.parallel = !a.serial;
  o.workers = a.workers;
  const auto sets = exterior_clique_search(m, a.no3, o);
  Json arr = Json::array();
  int non_collinear = 0;
  std::optional<PointSet> union_witness;
  for (const auto& s : sets) {
    const bool col = is_collinear(s);
    const bool uni = conic_union_check(m, s);
    non_collinear += !col;
    if (uni && !union_witness) {
      union_witness = m.points();
      for (int pt : s.members()) union_witness->insert(pt);
    }
    arr.push_back(Json{{"points", s.members()}, {"collinear", col}, {"tangent_free_union", uni}});
  }
  auto& r = rep.results();
  r["count"] = sets.size();
  r["non_collinear"] = non_collinear;
  r["sets"] = arr;
  if (union_witness) r["union_witness"] = rep.checked("conic union", *union_witness);
  if (a.q % 4 == 1) rep.verdict("all exterior sets are collinear", non_collinear == 0);
}

void dual_codeword(const Args& a, std::istream& in, Report& rep) {
  const PointSet s = load_set(a.set_path, in);
  rep.field(s.plane().field());
  const SupportCodeword c = dual_codeword_on_support(s, a.seed ? static_cast<unsigned>(*a.seed) : 1u);
  auto& r = rep.results();
  r["kernel_dim"] = c.kernel_dim;
  r["exact"] = c.exact;
  r["codeword"] = c.vector ? to_json(s.plane(), *c.vector) : Json("NONE");
  if (c.vector) {
    rep.verdict("dual codeword", is_dual_codeword(s.plane(), *c.vector));
    rep.verdict("support without tangents", support_tangency(s.plane(), *c.vector));
  }
}

void peel(const Args& a, std::istream& in, Report& rep) {
  const auto p = Plane::of_order(a.q);
  rep.field(p->field());
  const PointSet erased = point_set_from_json(set_document(read_json(a.erased_path, in)), p);
  const PointSet residual = peel_decode(erased, a.seed);
  auto& r = rep.results();
  r["erased"] = erased.size();
  r["residual"] = to_json(residual);
  r["recovered"] = residual.empty();
  rep.verdict("residual has no tangent", is_tangent_free(residual));
  rep.verdict("residual is the maximal stopping subset", residual == maximal_stopping_subset(erased));
}

void theoremsuite(const Args& a, Report& rep) {
  const SuiteLevel level = a.level == "long" ? SuiteLevel::Long : a.level == "full" ? SuiteLevel::Full : SuiteLevel::Quick;
  rep.parameters()["level"] = a.level;
  SuiteOptions o;
  o.workers = a.workers;
  o.long_budget = a.budget;
  Json checks = Json::array();
  int passed = 0;
  const auto results = run_theorem_suite(level, o);
  for (const auto& c : results) {
    checks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    passed += c.pass;
    rep.verdict(c.name, c.pass);
  }
  rep.results()["checks"] = checks;
  rep.results()["passed"] = passed;
  rep.results()["failed"] = static_cast<int>(results.size()) - passed;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sets without tangents in PG(2,q)", "tfs"};
  app.require_subcommand(1);
  Args a;
  auto q_opt = [&](CLI::App* s, bool required = true) {
    auto* o = s->add_option("--q", a.q, "Field order")->check(CLI::Range(2u, kMaxFieldOrder));
    if (required) o->required();
  };
  auto workers_opt = [&](CLI::App* s) {
    s->add_option("--workers", a.workers, "OpenMP threads (default: all)")->check(CLI::NonNegativeNumber);
    s->add_flag("--serial", a.serial, "Use the serial reference driver");
  };

  auto* fi = app.add_subcommand("field-info", "Field tables and constants");
  q_opt(fi);

  auto* co = app.add_subcommand("construct", "Build a set without tangents and certify it");
  q_opt(co);
  co->add_option("--name", a.name, "Construction")
      ->required()
      ->check(CLI::IsMember({"trivial", "two-conics", "interior", "punctured", "frobenius", "trace", "ten-set"}));
  co->add_option("--a", a.a, "Parameter of the two-conic construction");
  co->add_option("--r", a.r, "Number of removed external lines");
  co->add_option("--point", a.point, "Exterior point index for the punctured construction");
  co->add_option("--seed", a.seed, "Random choice of removed lines");

  auto* ve = app.add_subcommand("verify", "Check a point set file");
  ve->add_option("--set", a.set_path, "PointSet JSON, - for stdin")->required();

  auto* sp = app.add_subcommand("spectrum", "Spectrum of a set or integer spectra without tangents");
  sp->add_option("--set", a.set_path, "PointSet JSON, - for stdin");
  q_opt(sp, false);
  sp->add_option("--n", a.n, "Set size");
  sp->add_option("--max-i", a.max_i, "Largest intersection size");

  auto* sm = app.add_subcommand("search-min", "Smallest set without tangents");
  q_opt(sm);
  sm->add_option("--cap", a.cap, "Largest size tried (default 2q)");
  sm->add_flag("--long", a.long_mode, "Allow q = 9, 11 under a time budget");
  sm->add_option("--budget", a.budget, "Seconds for --long");
  workers_opt(sm);

  auto* en = app.add_subcommand("enumerate", "All sets without tangents of one size");
  q_opt(en);
  en->add_option("--n", a.n, "Set size")->required();
  en->add_flag("--list", a.list, "Print member lists");
  workers_opt(en);

  auto* cl = app.add_subcommand("classify", "Classes under PGL(3,q) of the sets of one size");
  q_opt(cl);
  cl->add_option("--n", a.n, "Set size")->required();
  workers_opt(cl);

  auto* ee = app.add_subcommand("exterior-extend", "Extenders of the exterior points of an external line");
  q_opt(ee);
  ee->add_option("--a", a.a, "Line Z = aX (default: smallest non-square)");
  ee->add_flag("--all-lines", a.all_lines, "Check every external line (q <= 11)");

  auto* ec = app.add_subcommand("exterior-clique", "Exterior sets of (q+1)/2 exterior points");
  q_opt(ec);
  ec->add_flag("--no3col", a.no3, "Keep sets without three collinear points");
  workers_opt(ec);

  auto* dc = app.add_subcommand("dual-codeword", "Dual codeword supported on a set");
  dc->add_option("--set", a.set_path, "PointSet JSON, - for stdin")->required();
  dc->add_option("--seed", a.seed, "Sampling seed for large kernels");

  auto* pe = app.add_subcommand("peel", "Peeling decoder on an erasure pattern");
  q_opt(pe);
  pe->add_option("--erased", a.erased_path, "PointSet JSON, - for stdin")->required();
  pe->add_option("--seed", a.seed, "Shuffle the line order");

  auto* ts = app.add_subcommand("theoremsuite", "Run the checks of one level");
  ts->add_option("--level", a.level, "quick, full or long")->check(CLI::IsMember({"quick", "full", "long"}));
  ts->add_option("--budget", a.budget, "Seconds per long search");
  ts->add_option("--workers", a.workers, "OpenMP threads")->check(CLI::NonNegativeNumber);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "tfs: " << e.what() << "\n";
    return 2;
  }

  CLI::App* sub = app.get_subcommands().front();
  Report rep(sub->get_name());
  if (a.q) rep.parameters()["q"] = a.q;
  if (a.workers) rep.parameters()["workers"] = a.workers;
  if (a.serial) rep.parameters()["serial"] = true;
  const auto start = std::chrono::steady_clock::now();
  try {
    const std::string& n = sub->get_name();
    if (n == "field-info") field_info(a, rep);
    else if (n == "construct") construct(a, rep);
    else if (n == "verify") verify(a, in, rep);
    else if (n == "spectrum") spectrum_cmd(a, in, rep);
    else if (n == "search-min") search_min(a, rep);
    else if (n == "enumerate") enumerate_cmd(a, rep);
    else if (n == "classify") classify_cmd(a, rep);
    else if (n == "exterior-extend") exterior_extend(a, rep);
    else if (n == "exterior-clique") exterior_clique(a, rep);
    else if (n == "dual-codeword") dual_codeword(a, in, rep);
    else if (n == "peel") peel(a, in, rep);
    else if (n == "theoremsuite") theoremsuite(a, rep);
  } catch (const CLI::Error& e) {
    err << "tfs: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "tfs " << sub->get_name() << ": " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    err << "tfs " << sub->get_name() << ": malformed JSON: " << e.what() << "\n";
    return 2;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out << rep.finish(secs) << "\n";
  if (!rep.ok()) err << "tfs " << sub->get_name() << ": a check failed\n";
  return rep.ok() ? 0 : 1;
}

}  // namespace tfs
