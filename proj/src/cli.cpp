#include "hypersat/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hypersat/assignment_lab.hpp"
#include "hypersat/dimacs.hpp"
#include "hypersat/errors.hpp"
#include "hypersat/experiment.hpp"
#include "hypersat/generator.hpp"
#include "hypersat/hypernodal.hpp"
#include "hypersat/reduction.hpp"
#include "hypersat/subclause_space.hpp"
#include "hypersat/verify.hpp"

namespace hypersat::cli {

namespace {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class Falsified : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

fs::path out_dir() {
  if (const char* dir = std::getenv(kOutDirEnv); dir && *dir) return dir;
  return ".";
}

fs::path resolve(const std::string& path) {
  fs::path p(path);
  if (p.is_relative() && std::getenv(kOutDirEnv)) return out_dir() / p;
  return p;
}

/// Writes through a sibling temporary so readers never see a partial file.
void write_file(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write " + tmp.string());
    f << content;
    if (!f) throw std::runtime_error("write failed for " + tmp.string());
  }
  fs::rename(tmp, path);
}

void emit(const std::string& output, const std::string& content, std::ostream& out) {
  if (output.empty() || output == "-")
    out << content;
  else
    write_file(resolve(output), content);
}

std::string ratio_label(double r) {
  std::ostringstream s;
  s << r;
  return s.str();
}

// Input source ------------------------------------------------------------------

struct InputSpec {
  std::string path;
  std::optional<std::size_t> n;
  double r = 4.25;
  std::uint64_t seed = 1;
  std::size_t k = 3;
};

void add_input_options(CLI::App* cmd, InputSpec& in) {
  auto* file = cmd->add_option("-i,--input", in.path, "DIMACS CNF file");
  auto* n = cmd->add_option("--n", in.n, "generate a random instance with n variables instead of reading a file");
  file->excludes(n);
  cmd->add_option("--r", in.r, "clause/variable ratio for a generated instance")->capture_default_str();
  cmd->add_option("--instance-seed", in.seed, "seed for a generated instance")->capture_default_str();
  cmd->add_option("--k", in.k, "clause width for a generated instance")->capture_default_str();
}

struct Loaded {
  Formula formula;
  std::vector<std::string> warnings;
  std::string source;
};

Loaded load(const InputSpec& in, std::ostream& err) {
  if (in.path.empty() == !in.n.has_value())
    throw UsageError("exactly one input source is required: --input FILE or --n N");
  if (in.n) {
    Loaded l{generate_random_formula(*in.n, in.r, in.seed, in.k), {}, ""};
    l.source = "generated k=" + std::to_string(in.k) + " n=" + std::to_string(*in.n) + " r=" + ratio_label(in.r) +
               " seed=" + std::to_string(in.seed);
    return l;
  }
  ParsedFormula parsed = read_dimacs_file(in.path, DimacsOptions{.width = 0});
  for (const std::string& w : parsed.warnings) err << "warning: " << in.path << ": " << w << "\n";
  return Loaded{std::move(parsed.formula), std::move(parsed.warnings), in.path};
}

void require_width3(const Formula& f) {
  if (f.width() != 3 && f.num_clauses() > 0)
    throw UsageError("this command needs a 3-SAT instance, got width " + std::to_string(f.width()));
}

Assignment parse_assignment(const std::string& text, std::size_t n) {
  std::vector<Lit> lits;
  std::string tok;
  auto flush = [&] {
    if (tok.empty()) return;
    try {
      lits.push_back(Lit::parse(tok));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    tok.clear();
  };
  for (char c : text) {
    if (c == ',' || c == ' ' || c == '{' || c == '}' || c == '\t')
      flush();
    else
      tok += c;
  }
  flush();
  try {
    return Assignment(n, lits);
  } catch (const InconsistentAssignment& e) {
    throw UsageError(std::string("inconsistent assignment: ") + e.what());
  }
}

TieBreak parse_tie(const std::string& s) {
  if (s == "true" || s == "prefer-true") return TieBreak::prefer_true;
  if (s == "false" || s == "prefer-false") return TieBreak::prefer_false;
  throw UsageError("tie-break must be 'true' or 'false'");
}

json lits_json(std::span<const Lit> lits) {
  json a = json::array();
  for (Lit l : lits) a.push_back(l.str());
  return a;
}

json lits_json(const std::vector<Lit>& lits) { return lits_json(std::span<const Lit>(lits)); }

json eval_json(const EvalReport& e) {
  return json{{"satisfied", e.satisfied}, {"unsatisfied", e.unsatisfied}, {"fraction", e.fraction}};
}

json thresholds_json(const Thresholds& t) {
  return json{{"minimum", t.minimum},
              {"maximum", t.maximum},
              {"minimum_dedup", t.minimum_dedup},
              {"maximum_dedup", t.maximum_dedup}};
}

std::vector<Lit> display_literals(std::size_t n) {
  std::vector<Lit> out;
  for (Var v = 0; v < n; ++v) {
    out.push_back(Lit::negative(v));
    out.push_back(Lit::positive(v));
  }
  return out;
}

// gen -----------------------------------------------------------------------------

struct GenOptions {
  std::size_t n = 100;
  double r = 4.25;
  std::uint64_t seed = 1;
  std::size_t k = 3;
  std::size_t count = 1;
  std::string out_dir;
};

int cmd_gen(const GenOptions& o, std::ostream& out) {
  const fs::path dir = o.out_dir.empty() ? out_dir() : fs::path(o.out_dir);
  json files = json::array();
  for (std::size_t i = 0; i < o.count; ++i) {
    const std::uint64_t seed = o.seed + i;
    Formula f;
    try {
      f = generate_random_formula(o.n, o.r, seed, o.k);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    const std::string name = "k" + std::to_string(o.k) + "_n" + std::to_string(o.n) + "_r" + ratio_label(o.r) +
                             "_s" + std::to_string(seed) + ".cnf";
    write_file(dir / name, emit_dimacs(f));
    files.push_back(json{{"path", (dir / name).string()}, {"seed", seed}, {"clauses", f.num_clauses()}});
  }
  out << json{{"files", files}}.dump(2) << "\n";
  return kOk;
}

// analyze -------------------------------------------------------------------------

struct AnalyzeOptions {
  InputSpec input;
  std::string output;
  std::string matrix;
};

int cmd_analyze(const AnalyzeOptions& o, std::ostream& out, std::ostream& err) {
  const Loaded in = load(o.input, err);
  const Formula& f = in.formula;
  require_width3(f);
  const SubClauseSpace space(f);

  json j;
  j["source"] = in.source;
  j["n"] = f.num_vars();
  j["m"] = f.num_clauses();
  j["width"] = f.width();
  j["ratio"] = f.ratio();
  j["warnings"] = in.warnings;
  json clauses = json::array();
  for (ClauseId id = 0; id < f.num_clauses(); ++id)
    clauses.push_back(json{{"id", id}, {"literals", lits_json(f.clause(id).lits())}});
  j["clauses"] = clauses;

  json sat = json::object(), created = json::object(), solved = json::object(), units = json::object();
  for (Lit l : display_literals(f.num_vars())) {
    sat[l.str()] = satisfied(f, l);
    auto c = space.created(l);
    created[l.str()] = std::vector<SubClauseId>(c.begin(), c.end());
    solved[l.str()] = subsat(space, l);
    units[l.str()] = lits_json(unitclauses(space, l));
  }
  j["satisfied"] = sat;

  json subs = json::array();
  for (SubClauseId id = 0; id < space.size(); ++id) {
    const SubClause& s = space.at(id);
    auto p = space.parents_of(id);
    subs.push_back(json{{"id", id},
                        {"literals", json::array({s.first().str(), s.second().str()})},
                        {"creators", lits_json(space.creators_of(id))},
                        {"parents", std::vector<ClauseId>(p.begin(), p.end())}});
  }
  j["subclauses"] = subs;
  j["created"] = created;
  j["subsat"] = solved;
  j["unitclauses"] = units;
  j["thresholds"] = thresholds_json(thresholds(space));
  if (f.num_vars() >= 2) {
    const SpaceCensus c = space_census(space, f);
    j["census"] = json{{"possible", c.possible}, {"actual", c.actual}, {"per_clause", c.per_clause}, {"ratio", c.ratio}};
  } else {
    j["census"] = nullptr;
  }
  if (!o.matrix.empty()) write_file(resolve(o.matrix), interaction_matrix(space).to_csv());
  emit(o.output, j.dump(2) + "\n", out);
  return kOk;
}

// assign --------------------------------------------------------------------------

struct AssignOptions {
  InputSpec input;
  std::string heuristic;
  std::uint64_t seed = 1;
  std::string tie = "true";
  bool greedy_dynamic = false;
  std::string output;
  std::string curve;
};

int cmd_assign(const AssignOptions& o, std::ostream& out, std::ostream& err) {
  const Loaded in = load(o.input, err);
  const Formula& f = in.formula;
  require_width3(f);
  std::string name = o.heuristic;
  if (name == "greedy" && o.greedy_dynamic) name = "greedy-dynamic";
  if (!is_known_generator(name)) throw UsageError("unknown heuristic '" + o.heuristic + "'");
  const TieBreak tie = parse_tie(o.tie);
  const SubClauseSpace space(f);
  const Assignment a = run_generator(name, f, space, tie, o.seed);
  const EvalReport eval = evaluate(f, a);
  const CurveSeries curve = unsolved_curve(space, a);

  json j;
  j["source"] = in.source;
  j["heuristic"] = name;
  json meta{{"tie_break", std::string(to_string(tie))}};
  if (name == "minCreateMaxSolve") meta["reading"] = "argmax(|subsat| - |created|)";
  if (name == "greedy") meta["greedy_variant"] = "static clause-satisfaction counts";
  if (name == "greedy-dynamic") meta["greedy_variant"] = "dynamic recount of unsatisfied clauses";
  if (name == "random") meta["seed"] = o.seed;
  j["metadata"] = meta;
  j["assignment"] = lits_json(a.sorted());
  j["assignment_order"] = lits_json(a.lits());
  j["evaluation"] = eval_json(eval);
  j["subclause_count"] = subclause_count(space, a);
  j["consumption_rate"] = a.empty() ? json(nullptr) : json(consumption_rate(space, a));
  j["thresholds"] = thresholds_json(thresholds(space));
  std::vector<std::size_t> open;
  for (const CurveStep& s : curve.steps) open.push_back(s.open);
  j["curve"] = json{{"inflection", curve.inflection}, {"open", open}};
  if (!eval.unsatisfied.empty()) {
    const ExclusionReport ex = excluded_literals(space, a);
    j["exclusion"] = json{{"unsolved", ex.unsolved}, {"excluded", lits_json(ex.excluded)}, {"allowed", lits_json(ex.allowed)}};
  }
  if (!o.curve.empty()) write_file(resolve(o.curve), curve.to_csv());
  emit(o.output, j.dump(2) + "\n", out);
  return kOk;
}

// reduce --------------------------------------------------------------------------

struct ReduceOptions {
  InputSpec input;
  std::string assignment;
  bool have_assignment = false;
  std::string heuristic;
  std::uint64_t seed = 1;
  std::string output;
  std::string cnf;
  std::string provenance;
};

json provenance_json(const TwoSatFormula& t) {
  json clauses = json::array();
  for (std::size_t i = 0; i < t.size(); ++i) {
    json origins = json::array();
    for (const Origin& o : t.provenance[i]) origins.push_back(json{{"creator", o.creator.str()}, {"parent", o.parent}});
    clauses.push_back(json{{"index", i},
                           {"literals", json::array({t.clauses[i].first().str(), t.clauses[i].second().str()})},
                           {"origins", origins}});
  }
  return json{{"n", t.num_vars}, {"clauses", clauses}};
}

int cmd_reduce(const ReduceOptions& o, std::ostream& out, std::ostream& err) {
  const Loaded in = load(o.input, err);
  const Formula& f = in.formula;
  require_width3(f);
  const SubClauseSpace space(f);
  if (o.have_assignment == !o.heuristic.empty())
    throw UsageError("supply exactly one of --assignment or --heuristic");
  Assignment a;
  if (o.have_assignment) {
    a = parse_assignment(o.assignment, f.num_vars());
  } else {
    if (!is_known_generator(o.heuristic)) throw UsageError("unknown heuristic '" + o.heuristic + "'");
    a = run_generator(o.heuristic, f, space, TieBreak::prefer_true, o.seed);
  }
  const TwoSatFormula t = reduce(space, f, a);
  const TwoSatResult verdict = solve_2sat(t);
  const TwoSatCheck check = assignment_satisfies_2sat(t, a);

  json j;
  j["source"] = in.source;
  j["assignment"] = lits_json(a.sorted());
  j["clause_count"] = t.size();
  json clauses = json::array();
  for (const SubClause& s : t.clauses) clauses.push_back(s.str());
  j["clauses"] = clauses;
  json v{{"satisfiable", verdict.satisfiable}};
  if (verdict.model) v["model"] = lits_json(verdict.model->sorted());
  if (verdict.witness) v["witness"] = "x" + std::to_string(*verdict.witness);
  j["two_sat"] = v;
  j["assignment_satisfies"] = check.holds();
  json violated = json::array();
  for (std::size_t i : check.violated) violated.push_back(t.clauses[i].str());
  j["violated"] = violated;
  j["formula_satisfied"] = a.complete() ? json(satisfies(f, a)) : json(nullptr);
  if (!o.cnf.empty()) write_file(resolve(o.cnf), emit_dimacs(t.to_formula()));
  if (!o.provenance.empty()) write_file(resolve(o.provenance), provenance_json(t).dump(2) + "\n");
  emit(o.output, j.dump(2) + "\n", out);
  return kOk;
}

// verify --------------------------------------------------------------------------

struct VerifyOptions {
  std::string suite = "all";
  std::size_t instances = 500;
  std::string n_range = "6..12";
  double r = 4.25;
  std::uint64_t seed = 1;
  std::size_t per_instance = 10;
  std::string output;
};

int cmd_verify(const VerifyOptions& o, std::ostream& out) {
  SuiteConfig cfg;
  cfg.instances = o.instances;
  cfg.ratio = o.r;
  cfg.seed = o.seed;
  cfg.per_instance = o.per_instance;
  const auto dots = o.n_range.find("..");
  try {
    if (dots == std::string::npos) {
      cfg.min_vars = cfg.max_vars = std::stoul(o.n_range);
    } else {
      cfg.min_vars = std::stoul(o.n_range.substr(0, dots));
      cfg.max_vars = std::stoul(o.n_range.substr(dots + 2));
    }
  } catch (const std::exception&) {
    throw UsageError("--n-range must look like 6..12");
  }
  std::vector<std::string> names = o.suite == "all" ? suite_names() : std::vector<std::string>{o.suite};
  json reports = json::array();
  bool ok = true;
  for (const std::string& name : names) {
    SuiteReport r;
    try {
      r = run_suite(name, cfg);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    ok = ok && r.ok();
    reports.push_back(json::parse(r.to_json()));
  }
  emit(o.output, json{{"suites", reports}, {"ok", ok}}.dump(2) + "\n", out);
  if (!ok) throw Falsified("verification found falsifications");
  return kOk;
}

// experiment ----------------------------------------------------------------------

struct ExperimentOptions {
  std::size_t n = 500;
  double r = 4.25;
  std::size_t count = 100;
  std::uint64_t seed = 1;
  std::vector<std::string> heuristics{"minCreateMaxSolve", "greedy", "random"};
  std::string tie = "true";
  bool curve = false;
  std::size_t max_attempts = 0;
  std::string output;
  std::string csv;
};

int cmd_experiment(const ExperimentOptions& o, std::ostream& out) {
  if (o.curve) {
    CurveExperimentConfig cfg;
    cfg.num_vars = o.n;
    cfg.ratio = o.r;
    cfg.count = o.count;
    cfg.seed = o.seed;
    cfg.max_attempts = o.max_attempts ? o.max_attempts : 8 * o.count;
    const CurveSummary s = run_curve_experiment(cfg);
    if (!o.csv.empty()) write_file(resolve(o.csv), s.mean_curve_csv());
    emit(o.output, s.to_json() + "\n", out);
    return kOk;
  }
  HeuristicExperimentConfig cfg;
  cfg.num_vars = o.n;
  cfg.ratio = o.r;
  cfg.count = o.count;
  cfg.seed = o.seed;
  cfg.heuristics = o.heuristics;
  cfg.tie = parse_tie(o.tie);
  for (const std::string& h : cfg.heuristics)
    if (!is_known_generator(h)) throw UsageError("unknown heuristic '" + h + "'");
  const ExperimentSummary s = run_heuristic_experiment(cfg);
  if (!o.csv.empty()) write_file(resolve(o.csv), s.records_csv());
  emit(o.output, s.to_json() + "\n", out);
  return kOk;
}

// export --------------------------------------------------------------------------

struct ExportOptions {
  InputSpec input;
  bool dot = false;
  std::string merged;
  std::string expand;
  long depth = 3;
  std::string output;
};

int cmd_export(const ExportOptions& o, std::ostream& out, std::ostream& err) {
  const int modes = int(o.dot) + int(!o.merged.empty()) + int(!o.expand.empty());
  if (modes != 1) throw UsageError("choose exactly one of --dot, --merged ASSIGNMENT, --expand LITERAL");
  if (o.depth < 0) throw UsageError("--depth must be >= 0");
  const Loaded in = load(o.input, err);
  const Formula& f = in.formula;
  require_width3(f);
  const SubClauseSpace space(f);
  if (o.dot) {
    emit(o.output, export_dot(HypernodalGraph(space)), out);
  } else if (!o.merged.empty()) {
    const Assignment a = parse_assignment(o.merged, f.num_vars());
    emit(o.output, export_dot(merge_active(HypernodalGraph(space), a), f.num_vars()), out);
  } else {
    Lit root;
    try {
      root = Lit::parse(o.expand);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    if (root.var() >= f.num_vars()) throw UsageError(root.str() + " is outside the formula");
    emit(o.output, expansion_to_json(expand_literal(space, root, static_cast<std::size_t>(o.depth))) + "\n", out);
  }
  return kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sub-clause decomposition, 2-SAT reduction and hypernodal graphs for 3-SAT", "hypersat"};
  app.require_subcommand(1);
  std::function<int()> action;

  GenOptions gen;
  auto* g = app.add_subcommand("gen", "generate random k-SAT instances as DIMACS files");
  g->add_option("--n", gen.n, "variables")->capture_default_str();
  g->add_option("--r", gen.r, "clause/variable ratio")->capture_default_str();
  g->add_option("--seed", gen.seed, "first seed")->capture_default_str();
  g->add_option("--k", gen.k, "clause width")->capture_default_str();
  g->add_option("--count", gen.count, "instances; seeds seed..seed+count-1")->capture_default_str();
  g->add_option("--out-dir", gen.out_dir, std::string("output directory (default $") + kOutDirEnv + " or .)");
  g->callback([&] { action = [&] { return cmd_gen(gen, out); }; });

  AnalyzeOptions an;
  auto* a = app.add_subcommand("analyze", "dump satisfied/sub-clause sets, thresholds and census as JSON");
  add_input_options(a, an.input);
  a->add_option("-o,--output", an.output, "report path (default stdout)");
  a->add_option("--matrix", an.matrix, "also write the interaction matrix CSV here");
  a->callback([&] { action = [&] { return cmd_analyze(an, out, err); }; });

  AssignOptions as;
  auto* s = app.add_subcommand("assign", "build an assignment with a heuristic and report on it");
  add_input_options(s, as.input);
  s->add_option("--heuristic", as.heuristic,
                "minCreate | minCreateMaxSolve | maxSolve | maxCreate | greedy | greedy-dynamic | random")
      ->required();
  s->add_option("--seed", as.seed, "seed for the random heuristic")->capture_default_str();
  s->add_option("--tie-break", as.tie, "polarity preferred on ties: true | false")->capture_default_str();
  s->add_flag("--greedy-dynamic", as.greedy_dynamic, "with --heuristic greedy, recount after every fix");
  s->add_option("-o,--output", as.output, "report path (default stdout)");
  s->add_option("--curve", as.curve, "write the unsolved sub-clause curve CSV here");
  s->callback([&] { action = [&] { return cmd_assign(as, out, err); }; });

  ReduceOptions rd;
  auto* r = app.add_subcommand("reduce", "emit the 2-SAT formula an assignment activates");
  add_input_options(r, rd.input);
  auto* ra = r->add_option("--assignment", rd.assignment, "literals, e.g. \"-x0,-x1,x2\" or \"-1 -2 3\"");
  r->add_option("--heuristic", rd.heuristic, "generate the assignment instead");
  r->add_option("--seed", rd.seed, "seed for --heuristic random")->capture_default_str();
  r->add_option("-o,--output", rd.output, "report path (default stdout)");
  r->add_option("--cnf", rd.cnf, "write the width-2 DIMACS here");
  r->add_option("--provenance", rd.provenance, "write the provenance JSON sidecar here");
  r->callback([&, ra] {
    rd.have_assignment = ra->count() > 0;
    action = [&] { return cmd_reduce(rd, out, err); };
  });

  VerifyOptions vf;
  auto* v = app.add_subcommand("verify", "run oracle-backed verification suites");
  v->add_option("--suite", vf.suite, "all | theorem | corollary1 | 2sat-oracle | sandwich | equivalence | census | chain")
      ->capture_default_str();
  v->add_option("--instances", vf.instances, "instances per suite")->capture_default_str();
  v->add_option("--n-range", vf.n_range, "variable range lo..hi")->capture_default_str();
  v->add_option("--r", vf.r, "clause/variable ratio")->capture_default_str();
  v->add_option("--seed", vf.seed, "first seed")->capture_default_str();
  v->add_option("--per-instance", vf.per_instance, "assignments per instance")->capture_default_str();
  v->add_option("-o,--output", vf.output, "report path (default stdout)");
  v->callback([&] { action = [&] { return cmd_verify(vf, out); }; });

  ExperimentOptions ex;
  auto* e = app.add_subcommand("experiment", "batch heuristic comparison or unsolved-curve statistics");
  e->add_option("--n", ex.n, "variables")->capture_default_str();
  e->add_option("--r", ex.r, "clause/variable ratio")->capture_default_str();
  e->add_option("--count", ex.count, "instances (with --curve: satisfiable instances to collect)")
      ->capture_default_str();
  e->add_option("--seed", ex.seed, "first seed")->capture_default_str();
  e->add_option("--heuristics", ex.heuristics, "comma-separated generator names")->delimiter(',');
  e->add_option("--tie-break", ex.tie, "true | false")->capture_default_str();
  e->add_flag("--curve", ex.curve, "aggregate unsolved sub-clause curves over satisfying assignments");
  e->add_option("--max-attempts", ex.max_attempts, "with --curve: instances to try (default 8 x count)");
  e->add_option("-o,--output", ex.output, "summary JSON path (default stdout)");
  e->add_option("--csv", ex.csv, "per-record CSV (or mean curve CSV with --curve)");
  e->callback([&] { action = [&] { return cmd_experiment(ex, out); }; });

  ExportOptions xp;
  auto* x = app.add_subcommand("export", "DOT graphs and expansion-tree JSON");
  add_input_options(x, xp.input);
  x->add_flag("--dot", xp.dot, "hypernodal family as DOT");
  x->add_option("--merged", xp.merged, "merged graph DOT for this assignment");
  x->add_option("--expand", xp.expand, "expansion tree JSON rooted at this literal");
  x->add_option("--depth", xp.depth, "expansion depth bound")->capture_default_str();
  x->add_option("-o,--output", xp.output, "output path (default stdout)");
  x->callback([&] { action = [&] { return cmd_export(xp, out, err); }; });

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    return action();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const GuardrailError& e) {
    err << "guardrail: " << e.what() << "\n";
    return kGuardrail;
  } catch (const HypothesisError& e) {
    err << "hypothesis not met: " << e.what() << "\n";
    return kHypothesis;
  } catch (const Falsified& e) {
    err << "falsified: " << e.what() << "\n";
    return kFalsified;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
}

} // namespace hypersat::cli
