#include "hypersat/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "hypersat/errors.hpp"
#include "hypersat/generator.hpp"

namespace hypersat {

using json = nlohmann::ordered_json;

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (salt + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

bool is_known_generator(const std::string& name) {
  return parse_heuristic(name).has_value() || name == "greedy" || name == "greedy-dynamic" || name == "random";
}

Assignment run_generator(const std::string& name, const Formula& f, const SubClauseSpace& space, TieBreak tie,
                         std::uint64_t seed) {
  if (auto h = parse_heuristic(name)) return generate_heuristic(space, *h, tie);
  if (name == "greedy") return generate_greedy(f, tie, GreedyVariant::static_count);
  if (name == "greedy-dynamic") return generate_greedy(f, tie, GreedyVariant::dynamic_recount);
  if (name == "random") return generate_random_assignment(f.num_vars(), seed);
  throw std::invalid_argument("unknown heuristic '" + name + "'");
}

namespace {

Aggregate aggregate(const std::vector<double>& xs) {
  Aggregate a;
  a.count = xs.size();
  if (xs.empty()) return a;
  double sum = 0;
  for (double x : xs) sum += x;
  a.mean = sum / static_cast<double>(xs.size());
  if (xs.size() > 1) {
    double sq = 0;
    for (double x : xs) sq += (x - a.mean) * (x - a.mean);
    a.stddev = std::sqrt(sq / static_cast<double>(xs.size() - 1));
  }
  return a;
}

json aggregate_json(const Aggregate& a) { return json{{"count", a.count}, {"mean", a.mean}, {"stddev", a.stddev}}; }

void check_limits(std::size_t n, std::size_t count) {
  if (n > kExperimentMaxVars)
    throw GuardrailError("experiments limited to n <= " + std::to_string(kExperimentMaxVars));
  if (count > kExperimentMaxInstances)
    throw GuardrailError("experiments limited to " + std::to_string(kExperimentMaxInstances) + " instances");
}

} // namespace

void ExperimentSummary::recompute() {
  std::map<std::string, std::vector<double>> fr, sc;
  for (const InstanceRecord& r : records) {
    fr[r.heuristic].push_back(r.fraction);
    sc[r.heuristic].push_back(static_cast<double>(r.subclause_count));
  }
  fraction.clear();
  subclause_count.clear();
  for (auto& [k, v] : fr) fraction[k] = aggregate(v);
  for (auto& [k, v] : sc) subclause_count[k] = aggregate(v);
}

bool ExperimentSummary::aggregates_consistent() const {
  ExperimentSummary fresh = *this;
  fresh.recompute();
  auto same = [](const std::map<std::string, Aggregate>& a, const std::map<std::string, Aggregate>& b) {
    if (a.size() != b.size()) return false;
    for (auto ia = a.begin(), ib = b.begin(); ia != a.end(); ++ia, ++ib)
      if (ia->first != ib->first || ia->second.count != ib->second.count || ia->second.mean != ib->second.mean ||
          ia->second.stddev != ib->second.stddev)
        return false;
    return true;
  };
  return same(fraction, fresh.fraction) && same(subclause_count, fresh.subclause_count);
}

std::string ExperimentSummary::to_json(int indent) const {
  if (!aggregates_consistent()) throw std::logic_error("experiment aggregates do not match records");
  json j;
  j["n"] = num_vars;
  j["r"] = ratio;
  j["seed"] = seed;
  j["tie_break"] = tie_break;
  j["greedy_variant"] = "static clause-satisfaction counts (greedy-dynamic: recount after each fix)";
  j["minCreateMaxSolve_reading"] = "argmax(|subsat| - |created|)";
  json agg = json::object();
  for (const auto& [k, a] : fraction) agg[k] = json{{"fraction", aggregate_json(a)},
                                                     {"subclause_count", aggregate_json(subclause_count.at(k))}};
  j["aggregates"] = agg;
  json recs = json::array();
  for (const InstanceRecord& r : records) {
    json x{{"instance", r.instance},
           {"seed", r.seed},
           {"heuristic", r.heuristic},
           {"fraction", r.fraction},
           {"subclause_count", r.subclause_count},
           {"minimum_threshold", r.minimum_threshold},
           {"maximum_threshold", r.maximum_threshold}};
    x["inflection"] = r.inflection ? json(*r.inflection) : json(nullptr);
    recs.push_back(x);
  }
  j["records"] = recs;
  return j.dump(indent);
}

std::string ExperimentSummary::records_csv() const {
  std::string out = "instance,seed,heuristic,fraction,subclause_count,minimum_threshold,maximum_threshold,inflection\n";
  for (const InstanceRecord& r : records) {
    out += std::to_string(r.instance) + "," + std::to_string(r.seed) + "," + r.heuristic + "," +
           json(r.fraction).dump() + "," + std::to_string(r.subclause_count) + "," +
           std::to_string(r.minimum_threshold) + "," + std::to_string(r.maximum_threshold) + "," +
           (r.inflection ? std::to_string(*r.inflection) : "") + "\n";
  }
  return out;
}

ExperimentSummary run_heuristic_experiment(const HeuristicExperimentConfig& cfg) {
  check_limits(cfg.num_vars, cfg.count);
  for (const std::string& h : cfg.heuristics)
    if (!is_known_generator(h)) throw std::invalid_argument("unknown heuristic '" + h + "'");

  ExperimentSummary summary;
  summary.num_vars = cfg.num_vars;
  summary.ratio = cfg.ratio;
  summary.seed = cfg.seed;
  summary.tie_break = std::string(to_string(cfg.tie));
  for (std::size_t i = 0; i < cfg.count; ++i) {
    const std::uint64_t seed = cfg.seed + i;
    const Formula f = generate_random_formula(cfg.num_vars, cfg.ratio, seed);
    const SubClauseSpace space(f);
    const Thresholds th = thresholds(space);
    for (const std::string& h : cfg.heuristics) {
      const Assignment a = run_generator(h, f, space, cfg.tie, derive_seed(seed, 1));
      InstanceRecord r;
      r.instance = i;
      r.seed = seed;
      r.heuristic = h;
      r.fraction = evaluate(f, a).fraction;
      r.subclause_count = subclause_count(space, a);
      r.minimum_threshold = th.minimum;
      r.maximum_threshold = th.maximum;
      summary.records.push_back(std::move(r));
    }
  }
  summary.recompute();
  return summary;
}

std::string CurveSummary::to_json(int indent) const {
  json j;
  j["n"] = num_vars;
  j["r"] = ratio;
  j["method"] = method;
  j["attempted"] = attempted;
  j["satisfiable_collected"] = records.size();
  j["inflection"] = aggregate_json(inflection);
  j["inflection_fraction_of_n"] = num_vars ? inflection.mean / static_cast<double>(num_vars) : 0.0;
  j["mean_curve_inflection"] = mean_curve_inflection;
  j["mean_open"] = mean_open;
  json recs = json::array();
  for (const CurveRecord& r : records)
    recs.push_back(json{{"instance", r.instance}, {"seed", r.seed}, {"inflection", r.inflection}, {"open", r.open}});
  j["records"] = recs;
  return j.dump(indent);
}

std::string CurveSummary::mean_curve_csv() const {
  std::string out = "step,mean_open\n";
  for (std::size_t i = 0; i < mean_open.size(); ++i) out += std::to_string(i + 1) + "," + json(mean_open[i]).dump() + "\n";
  return out;
}

CurveSummary run_curve_experiment(const CurveExperimentConfig& cfg) {
  check_limits(cfg.num_vars, cfg.max_attempts);
  CurveSummary summary;
  summary.num_vars = cfg.num_vars;
  summary.ratio = cfg.ratio;
  summary.method = "walksat (noise " + json(cfg.search.noise).dump() + ", " + std::to_string(cfg.search.max_flips) +
                   " flips x " + std::to_string(cfg.search.max_tries) +
                   " tries); only instances with a WalkSAT model are kept; literals assigned in variable order";
  summary.mean_open.assign(cfg.num_vars, 0.0);
  std::vector<double> inflections;
  for (std::size_t i = 0; i < cfg.max_attempts && summary.records.size() < cfg.count; ++i) {
    ++summary.attempted;
    const std::uint64_t seed = cfg.seed + i;
    const Formula f = generate_random_formula(cfg.num_vars, cfg.ratio, seed);
    WalkSatOptions search = cfg.search;
    search.seed = derive_seed(seed, 2);
    const WalkSatResult found = walksat(f, search);
    if (!found.model) continue;
    const SubClauseSpace space(f);
    const CurveSeries curve = unsolved_curve(space, *found.model);
    CurveRecord r;
    r.instance = i;
    r.seed = seed;
    r.inflection = curve.inflection;
    for (const CurveStep& s : curve.steps) r.open.push_back(s.open);
    for (std::size_t t = 0; t < r.open.size(); ++t) summary.mean_open[t] += static_cast<double>(r.open[t]);
    inflections.push_back(static_cast<double>(r.inflection));
    summary.records.push_back(std::move(r));
  }
  if (!summary.records.empty())
    for (double& x : summary.mean_open) x /= static_cast<double>(summary.records.size());
  summary.inflection = aggregate(inflections);
  if (!summary.mean_open.empty() && !summary.records.empty())
    summary.mean_curve_inflection =
        static_cast<std::size_t>(std::max_element(summary.mean_open.begin(), summary.mean_open.end()) -
                                 summary.mean_open.begin()) +
        1;
  return summary;
}

} // namespace hypersat
