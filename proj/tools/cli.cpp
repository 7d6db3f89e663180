#include "cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <optional>
#include <sstream>

#include "topal/error.hpp"
#include "topal/formula_io.hpp"
#include "topal/model_io.hpp"
#include "topal/reduce.hpp"
#include "topal/semantics.hpp"
#include "topal/testkit.hpp"

namespace topal::cli {

namespace {

using nlohmann::json;

struct Options {
  bool json = false;
  std::string mode = "announcement";
  std::string model;
  std::string theta;
  std::string point;
  std::string formula;
  std::vector<std::string> announce;
  std::vector<std::string> formulas;
  bool trace = false;
  std::uint64_t seed = 1;
  int trials = 100;
  int max_points = 4;
  int bindings = 5;
  int count = 200;
};

BoxMode box_mode(const Options& o) { return o.mode == "effort" ? BoxMode::kEffort : BoxMode::kAnnouncement; }

Formula parse_arg(const std::string& text, const std::string& what) {
  try {
    return parse_formula(text);
  } catch (const ParseError& e) {
    throw Error(what + ": " + e.what());
  }
}

TopoModel load(const Options& o) {
  if (o.model.empty()) throw ModelError("--model is required");
  return load_model_file(o.model);
}

// "name" selects a generator; "name:x,y" restricts it to the open set {x,y}.
NeighbourhoodFunction select_theta(const TopoModel& m, const std::string& text) {
  const TopoFrame& frame = m.frame();
  if (text.empty()) return frame.generators().front().theta;
  const auto colon = text.find(':');
  const NeighbourhoodFunction& g = frame.generator(text.substr(0, colon));
  if (colon == std::string::npos) return g;
  std::vector<std::string> ids;
  std::stringstream list(text.substr(colon + 1));
  for (std::string id; std::getline(list, id, ',');)
    if (!id.empty()) ids.push_back(id);
  for (const auto& id : ids)
    if (!frame.space().contains(id)) throw ModelError("--theta: unknown point '" + id + "'");
  return restrict(g, frame.space().subset(ids), frame.topology());
}

std::string describe(const TopoModel& m, const NeighbourhoodFunction& theta) {
  for (const auto& g : m.frame().generators())
    if (restrict_unchecked(g.theta, theta.domain()) == theta) {
      if (theta == g.theta) return g.name;
      return g.name + " restricted to " + m.frame().space().format(theta.domain());
    }
  return "function with domain " + m.frame().space().format(theta.domain());
}

int cmd_check(const Options& o, std::ostream& out) {
  TopoModel m = load(o);
  Evaluator ev(m);
  Formula f = parse_arg(o.formula, "--formula");
  NeighbourhoodFunction theta = select_theta(m, o.theta);
  std::vector<Formula> announcements;
  for (const auto& a : o.announce) announcements.push_back(parse_arg(a, "--announce"));
  for (const auto& a : announcements) theta = ev.update(theta, a, box_mode(o));
  const int point = m.frame().space().index_of(o.point);
  if (!theta.defined_at(point))
    throw EvalError("point " + o.point + " is outside the domain " + m.frame().space().format(theta.domain()) +
                    (announcements.empty() ? "" : " after the announcements"));
  const bool value = ev.evaluate({point, theta}, f, box_mode(o));
  if (o.json) {
    json j{{"point", o.point},      {"theta", o.theta.empty() ? m.frame().generators().front().name : o.theta},
           {"formula", to_string(f)}, {"mode", o.mode},
           {"domain", m.frame().space().names(theta.domain())}, {"value", value}};
    json ann = json::array();
    for (const auto& a : announcements) ann.push_back(to_string(a));
    j["announce"] = ann;
    out << j.dump(2) << "\n";
  } else {
    out << (value ? "true" : "false") << "\n";
  }
  return value ? 0 : 1;
}

int cmd_valid(const Options& o, std::ostream& out) {
  TopoModel m = load(o);
  Evaluator ev(m);
  Formula f = parse_arg(o.formula, "--formula");
  ev.check_vocabulary(f);
  std::optional<std::pair<int, NeighbourhoodFunction>> refutation;
  for (const auto& theta : ev.functions()) {
    const Subset bad = theta.domain().minus(ev.extension(theta, f, box_mode(o)));
    if (!bad.empty()) {
      int x = -1;
      bad.for_each([&](int p) {
        if (x < 0) x = p;
      });
      refutation.emplace(x, theta);
      break;
    }
  }
  if (o.json) {
    json j{{"formula", to_string(f)}, {"mode", o.mode}, {"valid", !refutation}};
    if (refutation)
      j["counterexample"] = {{"point", m.frame().space().id(refutation->first)},
                             {"theta", describe(m, refutation->second)}};
    out << j.dump(2) << "\n";
  } else if (refutation) {
    out << "false\nfails at " << m.frame().space().id(refutation->first) << " under "
        << describe(m, refutation->second) << "\n";
  } else {
    out << "true\n";
  }
  return refutation ? 1 : 0;
}

int cmd_reduce(const Options& o, std::ostream& out) {
  Formula f = parse_arg(o.formula, "--formula");
  Formula r = reduce_to_el(f);
  const auto steps = o.trace ? reduction_trace(f) : std::vector<ReductionStep>{};
  auto measure = [](const Measure& m) { return "(" + std::to_string(m.depth) + "," + std::to_string(m.size) + ")"; };
  if (o.json) {
    json j{{"input", to_string(f)}, {"output", to_string(r)}};
    if (o.trace) {
      json t = json::array();
      for (const auto& s : steps) {
        json subs = json::array();
        for (std::size_t k = 0; k < s.subproblems.size(); ++k)
          subs.push_back({{"formula", to_string(s.subproblems[k])},
                          {"measure", {s.subproblem_measures[k].depth, s.subproblem_measures[k].size}}});
        t.push_back({{"rule", s.rule},
                     {"before", to_string(s.before)},
                     {"after", to_string(s.after)},
                     {"measure", {s.before_measure.depth, s.before_measure.size}},
                     {"subproblems", subs},
                     {"decreasing", s.decreasing}});
      }
      j["trace"] = t;
    }
    out << j.dump(2) << "\n";
    return 0;
  }
  out << to_string(r) << "\n";
  for (const auto& s : steps) {
    out << s.rule << "  " << to_string(s.before) << "  =>  " << to_string(s.after) << "  "
        << measure(s.before_measure);
    for (const auto& m : s.subproblem_measures) out << " > " << measure(m);
    out << (s.decreasing ? "" : "  NOT DECREASING") << "\n";
  }
  return 0;
}

int cmd_validate(const Options& o, std::ostream& out) {
  TopoModel m = load(o);
  const auto violations = validate(m);
  if (o.json) {
    json list = json::array();
    for (const auto& v : violations) list.push_back({{"condition", v.condition}, {"detail", v.detail}});
    out << json{{"valid", violations.empty()}, {"violations", list}}.dump(2) << "\n";
  } else if (violations.empty()) {
    out << "valid\n";
  } else {
    for (const auto& v : violations) out << v.condition << ": " << v.detail << "\n";
  }
  return violations.empty() ? 0 : 1;
}

int cmd_axioms(const Options& o, std::ostream& out) {
  GenConfig cfg;
  cfg.seed = o.seed;
  cfg.max_points = o.max_points;
  cfg.max_formula_size = 7;
  SuiteOptions options;
  options.bindings_per_model = o.bindings;
  const SoundnessReport report = soundness_suite(cfg, o.trials, options);
  out << (o.json ? report.to_json(2) + "\n" : report.to_text());
  return report.ok() ? 0 : 1;
}

int cmd_diff(const Options& o, std::ostream& out) {
  TopoModel m = load(o);
  std::vector<Formula> candidates;
  for (const auto& f : o.formulas) candidates.push_back(parse_arg(f, "--formula"));
  if (candidates.empty()) {
    std::vector<PropId> atoms;
    for (const auto& [p, s] : m.valuation()) atoms.push_back(p);
    if (atoms.empty()) atoms.emplace_back(kFalsumAtom);
    Rng rng(o.seed);
    for (int k = 0; k < o.count; ++k) {
      Formula body = random_formula(rng, Fragment::kPAL, atoms, m.frame().agents(), 6);
      candidates.push_back(box(std::move(body)));
    }
  }
  const auto d = find_distinguishing(m, candidates);
  if (o.json) {
    json j{{"candidates", candidates.size()}, {"found", d.has_value()}};
    if (d)
      j["distinction"] = {{"point", m.frame().space().id(d->situation.point)},
                          {"theta", describe(m, d->situation.theta)},
                          {"formula", to_string(d->formula)},
                          {"announcement", d->announcement_value},
                          {"effort", d->effort_value}};
    out << j.dump(2) << "\n";
  } else if (d) {
    out << "distinguished by " << to_string(d->formula) << " at " << m.frame().space().id(d->situation.point)
        << " under " << describe(m, d->situation.theta) << ": announcement " << std::boolalpha
        << d->announcement_value << ", effort " << d->effort_value << "\n";
  } else {
    out << "no distinguishing formula among " << candidates.size() << " candidates\n";
  }
  return 0;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Model checker for topological public and arbitrary announcement logic", "topal"};
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "Machine-readable output");
  app.add_option("--mode", o.mode, "Box semantics")->check(CLI::IsMember({"announcement", "effort"}));

  auto* check = app.add_subcommand("check", "Evaluate a formula at a situation");
  check->add_option("--model", o.model, "Model file (JSON)")->required();
  check->add_option("--theta", o.theta, "Generator name, or name:x,y,... for its restriction to an open set");
  check->add_option("--point", o.point, "Point id")->required();
  check->add_option("--formula", o.formula, "Formula")->required();
  check->add_option("--announce", o.announce, "Announcement applied before checking (repeatable, in order)");

  auto* valid = app.add_subcommand("valid", "Check validity of a formula in a model");
  valid->add_option("--model", o.model, "Model file (JSON)")->required();
  valid->add_option("--formula", o.formula, "Formula")->required();

  auto* reduce = app.add_subcommand("reduce", "Rewrite a box-free formula without announcements");
  reduce->add_option("--formula", o.formula, "Formula")->required();
  reduce->add_flag("--trace", o.trace, "Print the rewrite steps with their (depth, size) measures");

  auto* validate_cmd = app.add_subcommand("validate", "Check a model file's structural conditions");
  validate_cmd->add_option("--model", o.model, "Model file (JSON)")->required();

  auto* axioms = app.add_subcommand("axioms", "Run the axiom soundness suite on random models");
  axioms->add_option("--seed", o.seed, "Random seed");
  axioms->add_option("--trials", o.trials, "Number of random models")->check(CLI::NonNegativeNumber);
  axioms->add_option("--max-points", o.max_points, "Largest model size")->check(CLI::Range(1, 12));
  axioms->add_option("--bindings", o.bindings, "Binding sets per model")->check(CLI::PositiveNumber);

  auto* diff = app.add_subcommand("diff", "Search for a formula on which the two box semantics differ");
  diff->add_option("--model", o.model, "Model file (JSON)")->required();
  diff->add_option("--formula", o.formulas, "Candidate formula (repeatable); random candidates if absent");
  diff->add_option("--seed", o.seed, "Seed for random candidates");
  diff->add_option("--count", o.count, "Number of random candidates")->check(CLI::PositiveNumber);

  auto* example = app.add_subcommand("example", "Print the bundled jewel-in-the-tomb model");

  for (auto* sub : {check, valid, reduce, validate_cmd, axioms, diff, example}) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*check) return cmd_check(o, out);
    if (*valid) return cmd_valid(o, out);
    if (*reduce) return cmd_reduce(o, out);
    if (*validate_cmd) return cmd_validate(o, out);
    if (*axioms) return cmd_axioms(o, out);
    if (*diff) return cmd_diff(o, out);
    if (*example) {
      out << jewel_model_json();
      if (!jewel_model_json().ends_with('\n')) out << "\n";
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace topal::cli
