#include <algorithm>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "topal/error.hpp"
#include "topal/formula_io.hpp"
#include "topal/model_io.hpp"
#include "topal/testkit.hpp"

namespace topal {

bool SoundnessReport::ok() const { return total_failures() == 0; }

int SoundnessReport::total_instances() const {
  int n = 0;
  for (const auto& r : results) n += r.instances;
  return n;
}

int SoundnessReport::total_failures() const {
  int n = 0;
  for (const auto& r : results) n += static_cast<int>(r.failures.size());
  return n;
}

std::string SoundnessReport::to_text() const {
  std::ostringstream out;
  for (const auto& r : results) {
    out << r.schema << ": " << r.instances << " instances, " << r.failures.size() << " failures\n";
    for (const auto& f : r.failures)
      out << "  seed " << f.seed << " trial " << f.trial << ": " << f.instance << "\n    model " << f.model_json
          << "\n";
  }
  out << "total: " << total_instances() << " instances, " << total_failures() << " failures\n";
  return out.str();
}

std::string SoundnessReport::to_json(int indent) const {
  nlohmann::json schemas = nlohmann::json::array();
  for (const auto& r : results) {
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& f : r.failures)
      failures.push_back({{"seed", f.seed},
                          {"trial", f.trial},
                          {"model", nlohmann::json::parse(f.model_json)},
                          {"instance", f.instance}});
    schemas.push_back({{"schema", r.schema}, {"trials", r.instances}, {"failures", failures}});
  }
  nlohmann::json root{{"seed", seed}, {"trials", trials}, {"schemas", schemas}};
  return root.dump(indent);
}

TopoModel shrink_model(const TopoModel& model, const std::function<bool(const TopoModel&)>& still_fails) {
  TopoModel current = model;
  bool progress = true;
  while (progress && current.frame().space().size() > 1) {
    progress = false;
    const int n = current.frame().space().size();
    for (int p = 0; p < n; ++p) {
      TopoModel candidate = submodel(current, Subset::full(n).minus(Subset::singleton(p)));
      if (still_fails(candidate)) {
        current = std::move(candidate);
        progress = true;
        break;
      }
    }
  }
  return current;
}

bool dr5_consistent(const Evaluator& ev, const NecessityForm& xi, const Formula& chi) {
  std::set<Formula> witnesses;
  for (const auto& theta : ev.functions()) {
    auto family = ev.definable_family(theta);
    for (Subset u : family->open_members(ev.model().topology())) witnesses.insert(*family->witness(u));
  }
  bool all_instances = true;
  for (const auto& w : witnesses)
    if (!ev.valid(xi.instantiate(announce(w, chi)))) {
      all_instances = false;
      break;
    }
  return ev.valid(xi.instantiate(box(chi))) == all_instances;
}

namespace {

enum Slot : std::size_t { kDR2 = 0, kDR3, kDR4, kDR5 };

class Suite {
 public:
  Suite(SoundnessReport& report, const SuiteOptions& options) : report_(report), options_(options) {
    const auto& schemas = axiom_schemas();
    if (report_.results.empty()) {
      for (const auto& s : schemas) report_.results.push_back({s.name, 0, {}});
      for (const char* rule : {"DR2", "DR3", "DR4", "DR5"}) report_.results.push_back({rule, 0, {}});
    }
  }

  void run(const TopoModel& model, std::span<const Bindings> bindings, std::uint64_t seed, int trial,
           Rng* rng) {
    Evaluator ev(model);
    const auto& schemas = axiom_schemas();
    for (std::size_t k = 0; k < bindings.size(); ++k) {
      const Bindings& b = bindings[k];
      std::vector<Formula> valid_instances;
      for (std::size_t s = 0; s < schemas.size(); ++s) {
        Formula f = instantiate_schema(schemas[s], b);
        ++report_.results[s].instances;
        if (ev.valid(f)) {
          valid_instances.push_back(f);
          continue;
        }
        fail(s, model, seed, trial, schemas[s], b);
      }
      if (options_.check_rules && !valid_instances.empty()) {
        const Formula& premise = valid_instances[k % valid_instances.size()];
        const Formula conclusions[] = {know(b.agent, premise), interior(premise),
                                       announce(bound_or(b, "psi"), premise)};
        for (std::size_t r = 0; r < 3; ++r) {
          ++rule(r).instances;
          if (!ev.valid(conclusions[r])) record(rule(r), model, seed, trial, to_string(conclusions[r]));
        }
      }
      if (options_.check_dr5) {
        NecessityForm xi = rng ? random_necessity_form(*rng, 2, atoms_of_model(model), model.frame().agents(), 5)
                               : NecessityForm::know(b.agent, NecessityForm::hole());
        const Formula& chi = bound_or(b, "phi");
        ++rule(kDR5).instances;
        if (!dr5_consistent(ev, xi, chi))
          record(rule(kDR5), model, seed, trial, "xi = " + to_string(xi.instantiate(atom("hole"))) + ", chi = " +
                                                     to_string(chi));
      }
    }
  }

 private:
  static const Formula& bound_or(const Bindings& b, const char* name) {
    auto it = b.formulas.find(name);
    if (it == b.formulas.end()) throw Error(std::string("missing binding for ") + name);
    return it->second;
  }

  static std::vector<PropId> atoms_of_model(const TopoModel& m) {
    std::vector<PropId> out;
    for (const auto& [p, s] : m.valuation()) out.push_back(p);
    if (out.empty()) out.emplace_back(kFalsumAtom);
    return out;
  }

  SchemaReport& rule(std::size_t r) { return report_.results[axiom_schemas().size() + r]; }

  void record(SchemaReport& r, const TopoModel& model, std::uint64_t seed, int trial, std::string instance) {
    r.failures.push_back({seed, trial, model_to_json(model, -1), std::move(instance)});
  }

  // Shrinks the model, then the bindings, while the instance stays invalid.
  void fail(std::size_t s, const TopoModel& model, std::uint64_t seed, int trial, const AxiomSchema& schema,
            Bindings b) {
    auto fails = [&](const TopoModel& m, const Bindings& bb) {
      try {
        return !Evaluator(m).valid(instantiate_schema(schema, bb));
      } catch (const Error&) {
        return false;
      }
    };
    TopoModel small = model;
    if (options_.shrink) {
      small = shrink_model(model, [&](const TopoModel& m) { return fails(m, b); });
      for (bool progress = true; progress;) {
        progress = false;
        std::optional<Bindings> smaller;
        for (const auto& [name, f] : b.formulas) {
          if (name == "skeleton" || name == "p") continue;
          for (std::size_t c = 0; c < f.arity() && !smaller; ++c) {
            Bindings candidate = b;
            candidate.formulas.at(name) = c == 0 ? f.lhs() : f.rhs();
            if (fails(small, candidate)) smaller = std::move(candidate);
          }
          if (smaller) break;
        }
        if (smaller) {
          b = std::move(*smaller);
          progress = true;
        }
      }
    }
    record(report_.results[s], small, seed, trial, to_string(instantiate_schema(schema, b)));
  }

  SoundnessReport& report_;
  const SuiteOptions& options_;
};

}  // namespace

SoundnessReport soundness_suite(const GenConfig& cfg, int trials, const SuiteOptions& options) {
  cfg.check();
  SoundnessReport report;
  report.seed = cfg.seed;
  report.trials = std::max(trials, 0);
  if (trials <= 0) return report;
  Suite suite(report, options);
  const auto atoms = config_atoms(cfg);
  const auto agents = config_agents(cfg);
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t seed = trial_seed(cfg.seed, static_cast<std::uint64_t>(t));
    Rng rng(seed);
    TopoModel model = random_model(cfg, rng);
    std::vector<Bindings> bindings;
    for (int k = 0; k < options.bindings_per_model; ++k)
      bindings.push_back(random_bindings(rng, atoms, agents, static_cast<std::uint64_t>(cfg.max_formula_size)));
    suite.run(model, bindings, seed, t, &rng);
  }
  return report;
}

SoundnessReport check_schemas(const TopoModel& model, std::span<const Bindings> bindings,
                              const SuiteOptions& options) {
  SoundnessReport report;
  report.trials = 1;
  Suite suite(report, options);
  suite.run(model, bindings, 0, 0, nullptr);
  return report;
}

}  // namespace topal
