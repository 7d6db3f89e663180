#ifndef TOPAL_TESTKIT_HPP_
#define TOPAL_TESTKIT_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "topal/formula.hpp"
#include "topal/model.hpp"
#include "topal/necessity.hpp"
#include "topal/semantics.hpp"

namespace topal {

// ---------------------------------------------------------------------------
// Random generation

struct GenConfig {
  std::uint64_t seed = 1;
  int max_points = 4;         ///< 1..12
  int num_agents = 2;         ///< 1..3
  int num_atoms = 2;          ///< 1..4
  int max_formula_size = 10;  ///< >= 1
  double subbase_density = 0.5;

  /// Throws Error when a field is out of range.
  void check() const;
};

/// Deterministic random source; identical seeds give identical streams on
/// every platform (no std distributions involved).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, n).
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [lo, hi].
  int range(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1)); }
  bool chance(double p) { return static_cast<double>(next() >> 11) * 0x1.0p-53 < p; }

  template <typename T>
  const T& pick(const std::vector<T>& items) {
    return items[below(items.size())];
  }

 private:
  std::mt19937_64 engine_;
};

/// Seed for trial `index` of a run seeded with `seed`.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index);

enum class Fragment { kEL, kPAL, kAPAL };

/// Proposition ids p, q, r, s (first `cfg.num_atoms`).
std::vector<PropId> config_atoms(const GenConfig& cfg);
/// Agent ids a, b, c (first `cfg.num_agents`).
std::vector<AgentId> config_agents(const GenConfig& cfg);

/// A valid topo-model: random subbase topology, one or two generators whose
/// per-agent partitions come from coarsening random open covers. Throws
/// Error if no valid model is produced within a bounded number of retries.
TopoModel random_model(const GenConfig& cfg, Rng& rng);
TopoModel random_model(const GenConfig& cfg);

/// Random formula of size <= cfg.max_formula_size inside `fragment`.
Formula random_formula(const GenConfig& cfg, Fragment fragment, Rng& rng);
Formula random_formula(const GenConfig& cfg, Fragment fragment);
/// Same, with an explicit vocabulary and size budget.
Formula random_formula(Rng& rng, Fragment fragment, const std::vector<PropId>& atoms,
                       const std::vector<AgentId>& agents, std::uint64_t max_size);

/// Random necessity form of at most `depth` layers; antecedents and
/// announcements are PAL formulas of size <= max_size.
NecessityForm random_necessity_form(Rng& rng, int depth, const std::vector<PropId>& atoms,
                                    const std::vector<AgentId>& agents, std::uint64_t max_size);

// ---------------------------------------------------------------------------
// Axiom schemas

enum class Schema { kP, kKK, kKT, kK4, kK5, kIntK, kIntT, kInt4, kKInt, kR1, kR2, kR3, kR4, kR5, kR6, kR7 };

struct AxiomSchema {
  Schema id;
  std::string name;                        ///< "P", "K-K", ..., "R7"
  std::vector<std::string> metavariables;  ///< subset of phi, psi, chi, p, i, skeleton
};

/// Every axiom schema, in a fixed order.
const std::vector<AxiomSchema>& axiom_schemas();
const AxiomSchema& axiom_schema(Schema id);
/// Throws Error for unknown names.
const AxiomSchema& axiom_schema(const std::string& name);

/// Metavariable assignment. Formula metavariables are "phi", "psi", "chi"
/// and "p" (an atom). "skeleton" is the propositional tautology used by P,
/// written over atoms phi, psi, chi; it defaults to phi -> (psi -> phi).
struct Bindings {
  std::map<std::string, Formula> formulas;
  AgentId agent;
};

/// Substitutes the bindings into the schema. Throws Error for missing
/// bindings or a non-tautological skeleton, and FragmentError when R7's
/// chi contains Box.
Formula instantiate_schema(const AxiomSchema& schema, const Bindings& bindings);

/// Truth-table check over the skeleton's atoms.
bool is_tautology(const Formula& propositional);

/// Random bindings for every metavariable over the given vocabulary.
Bindings random_bindings(Rng& rng, const std::vector<PropId>& atoms, const std::vector<AgentId>& agents,
                         std::uint64_t max_size);

// ---------------------------------------------------------------------------
// Soundness suite

struct Counterexample {
  std::uint64_t seed = 0;
  int trial = 0;
  std::string model_json;
  std::string instance;
};

struct SchemaReport {
  std::string schema;
  int instances = 0;
  std::vector<Counterexample> failures;
};

struct SoundnessReport {
  std::uint64_t seed = 0;
  int trials = 0;
  /// One entry per axiom schema, then DR2, DR3, DR4 and DR5.
  std::vector<SchemaReport> results;

  bool ok() const;
  int total_instances() const;
  int total_failures() const;
  /// One line per schema.
  std::string to_text() const;
  /// {"seed", "trials", "schemas": [{schema, trials, failures: [{seed, model, instance}]}]}
  std::string to_json(int indent = 2) const;
};

struct SuiteOptions {
  int bindings_per_model = 5;
  bool check_rules = true;     ///< DR2-DR4 spot checks
  bool check_dr5 = true;       ///< semantic DR5 consistency
  bool shrink = true;          ///< minimize counterexamples
};

/// Checks every schema instance for validity on `trials` random models.
SoundnessReport soundness_suite(const GenConfig& cfg, int trials, const SuiteOptions& options = {});

/// Checks every schema instance for each binding set on one fixed model.
/// The model is used as given, even if it violates the frame conditions.
SoundnessReport check_schemas(const TopoModel& model, std::span<const Bindings> bindings,
                              const SuiteOptions& options = {});

/// DR5 consistency on one model: validity of xi(box chi) agrees with
/// validity of xi([w] chi) for every witness w of a definable open of any
/// neighbourhood function of the model.
bool dr5_consistent(const Evaluator& ev, const NecessityForm& xi, const Formula& chi);

/// Repeatedly drops points while `still_fails` holds on the submodel.
TopoModel shrink_model(const TopoModel& model, const std::function<bool(const TopoModel&)>& still_fails);

// ---------------------------------------------------------------------------
// Box oracle

enum class Verdict { kTrue, kFalse, kUnknown };

struct OracleResult {
  Verdict verdict = Verdict::kUnknown;
  std::optional<Formula> refutation;  ///< announcement falsifying the body, for kFalse
  std::size_t distinct_extensions = 0;
  std::size_t realized_updates = 0;
  std::size_t definable_opens = 0;
};

/// Decides box(g) at `s` by literal enumeration of announcement-free
/// Box-free formulas of size <= bound, smallest first, keeping one formula
/// per extension. False as soon as some [psi]g fails; true once every
/// definable open has been realized as an update; unknown otherwise.
/// Throws Error unless f is a Box formula.
OracleResult box_oracle(const TopoModel& m, const Situation& s, const Formula& f, int bound);

std::string to_string(Verdict v);

}  // namespace topal

#endif  // TOPAL_TESTKIT_HPP_
