#include <algorithm>

#include "topal/error.hpp"
#include "topal/formula_io.hpp"
#include "topal/testkit.hpp"

namespace topal {

const std::vector<AxiomSchema>& axiom_schemas() {
  static const std::vector<AxiomSchema> kSchemas{
      {Schema::kP, "P", {"skeleton", "phi", "psi", "chi"}},
      {Schema::kKK, "K-K", {"i", "phi", "psi"}},
      {Schema::kKT, "K-T", {"i", "phi"}},
      {Schema::kK4, "K-4", {"i", "phi"}},
      {Schema::kK5, "K-5", {"i", "phi"}},
      {Schema::kIntK, "int-K", {"phi", "psi"}},
      {Schema::kIntT, "int-T", {"phi"}},
      {Schema::kInt4, "int-4", {"phi"}},
      {Schema::kKInt, "K_int", {"i", "phi"}},
      {Schema::kR1, "R1", {"phi", "p"}},
      {Schema::kR2, "R2", {"phi", "psi"}},
      {Schema::kR3, "R3", {"phi", "psi", "chi"}},
      {Schema::kR4, "R4", {"phi", "psi"}},
      {Schema::kR5, "R5", {"i", "phi", "psi"}},
      {Schema::kR6, "R6", {"phi", "psi", "chi"}},
      {Schema::kR7, "R7", {"phi", "chi"}},
  };
  return kSchemas;
}

const AxiomSchema& axiom_schema(Schema id) {
  for (const auto& s : axiom_schemas())
    if (s.id == id) return s;
  throw Error("unknown schema id");
}

const AxiomSchema& axiom_schema(const std::string& name) {
  for (const auto& s : axiom_schemas())
    if (s.name == name) return s;
  throw Error("unknown axiom schema '" + name + "'");
}

namespace {

const Formula& bound(const Bindings& b, const std::string& name) {
  auto it = b.formulas.find(name);
  if (it == b.formulas.end()) throw Error("missing binding for " + name);
  return it->second;
}

const std::vector<std::string>& skeleton_atoms() {
  static const std::vector<std::string> kAtoms{"phi", "psi", "chi"};
  return kAtoms;
}

Formula substitute(const Formula& skeleton, const Bindings& b) {
  switch (skeleton.op()) {
    case Op::kAtom:
      if (skeleton.label() == kFalsumAtom) return skeleton;
      return bound(b, skeleton.label());
    case Op::kNot: return neg(substitute(skeleton.arg(), b));
    case Op::kAnd: return conj(substitute(skeleton.lhs(), b), substitute(skeleton.rhs(), b));
    default: break;
  }
  throw Error("skeleton must be propositional");
}

Formula random_propositional(Rng& rng, std::uint64_t budget) {
  if (budget <= 1) return atom(rng.pick(skeleton_atoms()));
  if (budget == 2 || rng.chance(0.4)) return neg(random_propositional(rng, budget - 1));
  const auto left = 1 + rng.below(budget - 1);
  Formula l = random_propositional(rng, left);
  return conj(std::move(l), random_propositional(rng, budget - left));
}

}  // namespace

bool is_tautology(const Formula& f) {
  if (!in_propositional(f)) throw Error("is_tautology needs a propositional formula");
  std::vector<PropId> atoms = atoms_of(f);
  std::erase(atoms, PropId(kFalsumAtom));
  if (atoms.size() > 20) throw Error("too many atoms for a truth table");
  for (std::uint32_t row = 0; row < (std::uint32_t{1} << atoms.size()); ++row) {
    std::function<bool(const Formula&)> eval = [&](const Formula& g) -> bool {
      switch (g.op()) {
        case Op::kAtom: {
          auto it = std::find(atoms.begin(), atoms.end(), g.label());
          return it != atoms.end() && ((row >> (it - atoms.begin())) & 1U);
        }
        case Op::kNot: return !eval(g.arg());
        case Op::kAnd: return eval(g.lhs()) && eval(g.rhs());
        default: return false;
      }
    };
    if (!eval(f)) return false;
  }
  return true;
}

Formula instantiate_schema(const AxiomSchema& schema, const Bindings& b) {
  auto phi = [&] { return bound(b, "phi"); };
  auto psi = [&] { return bound(b, "psi"); };
  auto chi = [&] { return bound(b, "chi"); };
  auto agent = [&] {
    if (b.agent.empty()) throw Error("missing binding for i");
    return b.agent;
  };
  switch (schema.id) {
    case Schema::kP: {
      auto it = b.formulas.find("skeleton");
      Formula skeleton =
          it != b.formulas.end() ? it->second : implies(atom("phi"), implies(atom("psi"), atom("phi")));
      for (const auto& a : atoms_of(skeleton))
        if (a != kFalsumAtom && std::find(skeleton_atoms().begin(), skeleton_atoms().end(), a) == skeleton_atoms().end())
          throw Error("skeleton atom '" + a + "' is not one of phi, psi, chi");
      if (!is_tautology(skeleton)) throw Error("skeleton " + to_string(skeleton) + " is not a tautology");
      return substitute(skeleton, b);
    }
    case Schema::kKK:
      return implies(know(agent(), implies(phi(), psi())), implies(know(agent(), phi()), know(agent(), psi())));
    case Schema::kKT: return implies(know(agent(), phi()), phi());
    case Schema::kK4: return implies(know(agent(), phi()), know(agent(), know(agent(), phi())));
    case Schema::kK5: return implies(neg(know(agent(), phi())), know(agent(), neg(know(agent(), phi()))));
    case Schema::kIntK:
      return implies(interior(implies(phi(), psi())), implies(interior(phi()), interior(psi())));
    case Schema::kIntT: return implies(interior(phi()), phi());
    case Schema::kInt4: return implies(interior(phi()), interior(interior(phi())));
    case Schema::kKInt: return implies(know(agent(), phi()), interior(phi()));
    case Schema::kR1: {
      const Formula& p = bound(b, "p");
      if (p.op() != Op::kAtom) throw Error("R1 needs an atom for p");
      return iff(announce(phi(), p), implies(interior(phi()), p));
    }
    case Schema::kR2:
      return iff(announce(phi(), neg(psi())), implies(interior(phi()), neg(announce(phi(), psi()))));
    case Schema::kR3:
      return iff(announce(phi(), conj(psi(), chi())), conj(announce(phi(), psi()), announce(phi(), chi())));
    case Schema::kR4:
      return iff(announce(phi(), interior(psi())), implies(interior(phi()), interior(announce(phi(), psi()))));
    case Schema::kR5:
      return iff(announce(phi(), know(agent(), psi())),
                 implies(interior(phi()), know(agent(), announce(phi(), psi()))));
    case Schema::kR6:
      return iff(announce(phi(), announce(psi(), chi())),
                 announce(neg(announce(phi(), neg(interior(psi())))), chi()));
    case Schema::kR7:
      if (!in_pal(chi())) throw FragmentError("R7 needs chi without box, got " + to_string(chi()));
      return implies(box(phi()), announce(chi(), phi()));
  }
  throw Error("unknown schema");
}

Bindings random_bindings(Rng& rng, const std::vector<PropId>& atoms, const std::vector<AgentId>& agents,
                         std::uint64_t max_size) {
  Bindings b;
  b.formulas.emplace("phi", random_formula(rng, Fragment::kAPAL, atoms, agents, max_size));
  b.formulas.emplace("psi", random_formula(rng, Fragment::kAPAL, atoms, agents, max_size));
  b.formulas.emplace("chi", random_formula(rng, Fragment::kPAL, atoms, agents, max_size));
  b.formulas.emplace("p", atom(rng.pick(atoms)));
  b.agent = rng.pick(agents);

  // Random propositional formulas over phi, psi, chi until one is a tautology.
  constexpr int kTries = 64;
  for (int k = 0; k < kTries; ++k) {
    Formula s = random_propositional(rng, 1 + rng.below(9));
    if (is_tautology(s)) {
      b.formulas.emplace("skeleton", std::move(s));
      return b;
    }
  }
  static const std::vector<Formula> kFallback{
      implies(atom("phi"), implies(atom("psi"), atom("phi"))),
      disj(atom("phi"), neg(atom("phi"))),
      implies(conj(atom("phi"), atom("psi")), atom("psi")),
      implies(implies(atom("phi"), atom("psi")), implies(neg(atom("psi")), neg(atom("phi")))),
      implies(implies(atom("phi"), implies(atom("psi"), atom("chi"))),
              implies(implies(atom("phi"), atom("psi")), implies(atom("phi"), atom("chi")))),
  };
  b.formulas.emplace("skeleton", rng.pick(kFallback));
  return b;
}

}  // namespace topal
