#include "topal/necessity.hpp"

namespace topal {

struct NecessityForm::Node {
  Kind kind;
  std::string agent;
  std::shared_ptr<const Formula> formula;
  NecessityForm inner;
};

NecessityForm NecessityForm::hole() { return NecessityForm(); }

NecessityForm NecessityForm::implies(Formula antecedent, NecessityForm inner) {
  NecessityForm nf;
  nf.node_ = std::make_shared<const Node>(
      Node{Kind::kImplies, {}, std::make_shared<const Formula>(std::move(antecedent)), std::move(inner)});
  return nf;
}

NecessityForm NecessityForm::know(AgentId agent, NecessityForm inner) {
  NecessityForm nf;
  nf.node_ = std::make_shared<const Node>(Node{Kind::kKnow, std::move(agent), nullptr, std::move(inner)});
  return nf;
}

NecessityForm NecessityForm::interior(NecessityForm inner) {
  NecessityForm nf;
  nf.node_ = std::make_shared<const Node>(Node{Kind::kInt, {}, nullptr, std::move(inner)});
  return nf;
}

NecessityForm NecessityForm::announce(Formula announced, NecessityForm inner) {
  NecessityForm nf;
  nf.node_ = std::make_shared<const Node>(
      Node{Kind::kAnnounce, {}, std::make_shared<const Formula>(std::move(announced)), std::move(inner)});
  return nf;
}

Formula NecessityForm::instantiate(const Formula& f) const {
  if (!node_) return f;
  Formula inner = node_->inner.instantiate(f);
  switch (node_->kind) {
    case Kind::kImplies: return topal::implies(*node_->formula, std::move(inner));
    case Kind::kKnow: return topal::know(node_->agent, std::move(inner));
    case Kind::kInt: return topal::interior(std::move(inner));
    case Kind::kAnnounce: return topal::announce(*node_->formula, std::move(inner));
    case Kind::kHole: break;
  }
  return f;
}

NecessityForm::Kind NecessityForm::kind() const { return node_ ? node_->kind : Kind::kHole; }

int NecessityForm::depth() const { return node_ ? 1 + node_->inner.depth() : 0; }

}  // namespace topal
