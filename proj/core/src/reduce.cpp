#include "topal/reduce.hpp"

#include <unordered_map>

#include "topal/error.hpp"
#include "topal/formula_io.hpp"

namespace topal {

namespace {

class Reducer {
 public:
  explicit Reducer(std::vector<ReductionStep>* trace) : trace_(trace) {}

  Formula reduce(const Formula& f) {
    if (!f.has_announcement()) return f;
    auto it = memo_.find(f);
    if (it != memo_.end()) return it->second;
    Formula out = [&] {
      switch (f.op()) {
        case Op::kNot: return neg(reduce(f.arg()));
        case Op::kAnd: return conj(reduce(f.lhs()), reduce(f.rhs()));
        case Op::kKnow: return know(f.label(), reduce(f.arg()));
        case Op::kInt: return interior(reduce(f.arg()));
        case Op::kAnnounce: return reduce_announcement(f);
        default: throw FragmentError("cannot reduce Box formula " + to_string(f));
      }
    }();
    memo_.emplace(f, out);
    return out;
  }

 private:
  void record(const char* rule, const Formula& before, const Formula& after, std::vector<Formula> subproblems) {
    if (!trace_) return;
    ReductionStep step{rule, before, after, Measure::of(before), std::move(subproblems), {}, true};
    for (const auto& s : step.subproblems) {
      step.subproblem_measures.push_back(Measure::of(s));
      if (!compare(s, before).less_size_depth) step.decreasing = false;
    }
    trace_->push_back(std::move(step));
  }

  Formula reduce_announcement(const Formula& f) {
    const Formula& a = f.lhs();
    const Formula& body = f.rhs();
    const Formula int_a = interior(a);
    switch (body.op()) {
      case Op::kAtom: {
        record("R1", f, implies(int_a, body), {int_a, body});
        return implies(reduce(int_a), body);
      }
      case Op::kNot: {
        Formula sub = neg(announce(a, body.arg()));
        record("R2", f, implies(int_a, sub), {int_a, sub});
        return implies(reduce(int_a), reduce(sub));
      }
      case Op::kAnd: {
        Formula l = announce(a, body.lhs());
        Formula r = announce(a, body.rhs());
        record("R3", f, conj(l, r), {l, r});
        return conj(reduce(l), reduce(r));
      }
      case Op::kInt: {
        Formula sub = interior(announce(a, body.arg()));
        record("R4", f, implies(int_a, sub), {int_a, sub});
        return implies(reduce(int_a), reduce(sub));
      }
      case Op::kKnow: {
        Formula sub = know(body.label(), announce(a, body.arg()));
        record("R5", f, implies(int_a, sub), {int_a, sub});
        return implies(reduce(int_a), reduce(sub));
      }
      case Op::kAnnounce: {
        Formula sub = announce(neg(announce(a, neg(interior(body.lhs())))), body.rhs());
        record("R6", f, sub, {sub});
        return reduce(sub);
      }
      case Op::kBox:
        break;
    }
    throw FragmentError("cannot reduce an announcement of or into a Box formula: " + to_string(f));
  }

  std::vector<ReductionStep>* trace_;
  std::unordered_map<Formula, Formula> memo_;
};

void require_box_free(const Formula& f) {
  if (f.box_depth() != 0) throw FragmentError("reduction needs a Box-free formula, got " + to_string(f));
}

}  // namespace

Formula reduce_to_el(const Formula& f) {
  require_box_free(f);
  return Reducer(nullptr).reduce(f);
}

std::vector<ReductionStep> reduction_trace(const Formula& f) {
  require_box_free(f);
  std::vector<ReductionStep> trace;
  Reducer(&trace).reduce(f);
  return trace;
}

}  // namespace topal
