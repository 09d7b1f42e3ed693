#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "dprm/kernel/budget.hpp"
#include "dprm/kernel/numbers.hpp"
#include "dprm/recfun/expr.hpp"

namespace dprm::recfun {

struct Value {
  Nat value;
};

struct BudgetExhausted {
  std::uint64_t steps_used;
};

using EvalOutcome = std::variant<Value, BudgetExhausted>;

inline bool halted(const EvalOutcome& o) { return std::holds_alternative<Value>(o); }
inline const Nat& value_of(const EvalOutcome& o) { return std::get<Value>(o).value; }

// Cost model: one step per node visit, plus one step per μ probe.
// Primitive recursion runs as a loop, so deep recursions do not grow the
// native stack. Throws StructuralError when |args| != arity(f).
EvalOutcome eval(const Expr& f, const std::vector<Nat>& args, Budget& budget);
EvalOutcome eval(const Expr& f, const std::vector<Nat>& args, std::uint64_t steps);

}  // namespace dprm::recfun
