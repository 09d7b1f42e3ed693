#include "dprm/recfun/eval.hpp"

#include <optional>
#include <string>

namespace dprm::recfun {
namespace {

std::optional<Nat> run(const Expr& f, const std::vector<Nat>& args, Budget& budget) {
  if (!budget.spend()) return std::nullopt;
  switch (f.kind()) {
    case Kind::Zero:
      return Nat(0);
    case Kind::Succ:
      return args[0] + 1;
    case Kind::Proj:
      return args[f.index()];
    case Kind::Compose: {
      const auto& ch = f.children();
      std::vector<Nat> mid;
      mid.reserve(ch.size() - 1);
      for (std::size_t i = 1; i < ch.size(); ++i) {
        auto v = run(ch[i], args, budget);
        if (!v) return std::nullopt;
        mid.push_back(std::move(*v));
      }
      return run(ch[0], mid, budget);
    }
    case Kind::PrimRec: {
      const Expr& base = f.child(0);
      const Expr& step = f.child(1);
      std::vector<Nat> rest(args.begin() + 1, args.end());
      auto acc = run(base, rest, budget);
      if (!acc) return std::nullopt;
      std::vector<Nat> sargs(args.size() + 1);
      for (std::size_t i = 1; i < args.size(); ++i) sargs[i + 1] = args[i];
      for (Nat y = 0; y < args[0]; ++y) {
        sargs[0] = y;
        sargs[1] = std::move(*acc);
        acc = run(step, sargs, budget);
        if (!acc) return std::nullopt;
      }
      return acc;
    }
    case Kind::Mu: {
      const Expr& body = f.child(0);
      std::vector<Nat> bargs(args.size() + 1);
      for (std::size_t i = 0; i < args.size(); ++i) bargs[i + 1] = args[i];
      for (Nat y = 0;; ++y) {
        if (!budget.spend()) return std::nullopt;
        bargs[0] = y;
        auto v = run(body, bargs, budget);
        if (!v) return std::nullopt;
        if (*v == 0) return y;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

EvalOutcome eval(const Expr& f, const std::vector<Nat>& args, Budget& budget) {
  if (args.size() != f.arity()) {
    throw StructuralError("eval: expected " + std::to_string(f.arity()) + " arguments, got " +
                          std::to_string(args.size()));
  }
  for (const auto& a : args) {
    if (a < 0) throw StructuralError("eval: negative argument");
  }
  auto v = run(f, args, budget);
  if (v) return Value{std::move(*v)};
  return BudgetExhausted{budget.used()};
}

EvalOutcome eval(const Expr& f, const std::vector<Nat>& args, std::uint64_t steps) {
  Budget b(steps);
  return eval(f, args, b);
}

}  // namespace dprm::recfun
