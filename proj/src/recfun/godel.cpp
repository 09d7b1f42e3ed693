#include "dprm/recfun/godel.hpp"

#include <limits>

#include "dprm/kernel/pairing.hpp"

namespace dprm::recfun {
namespace {

enum Tag : unsigned { kZero = 1, kSucc = 2, kProj = 3, kCompose = 4, kPrimRec = 5, kMu = 6 };

// Arity fields beyond this are rejected; no realistic program gets close and
// it keeps the decoded arity a sane machine integer.
constexpr std::size_t kMaxArity = 1u << 20;

Nat encode_list(const std::vector<Expr>& items, std::size_t from) {
  Nat acc = 0;
  for (std::size_t i = items.size(); i-- > from;) acc = 1 + cantor_pair(godel_encode(items[i]), acc);
  return acc;
}

std::optional<std::size_t> small(const Nat& v) {
  if (v > kMaxArity) return std::nullopt;
  return static_cast<std::size_t>(v.get_ui());
}

std::optional<Expr> decode(const Nat& n) {
  auto [tag, payload] = cantor_unpair(n);
  if (tag > 6) return std::nullopt;
  switch (tag.get_ui()) {
    case kZero: {
      auto k = small(payload);
      if (!k) return std::nullopt;
      return Expr::zero(*k);
    }
    case kSucc:
      if (payload != 0) return std::nullopt;
      return Expr::succ();
    case kProj: {
      auto [i, k] = cantor_unpair(payload);
      auto ii = small(i);
      auto kk = small(k);
      if (!ii || !kk || *ii >= *kk) return std::nullopt;
      return Expr::proj(*ii, *kk);
    }
    case kCompose: {
      auto [g, list] = cantor_unpair(payload);
      auto outer = decode(g);
      if (!outer) return std::nullopt;
      std::vector<Expr> inners;
      while (list != 0) {
        auto [h, rest] = cantor_unpair(list - 1);
        auto inner = decode(h);
        if (!inner) return std::nullopt;
        inners.push_back(*inner);
        list = rest;
      }
      if (inners.empty() || outer->arity() != inners.size()) return std::nullopt;
      for (const auto& h : inners) {
        if (h.arity() != inners.front().arity()) return std::nullopt;
      }
      return Expr::compose(*outer, std::move(inners));
    }
    case kPrimRec: {
      auto [b, s] = cantor_unpair(payload);
      auto base = decode(b);
      if (!base) return std::nullopt;
      auto step = decode(s);
      if (!step || step->arity() != base->arity() + 2) return std::nullopt;
      return Expr::primrec(*base, *step);
    }
    case kMu: {
      auto body = decode(payload);
      if (!body || body->arity() == 0) return std::nullopt;
      return Expr::mu(*body);
    }
    default:
      return std::nullopt;
  }
}

}  // namespace

Nat godel_encode(const Expr& f) {
  switch (f.kind()) {
    case Kind::Zero:
      return cantor_pair(kZero, Nat(static_cast<unsigned long>(f.arity())));
    case Kind::Succ:
      return cantor_pair(kSucc, 0);
    case Kind::Proj:
      return cantor_pair(kProj, cantor_pair(Nat(static_cast<unsigned long>(f.index())),
                                            Nat(static_cast<unsigned long>(f.arity()))));
    case Kind::Compose:
      return cantor_pair(kCompose,
                         cantor_pair(godel_encode(f.child(0)), encode_list(f.children(), 1)));
    case Kind::PrimRec:
      return cantor_pair(kPrimRec, cantor_pair(godel_encode(f.child(0)), godel_encode(f.child(1))));
    case Kind::Mu:
      return cantor_pair(kMu, godel_encode(f.child(0)));
  }
  return 0;
}

std::optional<Expr> godel_try_decode(const Nat& n) {
  if (n < 0) return std::nullopt;
  return decode(n);
}

Expr godel_decode(const Nat& n) {
  auto e = godel_try_decode(n);
  return e ? *e : diverging(1);
}

Expr godel_decode(const Nat& n, std::size_t arity) {
  auto e = godel_try_decode(n);
  if (e && e->arity() == arity) return *e;
  return diverging(arity);
}

EvalOutcome eval_universal(const Nat& e, const std::vector<Nat>& args, Budget& budget) {
  auto decoded = godel_try_decode(e);
  bool valid = decoded && decoded->arity() == args.size();
  Expr program = valid ? *decoded : diverging(args.size());
  std::uint64_t cost = valid ? program.size() : 1;
  if (!budget.spend(cost)) return BudgetExhausted{budget.used()};
  return eval(program, args, budget);
}

EvalOutcome eval_universal(const Nat& e, const std::vector<Nat>& args, std::uint64_t steps) {
  Budget b(steps);
  return eval_universal(e, args, b);
}

Enumerator<std::uint64_t> halting_prefix(std::uint64_t fuel) {
  return dovetail(
      [](std::uint64_t x, std::uint64_t s) {
        Nat nx = from_u64(x);
        return halted(eval_universal(nx, {nx}, s));
      },
      fuel);
}

}  // namespace dprm::recfun
