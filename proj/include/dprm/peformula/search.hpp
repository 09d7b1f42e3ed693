#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dprm/kernel/enumerator.hpp"
#include "dprm/peformula/formula.hpp"
#include "dprm/presentations/presentation.hpp"

namespace dprm::pe {

using pres::Code;
using pres::Presentation;
using pres::Structure;

template <class T>
using Assignment = std::map<std::string, T>;

// Witness codes for the bound variables of the prenex form, outermost first.
struct Witness {
  std::vector<std::string> vars;
  std::vector<Code> codes;
};

template <class T>
std::optional<T> eval_term(const Term& t, const Structure<T>& s, const Assignment<T>& env) {
  switch (t.kind()) {
    case TermKind::Var: {
      auto it = env.find(t.name());
      if (it == env.end()) throw StructuralError("unassigned variable '" + t.name() + "'");
      return it->second;
    }
    case TermKind::Const: {
      auto v = s.constant(t.name());
      if (!v) throw StructuralError("unknown constant '" + t.name() + "' in " + s.name);
      return v;
    }
    case TermKind::App: {
      auto arity = s.signature.function_arity(t.name());
      if (!arity || *arity != t.args().size()) {
        throw StructuralError("function '" + t.name() + "' not in the signature of " + s.name);
      }
      std::vector<T> args;
      for (const auto& a : t.args()) {
        auto v = eval_term(a, s, env);
        if (!v) return std::nullopt;
        args.push_back(std::move(*v));
      }
      return s.apply(t.name(), args);
    }
  }
  return std::nullopt;
}

// Truth of a quantifier-free formula under a total assignment.
template <class T>
bool holds_qf(const Formula& f, const Structure<T>& s, const Assignment<T>& env) {
  switch (f.kind()) {
    case FormulaKind::Atomic: {
      auto arity = s.signature.relation_arity(f.relation());
      if (!arity || *arity != f.terms().size()) {
        throw StructuralError("relation '" + f.relation() + "' not in the signature of " + s.name);
      }
      std::vector<T> vals;
      for (const auto& t : f.terms()) {
        auto v = eval_term(t, s, env);
        if (!v) return false;
        vals.push_back(std::move(*v));
      }
      return s.relation(f.relation(), vals);
    }
    case FormulaKind::And:
      return holds_qf(f.left(), s, env) && holds_qf(f.right(), s, env);
    case FormulaKind::Or:
      return holds_qf(f.left(), s, env) || holds_qf(f.right(), s, env);
    case FormulaKind::Exists:
      throw StructuralError("holds_qf: quantifier in matrix");
  }
  return false;
}

// Tuples of length m in order of total sum, then lexicographically with the
// first coordinate most significant (so the last coordinate moves fastest).
class SumOrderTuples {
 public:
  explicit SumOrderTuples(std::size_t m) : m_(m), cur_(m, 0) {}
  const std::vector<Code>& current() const { return cur_; }
  // Advances to the next tuple. Returns false only for m = 0 after the
  // single empty tuple.
  bool advance();

 private:
  std::size_t m_;
  std::vector<Code> cur_;
  Code sum_ = 0;
  bool empty_done_ = false;
};

inline bool SumOrderTuples::advance() {
  if (m_ == 0) {
    empty_done_ = true;
    return false;
  }
  // Next tuple with the same sum in lexicographic order: find the rightmost
  // position i < m-1 that can grow by taking one unit from the suffix.
  for (std::size_t i = m_ - 1; i-- > 0;) {
    Code suffix = 0;
    for (std::size_t j = i + 1; j < m_; ++j) suffix += cur_[j];
    if (suffix > 0) {
      ++cur_[i];
      for (std::size_t j = i + 1; j < m_; ++j) cur_[j] = 0;
      cur_[m_ - 1] = suffix - 1;
      return true;
    }
  }
  ++sum_;
  std::fill(cur_.begin(), cur_.end(), 0);
  cur_[m_ - 1] = sum_;
  return true;
}

// Semi-decides env |= phi by searching witness codes for the bound
// variables through rho. One fuel unit per candidate tuple. A Yes carries
// witnesses that make the matrix true; fuel exhaustion gives Unknown.
template <class T>
pres::SemiDecision<Witness> satisfy_search(const Formula& phi, const Presentation<T>& rho,
                                           const Assignment<T>& env, std::uint64_t fuel) {
  for (const auto& v : free_vars(phi)) {
    if (!env.count(v)) throw StructuralError("free variable '" + v + "' is not assigned");
  }
  Prenex p = to_prenex(phi);
  pres::DecodeCache<T> cache(rho.decode);
  SumOrderTuples tuples(p.bound.size());
  Assignment<T> local = env;
  for (std::uint64_t spent = 0; spent < fuel;) {
    ++spent;
    const auto& codes = tuples.current();
    for (std::size_t i = 0; i < codes.size(); ++i) local.insert_or_assign(p.bound[i], cache(codes[i]));
    if (holds_qf(p.matrix, *rho.structure, local)) {
      return pres::Yes<Witness>{Witness{p.bound, codes}};
    }
    if (!tuples.advance()) return pres::Unknown{spent};
  }
  return pres::Unknown{fuel};
}

// Re-checks a witness produced by satisfy_search.
template <class T>
bool verify_witness(const Formula& phi, const Presentation<T>& rho, const Assignment<T>& env,
                    const Witness& w) {
  Prenex p = to_prenex(phi);
  if (p.bound != w.vars) return false;
  Assignment<T> local = env;
  for (std::size_t i = 0; i < w.codes.size(); ++i) local.insert_or_assign(p.bound[i], rho.decode(w.codes[i]));
  return holds_qf(p.matrix, *rho.structure, local);
}

// Brute-force oracle: does some witness with every code below `box` exist?
template <class T>
bool holds_within_box(const Formula& phi, const Presentation<T>& rho, const Assignment<T>& env, Code box) {
  Prenex p = to_prenex(phi);
  std::size_t m = p.bound.size();
  pres::DecodeCache<T> cache(rho.decode);
  std::vector<Code> codes(m, 0);
  Assignment<T> local = env;
  for (;;) {
    for (std::size_t i = 0; i < m; ++i) local.insert_or_assign(p.bound[i], cache(codes[i]));
    if (holds_qf(p.matrix, *rho.structure, local)) return true;
    std::size_t i = m;
    while (i > 0) {
      --i;
      if (++codes[i] < box) break;
      codes[i] = 0;
      if (i == 0) return false;
    }
    if (m == 0) return false;
  }
}

// Tuples (decoded values of vars) satisfying phi, where vars lists the free
// variables in output order. Free and bound codes are searched together in
// SumOrderTuples order with the free variables outermost; each satisfying
// value tuple is emitted once. One fuel unit per candidate.
template <class T>
Enumerator<std::vector<T>> definable_prefix(const Formula& phi, std::vector<std::string> vars,
                                            const Presentation<T>& rho, std::uint64_t fuel) {
  auto fv = free_vars(phi);
  for (const auto& v : fv) {
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) {
      throw StructuralError("free variable '" + v + "' missing from the output variables");
    }
  }
  struct State {
    Prenex p;
    std::vector<std::string> all;
    std::size_t r;
    Presentation<T> rho;
    pres::DecodeCache<T> cache;
    SumOrderTuples tuples;
    std::set<std::vector<T>> seen;
    bool done = false;
  };
  Prenex p = to_prenex(phi);
  // Output variables may collide with renamed bound variables only if they
  // are not free; prenexing keeps free names, so rename bound ones that
  // clash with an unused output variable.
  std::set<std::string> outs(vars.begin(), vars.end());
  std::map<std::string, std::string> clash;
  FreshNames fresh(all_vars(phi));
  fresh.reserve(outs);
  for (auto& b : p.bound) {
    if (outs.count(b)) {
      std::string nb = fresh.next(b);
      clash[b] = nb;
      b = nb;
    }
  }
  if (!clash.empty()) p.matrix = rename_free(p.matrix, clash);
  std::vector<std::string> all = vars;
  all.insert(all.end(), p.bound.begin(), p.bound.end());
  std::size_t r = vars.size();
  std::size_t m = all.size();
  auto st = std::make_shared<State>(State{p, all, r, rho, pres::DecodeCache<T>(rho.decode), SumOrderTuples(m), {}, false});
  return Enumerator<std::vector<T>>(
      [st]() -> StepResult<std::vector<T>> {
        if (st->done) return StepResult<std::vector<T>>::finish();
        const auto& codes = st->tuples.current();
        Assignment<T> env;
        for (std::size_t i = 0; i < codes.size(); ++i) env.insert_or_assign(st->all[i], st->cache(codes[i]));
        bool ok = holds_qf(st->p.matrix, *st->rho.structure, env);
        std::vector<T> out;
        if (ok) {
          for (std::size_t i = 0; i < st->r; ++i) out.push_back(st->cache(codes[i]));
        }
        if (!st->tuples.advance()) st->done = true;
        if (ok && st->seen.insert(out).second) return StepResult<std::vector<T>>::emit(std::move(out));
        return StepResult<std::vector<T>>::idle();
      },
      fuel);
}

}  // namespace dprm::pe
