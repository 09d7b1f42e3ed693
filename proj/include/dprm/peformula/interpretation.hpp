#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dprm/kernel/enumerator.hpp"
#include "dprm/kernel/pairing.hpp"
#include "dprm/peformula/formula.hpp"
#include "dprm/presentations/presentation.hpp"

namespace dprm::pe {

// A formula together with the order of its free variables.
struct FormulaDef {
  Formula formula;
  std::vector<std::string> vars;
};

// Declarative half of an interpretation of rank r. Variable conventions for
// the symbol formulas, with each target element written as r source
// variables: a constant takes r variables, a k-ary relation (including "=")
// takes k*r, and a k-ary function takes (k+1)*r, arguments first and the
// result last. No domain formula means the domain is everything.
struct InterpretationFormulas {
  std::size_t rank = 1;
  std::optional<FormulaDef> domain;
  std::map<std::string, FormulaDef> symbols;
};

// theta : S^r -> T, partially defined. Either half may be missing: formula-only
// interpretations can be composed and pulled back through but not executed;
// map-only interpretations can be executed but have no formulas.
template <class S, class T>
struct Interpretation {
  using Map = std::function<std::optional<T>(std::span<const S>)>;
  using source_type = S;
  using target_type = T;

  std::string name;
  std::size_t rank = 1;
  pres::StructurePtr<S> source;
  pres::StructurePtr<T> target;
  std::optional<InterpretationFormulas> formulas;
  Map map;

  bool executable() const { return static_cast<bool>(map); }
  std::optional<T> operator()(std::span<const S> xs) const {
    if (!map) throw StructuralError("interpretation '" + name + "' has no executable map");
    if (xs.size() != rank) throw StructuralError("interpretation '" + name + "': wrong tuple size");
    return map(xs);
  }
};

// Instantiates def with the given variable names (capture avoiding).
Formula instantiate(const FormulaDef& def, const std::vector<std::string>& names);

// Pulls a target formula back along the declarative interpretation: the
// result has the free variables of def expanded into blocks of r source
// variables (in def.vars order) and includes domain conditions for every
// target element the formula mentions.
FormulaDef pullback(const FormulaDef& def, const InterpretationFormulas& theta);

// Formulas of theta2 o theta1^(rank theta2): rank r1*r2, domain
// theta1^*(dom theta2) (plus the block domains of theta1), symbols
// theta1^*(theta2^*(s)).
InterpretationFormulas compose_formulas(const InterpretationFormulas& theta1,
                                        const InterpretationFormulas& theta2);

template <class S, class T, class U>
Interpretation<S, U> compose_interpretations(const Interpretation<S, T>& theta1,
                                             const Interpretation<T, U>& theta2) {
  Interpretation<S, U> z;
  z.name = theta2.name + "." + theta1.name;
  z.rank = theta1.rank * theta2.rank;
  z.source = theta1.source;
  z.target = theta2.target;
  if (theta1.formulas && theta2.formulas) z.formulas = compose_formulas(*theta1.formulas, *theta2.formulas);
  if (theta1.map && theta2.map) {
    std::size_t r1 = theta1.rank, r2 = theta2.rank;
    auto m1 = theta1.map;
    auto m2 = theta2.map;
    z.map = [r1, r2, m1, m2](std::span<const S> xs) -> std::optional<U> {
      std::vector<T> mid;
      mid.reserve(r2);
      for (std::size_t b = 0; b < r2; ++b) {
        auto v = m1(xs.subspan(b * r1, r1));
        if (!v) return std::nullopt;
        mid.push_back(std::move(*v));
      }
      return m2(std::span<const T>(mid));
    };
  }
  return z;
}

template <class S>
std::vector<S> decode_block(const pres::Presentation<S>& rho, pres::Code k, std::size_t r) {
  std::vector<S> out;
  out.reserve(r);
  for (auto c : tuple_decode_u64(k, r)) out.push_back(rho.decode(c));
  return out;
}

// Gamma(theta) = {(theta(x), x)}: source tuples are scanned in tuple-code
// order through rho; tuples outside the domain are skipped. Each distinct
// source tuple is emitted once. One fuel unit per scanned code.
template <class S, class T>
Enumerator<std::pair<T, std::vector<S>>> graph_prefix(const Interpretation<S, T>& theta,
                                                      const pres::Presentation<S>& rho, std::uint64_t fuel) {
  if (!theta.executable()) throw StructuralError("graph_prefix needs an executable interpretation");
  using Item = std::pair<T, std::vector<S>>;
  auto seen = std::make_shared<std::set<std::vector<S>>>();
  auto k = std::make_shared<pres::Code>(0);
  return Enumerator<Item>(
      [theta, rho, seen, k]() {
        std::vector<S> xs = decode_block(rho, (*k)++, theta.rank);
        auto v = theta(std::span<const S>(xs));
        if (!v || !seen->insert(xs).second) return StepResult<Item>::idle();
        return StepResult<Item>::emit(Item{std::move(*v), std::move(xs)});
      },
      fuel);
}

// K(theta, theta') = {(u, v) : theta(u) = theta'(v)}, scanning code pairs in
// Cantor order. One fuel unit per pair.
template <class S, class S2, class T>
Enumerator<std::pair<std::vector<S>, std::vector<S2>>> homotopy_prefix(
    const Interpretation<S, T>& theta, const pres::Presentation<S>& rho, const Interpretation<S2, T>& theta2,
    const pres::Presentation<S2>& rho2, std::uint64_t fuel) {
  if (!theta.executable() || !theta2.executable()) {
    throw StructuralError("homotopy_prefix needs executable interpretations");
  }
  using Item = std::pair<std::vector<S>, std::vector<S2>>;
  auto seen = std::make_shared<std::set<Item>>();
  auto k = std::make_shared<pres::Code>(0);
  return Enumerator<Item>(
      [theta, rho, theta2, rho2, seen, k]() {
        auto [i, j] = cantor_unpair_u64((*k)++);
        std::vector<S> u = decode_block(rho, i, theta.rank);
        auto a = theta(std::span<const S>(u));
        if (!a) return StepResult<Item>::idle();
        std::vector<S2> v = decode_block(rho2, j, theta2.rank);
        auto b = theta2(std::span<const S2>(v));
        if (!b || !(*a == *b)) return StepResult<Item>::idle();
        Item item{std::move(u), std::move(v)};
        if (!seen->insert(item).second) return StepResult<Item>::idle();
        return StepResult<Item>::emit(std::move(item));
      },
      fuel);
}

// Identity interpretation of a structure in itself, with symbol formulas
// generated from the signature.
template <class T>
Interpretation<T, T> identity_interpretation(pres::StructurePtr<T> s);
InterpretationFormulas identity_formulas(const pres::Signature& sig);

template <class T>
Interpretation<T, T> identity_interpretation(pres::StructurePtr<T> s) {
  Interpretation<T, T> id;
  id.name = "id";
  id.rank = 1;
  id.source = s;
  id.target = s;
  id.formulas = identity_formulas(s->signature);
  id.map = [](std::span<const T> xs) -> std::optional<T> { return xs[0]; };
  return id;
}

}  // namespace dprm::pe
