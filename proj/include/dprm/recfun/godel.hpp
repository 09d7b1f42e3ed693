#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dprm/kernel/enumerator.hpp"
#include "dprm/recfun/eval.hpp"
#include "dprm/recfun/expr.hpp"

namespace dprm::recfun {

// Codes, with <a, b> the Cantor pair:
//   zero(k)       <1, k>
//   succ          <2, 0>
//   proj(i, k)    <3, <i, k>>
//   compose(g,hs) <4, <#g, list(hs)>>   list([]) = 0, list(h:t) = 1 + <#h, list(t)>
//   primrec(b,s)  <5, <#b, #s>>
//   mu(g)         <6, #g>
Nat godel_encode(const Expr& f);

// Strict decoding: nullopt for codes outside the image of godel_encode.
std::optional<Expr> godel_try_decode(const Nat& n);

// Total decoding. Invalid codes map to diverging(1); the two-argument form
// also maps codes of the wrong arity to diverging(arity).
Expr godel_decode(const Nat& n);
Expr godel_decode(const Nat& n, std::size_t arity);

// Runs the program with index e on args. Decoding is charged size(decoded)
// steps up front (one step for the fallback program), then evaluation gets
// what is left, so eval_universal(encode(f), a, b + size(f)) and
// eval(f, a, b) always agree.
EvalOutcome eval_universal(const Nat& e, const std::vector<Nat>& args, Budget& budget);
EvalOutcome eval_universal(const Nat& e, const std::vector<Nat>& args, std::uint64_t steps);

// Indices x with eval_universal(x, [x], s) halting for some s, dovetailed
// over (x, s) anti-diagonals.
Enumerator<std::uint64_t> halting_prefix(std::uint64_t fuel);

}  // namespace dprm::recfun
