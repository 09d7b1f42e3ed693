#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dprm/recfun/expr.hpp"

namespace dprm::recfun::lib {

Expr add();       // (y, x) -> y + x
Expr mul();       // (y, x) -> y * x
Expr pred();      // x -> max(x - 1, 0)
Expr monus();     // (x, y) -> max(x - y, 0)
Expr absdiff();   // (x, y) -> |x - y|
Expr sg();        // x -> 0 if x = 0 else 1
Expr nsg();       // x -> 1 if x = 0 else 0
Expr dbl();       // x -> 2x
Expr square();    // x -> x * x
Expr constant(unsigned long value, std::size_t arity);

// mu y [2y = x]; halts exactly on even x.
Expr half();
// mu y [y*y = x]; halts exactly on perfect squares.
Expr exact_sqrt();
// mu y [y + x_1 = x_0]; halts exactly when x_0 >= x_1.
Expr partial_sub();
// mu y [2y = 4], a 0-ary program with value 2.
Expr double_equals_four();
// mu y [y + 1 = 0]; body never returns 0, so nowhere defined.
Expr never_zero(std::size_t arity);

// Named programs usable as bare identifiers in the s-expression syntax.
std::optional<Expr> lookup(const std::string& name);
std::vector<std::string> names();

struct CorpusEntry {
  std::string name;
  Expr program;
};

// Twenty fixed unary/binary programs, total and partial, used by the
// engine agreement checks.
std::vector<CorpusEntry> corpus();

}  // namespace dprm::recfun::lib
