#pragma once

#include <string>
#include <vector>

#include "dprm/peformula/interpretation.hpp"

namespace dprm::pe {

// Z as differences of naturals: (a, b) -> a - b.
Interpretation<Nat, Int> nat_to_int();
// N inside Z as sums of four squares; the map is the identity on x >= 0.
Interpretation<Int, Nat> int_to_nat();
// Q as fractions of integers: (a, b) -> a / b for b != 0, with b != 0
// expressed as b*b = 1 + c^2 + d^2 + e^2 + f^2.
Interpretation<Int, Rational> int_to_rat();
// The inclusion of Z in Q restricted to integral rationals. Executable only:
// it carries no formulas.
Interpretation<Rational, Int> rat_to_int_inclusion();

// Registry names: "nz", "zn", "kappa-zq", "z-in-q".
std::vector<std::string> interpretation_names();

}  // namespace dprm::pe
