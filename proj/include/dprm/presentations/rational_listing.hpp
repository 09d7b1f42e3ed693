#pragma once

#include <vector>

#include "dprm/kernel/numbers.hpp"

namespace dprm::pres {

// q(1) = 1; q(2m) = q(m) + 1; q(2m+1) = 1 / q(2m). A bijection from the
// positive integers onto the positive rationals.
Rational q_pos(const Nat& n);

// tau(0) = 0, tau(1) = 1, tau(2) = -1, and for n >= 3
//   n = 3 mod 4: tau((n-1)/2) + 1
//   n = 0 mod 4: tau(n/2) - 1
//   n = 1, 2 mod 4: 1 / tau(n-2)
Rational tau(const Nat& n);

// Continued fraction [a_0; a_1, ..., a_d] of a positive rational in the
// form whose last term is 1 (so d >= 1).
std::vector<Nat> cf_terms(const Rational& r);

// n = 2^{a_0}(2^{a_1}(...(2^{a_{d-1}} + 1)...) + 1). Requires d >= 1,
// a_0 >= 0, a_j >= 1 for j >= 1 and a_d = 1; throws std::invalid_argument
// otherwise. Inverse of q_pos on cf_terms.
Nat cf_encode(const std::vector<Nat>& terms);

// Evaluates [a_0; a_1, ..., a_d] directly.
Rational cf_value(const std::vector<Nat>& terms);

Nat q_pos_inverse(const Rational& r);
Nat tau_inverse(const Rational& r);

// (-1)^n ceil(n/2): 0, -1, 1, -2, 2, ...
Int zigzag(const Nat& n);
Nat zigzag_inverse(const Int& v);

}  // namespace dprm::pres
