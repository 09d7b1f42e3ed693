#pragma once

#include <array>
#include <optional>

#include "dprm/kernel/numbers.hpp"

namespace dprm::pe {

// Lexicographically least (a, b, c, d) with a <= b <= c <= d and
// a^2 + b^2 + c^2 + d^2 = n. Negative n has none.
std::optional<std::array<Nat, 4>> four_squares(const Int& n);

// Reference search over all quadruples in [0, isqrt(n)]^4 (no ordering
// constraint), returning the sorted lexicographically least one.
std::optional<std::array<Nat, 4>> four_squares_brute(const Int& n);

}  // namespace dprm::pe
