#pragma once

#include <cstdint>
#include <vector>

#include "dprm/ffdio/power_series.hpp"
#include "dprm/kernel/numbers.hpp"

namespace dprm::ff {

// Generators p^(j^j) for j = 1..j_max.
std::vector<Nat> bigA_generators(std::uint32_t p, unsigned j_max);

// All sums of distinct generators with j <= j_max (0 included), sorted.
// Distinctness of the sums is asserted.
std::vector<Nat> bigA_members(std::uint32_t p, unsigned j_max);

// Number of subset sums of a superincreasing generator list that are <= x,
// computed without listing them. Throws if the list is not superincreasing.
Nat count_subset_sums_leq(const std::vector<Nat>& generators, const Nat& x);

// N(A, p^(j^j)), via count_subset_sums_leq.
Nat bigA_counting(std::uint32_t p, unsigned j);

// Whether every base-p digit of n is 0 or 1 with ones only at exponents
// of the form j^j, j <= j_max.
bool bigA_digit_support_ok(const Nat& n, std::uint32_t p, unsigned j_max);

// n_r = sum_{j<=r} p^(j^j).
Nat bigA_partial_sum(std::uint32_t p, unsigned r);

// (1+t)^(n_r) mod t^N by square-and-multiply.
PowerSeries one_plus_t_power(std::uint32_t p, const Nat& e, std::int64_t n);

// prod_{j<=r} (1 + t^(p^(j^j))) mod t^N.
PowerSeries bigA_product(std::uint32_t p, unsigned r, std::int64_t n);

bool product_identity_check(std::uint32_t p, unsigned r, std::int64_t n);

// ord(f_A - (1+t)^(n_r)) at precision N, with f_A built from the members
// below N.
std::int64_t fA_convergence_ord(std::uint32_t p, unsigned r, std::int64_t n);

}  // namespace dprm::ff
