#pragma once

#include <optional>
#include <vector>

#include "dprm/ffdio/fp_ratfun.hpp"

namespace dprm::ff {

// A point of x - t = y^p - y, x^-1 - t^-1 = z^p - z.
struct PheidasPoint {
  FpRatFun x, y, z;
  friend bool operator==(const PheidasPoint& a, const PheidasPoint& b) {
    return a.x == b.x && a.y == b.y && a.z == b.z;
  }
  friend bool operator<(const PheidasPoint& a, const PheidasPoint& b) {
    if (a.x != b.x) return a.x < b.x;
    if (a.y != b.y) return a.y < b.y;
    return a.z < b.z;
  }
};

bool on_pheidas_curve(const PheidasPoint& pt);

// x = t^(p^n), y = b + sum_{i<n} t^(p^i), z = c + sum_{i<n} t^(-p^i), for
// every n with all heights within the bound. Sorted.
std::vector<PheidasPoint> pheidas_family(std::uint32_t p, int degree_bound);

// Complete search for solutions with heights <= degree_bound, built on
// Artin-Schreier preimage solving. Sorted. Requires p > 2.
std::vector<PheidasPoint> pheidas_solutions(std::uint32_t p, int degree_bound);

// The x values admitting a solution within the bound, sorted.
std::vector<FpRatFun> pheidas_x_candidates(std::uint32_t p, int degree_bound);

// Least s <= s_max with y = x^(p^s).
std::optional<unsigned> frobenius_leq(const FpRatFun& x, const FpRatFun& y, unsigned s_max);

}  // namespace dprm::ff
