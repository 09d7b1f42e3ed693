#pragma once

#include <vector>

#include "dprm/ffdio/fp_ratfun.hpp"

namespace dprm::ff {

// max(deg num, deg den); the zero function has height 0.
int height(const FpRatFun& f);

// All f with f^p - f = g and height(f) <= degree_bound, sorted. Nonempty
// results are cosets of F_p; this is asserted.
std::vector<FpRatFun> artin_schreier_preimage(const FpRatFun& g, int degree_bound);

}  // namespace dprm::ff
