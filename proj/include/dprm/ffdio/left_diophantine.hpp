#pragma once

#include <cstdint>

#include "dprm/ffdio/qpoly.hpp"
#include "dprm/kernel/enumerator.hpp"

namespace dprm::ff {

// Default fuel for the sqrt(2) experiment: tau(0..4095) holds 41/29.
inline constexpr std::uint64_t kLeftDioDefaultFuel = 4096;

// X = {u in Q : p(u) > 0 and u < q2}, whose supremum is alpha, the largest
// root of p below q2. Construction checks the sign convention (p(q2) < 0,
// p > 0 just left of alpha, alpha a simple root) and throws
// std::domain_error when it fails.
class LeftDiophantine {
 public:
  LeftDiophantine(QPoly p, Rational q2);

  const AlgebraicReal& alpha() const { return alpha_; }
  bool in_x(const Rational& u) const;
  // Elements of X in tau order; one fuel unit per tau index.
  Enumerator<Rational> enumerate(std::uint64_t fuel) const;

 private:
  QPoly p_;
  Rational q2_;
  AlgebraicReal alpha_;
};

// q in L(alpha), i.e. q < alpha, decided exactly.
bool l_alpha_member(const Rational& q, const AlgebraicReal& alpha);

}  // namespace dprm::ff
