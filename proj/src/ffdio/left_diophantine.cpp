#include "dprm/ffdio/left_diophantine.hpp"

#include <memory>
#include <stdexcept>

#include "dprm/presentations/rational_listing.hpp"

namespace dprm::ff {

LeftDiophantine::LeftDiophantine(QPoly p, Rational q2) : p_(std::move(p)), q2_(std::move(q2)) {
  if (p_.degree() < 1) throw std::domain_error("leftdio: polynomial must be nonconstant");
  if (p_.sign_at(q2_) >= 0) throw std::domain_error("leftdio: sign convention violated, need p(q2) < 0");
  auto chain = sturm_chain(p_);
  Rational lo = -cauchy_bound(p_) - 1;
  if (count_roots(chain, lo, q2_) == 0) throw std::domain_error("leftdio: no real root below q2");
  // Shrink (lo, q2] until it holds exactly the largest root below q2.
  Rational hi = q2_;
  while (count_roots(chain, lo, hi) > 1) {
    Rational mid = (lo + hi) / 2;
    if (count_roots(chain, mid, hi) >= 1) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  alpha_ = AlgebraicReal{p_, lo, hi};
  QPoly g = gcd(p_, p_.derivative());
  if (g.degree() > 0 && count_roots(sturm_chain(g), alpha_.lo, alpha_.hi) > 0) {
    throw std::domain_error("leftdio: alpha is a multiple root");
  }
  while (p_.sign_at(alpha_.lo) == 0) alpha_ = refine(alpha_, 1);
  if (p_.sign_at(alpha_.lo) <= 0) {
    throw std::domain_error("leftdio: sign convention violated, need p > 0 to the left of alpha");
  }
}

bool LeftDiophantine::in_x(const Rational& u) const { return u < q2_ && p_.sign_at(u) > 0; }

Enumerator<Rational> LeftDiophantine::enumerate(std::uint64_t fuel) const {
  auto self = std::make_shared<LeftDiophantine>(*this);
  auto n = std::make_shared<Nat>(0);
  return Enumerator<Rational>(
      [self, n]() {
        Rational u = pres::tau((*n)++);
        if (self->in_x(u)) return StepResult<Rational>::emit(std::move(u));
        return StepResult<Rational>::idle();
      },
      fuel);
}

bool l_alpha_member(const Rational& q, const AlgebraicReal& alpha) { return less_than(q, alpha); }

}  // namespace dprm::ff
