#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dprm/ffdio/fp_poly.hpp"
#include "dprm/ffdio/fp_ratfun.hpp"
#include "dprm/kernel/enumerator.hpp"
#include "dprm/kernel/numbers.hpp"

namespace dprm::ff {

// Truncated Laurent series sum_{i=v}^{N-1} c_i t^i + O(t^N) over F_p.
class PowerSeries {
 public:
  PowerSeries(std::uint32_t p, std::int64_t precision, std::int64_t offset = 0);
  static PowerSeries from_poly(const FpPoly& f, std::int64_t precision);
  // Expansion at t = 0; throws std::domain_error if den(f) vanishes at 0
  // after removing the power of t.
  static PowerSeries from_ratfun(const FpRatFun& f, std::int64_t precision);

  std::uint32_t prime() const { return p_; }
  std::int64_t precision() const { return n_; }
  std::int64_t offset() const { return v_; }
  std::uint32_t coeff(std::int64_t i) const;
  void set_coeff(std::int64_t i, std::uint32_t c);
  // Lowest exponent with nonzero coefficient, or precision() if there is none.
  std::int64_t ord() const;
  bool is_zero_to_precision() const { return ord() >= n_; }

  PowerSeries operator+(const PowerSeries& o) const;
  PowerSeries operator-(const PowerSeries& o) const;
  PowerSeries operator-() const;
  PowerSeries operator*(const PowerSeries& o) const;
  PowerSeries pow(const Nat& e) const;
  PowerSeries frobenius() const;
  PowerSeries truncated(std::int64_t precision) const;

  // Sparse "exponent:coefficient" pairs followed by the precision, e.g.
  // "0:1 2:2 + O(t^8)".
  std::string to_string() const;
  // Coefficientwise equality on the overlap of the two precisions.
  bool agrees_with(const PowerSeries& o) const;

 private:
  std::uint32_t p_;
  std::int64_t n_;
  std::int64_t v_;
  std::vector<std::uint32_t> c_;  // c_[i] is the coefficient of t^(v_ + i)
};

// Series with coefficient 1 at each member exponent below N. The members
// must arrive in increasing order; the enumerator is consumed until a member
// >= N appears or it finishes. Running out of fuel first is an error naming
// the first exponent whose membership is unknown.
PowerSeries genseries(Enumerator<Nat>& members, std::uint32_t p, std::int64_t n);
PowerSeries genseries(const std::vector<Nat>& members, std::uint32_t p, std::int64_t n);

// P(T) = sum_k coeffs[k](t) T^k. Returns ord of P(f), capped at the
// precision of f; a result >= precision means the relation holds to that
// precision.
std::int64_t verify_algebraic(const PowerSeries& f, const std::vector<FpPoly>& coeffs);

}  // namespace dprm::ff
