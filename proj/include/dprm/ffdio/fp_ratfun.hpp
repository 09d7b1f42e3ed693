#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

#include "dprm/ffdio/fp_poly.hpp"

namespace dprm::ff {

inline constexpr std::int64_t kInfiniteOrder = std::numeric_limits<std::int64_t>::max();

// Element of F_p(t) in lowest terms: monic denominator, gcd(num, den) = 1,
// and zero stored as 0/1, so equality is structural.
class FpRatFun {
 public:
  explicit FpRatFun(std::uint32_t p);
  explicit FpRatFun(FpPoly num);
  FpRatFun(FpPoly num, FpPoly den);

  static FpRatFun constant(std::uint32_t p, std::uint64_t c);
  static FpRatFun t(std::uint32_t p) { return FpRatFun(FpPoly::t(p)); }
  // t^k for any integer k.
  static FpRatFun t_power(std::uint32_t p, std::int64_t k);

  std::uint32_t prime() const { return num_.prime(); }
  const FpPoly& num() const { return num_; }
  const FpPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

  FpRatFun operator+(const FpRatFun& o) const;
  FpRatFun operator-(const FpRatFun& o) const;
  FpRatFun operator-() const;
  FpRatFun operator*(const FpRatFun& o) const;
  // Throws std::domain_error on division by zero.
  FpRatFun operator/(const FpRatFun& o) const;
  FpRatFun inverse() const;
  // Negative exponents allowed for nonzero elements.
  FpRatFun pow(const Int& e) const;
  FpRatFun frobenius() const;  // f^p

  // t-adic valuation; kInfiniteOrder for zero.
  std::int64_t t_adic_ord() const;

  // "poly p=3 [..] / poly p=3 [..]", or just the numerator when den = 1.
  std::string to_string() const;
  // "t^3", "(1 + t)/(2 + t^2)".
  std::string pretty() const;

  friend bool operator==(const FpRatFun& a, const FpRatFun& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const FpRatFun& a, const FpRatFun& b) { return !(a == b); }
  friend bool operator<(const FpRatFun& a, const FpRatFun& b) {
    if (a.den_ != b.den_) return a.den_ < b.den_;
    return a.num_ < b.num_;
  }

 private:
  void normalize();
  FpPoly num_;
  FpPoly den_;
};

// "num / den" where each side is a polynomial in parse_poly syntax.
FpRatFun parse_ratfun(std::string_view text, std::uint32_t default_p = 0);

}  // namespace dprm::ff
