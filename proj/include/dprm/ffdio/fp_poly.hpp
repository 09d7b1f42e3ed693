#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dprm/kernel/numbers.hpp"

namespace dprm::ff {

bool is_small_prime(std::uint32_t p);
std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p);
std::uint32_t pow_mod(std::uint32_t a, std::uint64_t e, std::uint32_t p);

// Polynomial over F_p, coefficients stored low to high with no trailing
// zeros. The zero polynomial has degree -1.
class FpPoly {
 public:
  explicit FpPoly(std::uint32_t p);
  FpPoly(std::uint32_t p, std::vector<std::uint32_t> coeffs);

  static FpPoly constant(std::uint32_t p, std::uint64_t c);
  static FpPoly monomial(std::uint32_t p, std::uint64_t c, std::size_t degree);
  static FpPoly t(std::uint32_t p) { return monomial(p, 1, 1); }

  std::uint32_t prime() const { return p_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  std::uint32_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  std::uint32_t lead() const { return c_.empty() ? 0 : c_.back(); }
  const std::vector<std::uint32_t>& coeffs() const { return c_; }

  // Lowest exponent with nonzero coefficient; -1 for zero.
  int ord_t() const;

  FpPoly operator+(const FpPoly& o) const;
  FpPoly operator-(const FpPoly& o) const;
  FpPoly operator-() const;
  FpPoly operator*(const FpPoly& o) const;
  FpPoly scaled(std::uint32_t c) const;
  FpPoly shifted(std::size_t k) const;  // times t^k
  FpPoly monic() const;
  FpPoly pow(const Nat& e) const;
  FpPoly pow(std::uint64_t e) const;

  // Quotient and remainder; throws std::domain_error on a zero divisor.
  std::pair<FpPoly, FpPoly> divmod(const FpPoly& d) const;

  // f(t)^p = f(t^p) in characteristic p.
  FpPoly frobenius() const;
  // g with g^p = f, when every exponent of f is divisible by p.
  bool is_pth_power() const;
  FpPoly pth_root() const;

  // "poly p=3 [1,0,2]" for 1 + 2t^2.
  std::string to_string() const;
  // "1 + 2t^2".
  std::string pretty() const;

  friend bool operator==(const FpPoly& a, const FpPoly& b) { return a.p_ == b.p_ && a.c_ == b.c_; }
  friend bool operator!=(const FpPoly& a, const FpPoly& b) { return !(a == b); }
  // Degree first, then coefficients from the top down.
  friend bool operator<(const FpPoly& a, const FpPoly& b);

 private:
  void trim();
  void check_same(const FpPoly& o) const;
  std::uint32_t p_;
  std::vector<std::uint32_t> c_;
};

FpPoly gcd(FpPoly a, FpPoly b);  // monic, or zero when both are zero

// Accepts "poly p=3 [1,0,2]" or, with p supplied, a bare "[1,0,2]".
FpPoly parse_poly(std::string_view text, std::uint32_t default_p = 0);

// Index of a monic polynomial in the order 1; t + c (c = 0..p-1); t^2 + ...;
// degree-d block has p^d entries ordered by base-p value of the lower
// coefficients. monic_from_index inverts it.
Nat monic_index(const FpPoly& f);
FpPoly monic_from_index(std::uint32_t p, const Nat& index);
// Coefficients as base-p digits of n, low digit first.
FpPoly poly_from_digits(std::uint32_t p, const Nat& n);
Nat poly_to_digits(const FpPoly& f);

}  // namespace dprm::ff
