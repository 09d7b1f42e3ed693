#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dprm/kernel/numbers.hpp"

namespace dprm::ff {

// Polynomial over Q, coefficients low to high with no trailing zeros.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rational> coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational lead() const { return c_.empty() ? Rational(0) : c_.back(); }

  Rational operator()(const Rational& x) const;
  int sign_at(const Rational& x) const;
  QPoly derivative() const;
  QPoly operator-() const;
  std::pair<QPoly, QPoly> divmod(const QPoly& d) const;
  std::string to_string() const;
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<Rational> c_;
};

QPoly gcd(QPoly a, QPoly b);
// Comma-separated coefficients, low degree first: "2,0,-1" is 2 - u^2.
QPoly parse_qpoly(std::string_view text);

// Sturm chain of the square-free part.
std::vector<QPoly> sturm_chain(const QPoly& f);
// Number of distinct real roots in (lo, hi].
std::size_t count_roots(const std::vector<QPoly>& chain, const Rational& lo, const Rational& hi);
// Every real root lies in [-bound, bound].
Rational cauchy_bound(const QPoly& f);

// A real root of `poly`, the only one in (lo, hi].
struct AlgebraicReal {
  QPoly poly;
  Rational lo, hi;
};

// Exact q < alpha.
bool less_than(const Rational& q, const AlgebraicReal& alpha);

// Halves the isolating interval `steps` times.
AlgebraicReal refine(AlgebraicReal alpha, unsigned steps);

}  // namespace dprm::ff
