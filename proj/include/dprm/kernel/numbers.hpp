#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dprm {

// Arbitrary precision magnitudes. Nat and Int share a representation; Nat
// values are non-negative by convention and checked where it matters.
using Nat = mpz_class;
using Int = mpz_class;

// Always canonical: lowest terms, positive denominator.
using Rational = mpq_class;

// Raised when an input violates an operation's structural precondition
// (arity mismatch, malformed expression, bad term list). Never used for
// budget or fuel exhaustion, which are ordinary outcomes.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Rational make_rational(const Int& num, const Int& den);

// Accepts "a", "-a", "a/b".
Rational parse_rational(std::string_view text);
Int parse_int(std::string_view text);

std::string to_string(const Int& value);
std::string to_string(const Rational& value);

// Checked narrowing; throws std::overflow_error.
std::uint64_t to_u64(const Nat& value);
Nat from_u64(std::uint64_t value);

}  // namespace dprm
