#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "dprm/kernel/numbers.hpp"

namespace dprm {

// Cantor pairing: (a, b) -> (a+b)(a+b+1)/2 + b.
Nat cantor_pair(const Nat& a, const Nat& b);
std::pair<Nat, Nat> cantor_unpair(const Nat& n);

// Fixed-width variants for hot loops. cantor_pair_u64 throws
// std::overflow_error when the result does not fit.
std::uint64_t cantor_pair_u64(std::uint64_t a, std::uint64_t b);
std::pair<std::uint64_t, std::uint64_t> cantor_unpair_u64(std::uint64_t n);

// Right-nested: encode([x]) = x, encode([x, rest...]) = pair(x, encode(rest)).
// The arity is not part of the code and must be supplied to decode.
Nat tuple_encode(const std::vector<Nat>& xs);
std::vector<Nat> tuple_decode(const Nat& n, std::size_t arity);

std::uint64_t tuple_encode_u64(const std::vector<std::uint64_t>& xs);
std::vector<std::uint64_t> tuple_decode_u64(std::uint64_t n, std::size_t arity);

}  // namespace dprm
