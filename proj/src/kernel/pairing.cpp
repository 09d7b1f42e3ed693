#include "dprm/kernel/pairing.hpp"

#include <cmath>
#include <stdexcept>

namespace dprm {

Nat cantor_pair(const Nat& a, const Nat& b) {
  Nat s = a + b;
  Nat tri = s * (s + 1) / 2;
  return tri + b;
}

std::pair<Nat, Nat> cantor_unpair(const Nat& n) {
  // w = floor((sqrt(8n+1) - 1) / 2), exact via integer square root.
  Nat disc = 8 * n + 1;
  Nat root;
  mpz_sqrt(root.get_mpz_t(), disc.get_mpz_t());
  Nat w = (root - 1) / 2;
  Nat tri = w * (w + 1) / 2;
  Nat b = n - tri;
  Nat a = w - b;
  return {a, b};
}

std::uint64_t cantor_pair_u64(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 s = static_cast<unsigned __int128>(a) + b;
  unsigned __int128 v = s * (s + 1) / 2 + b;
  if (v > UINT64_MAX) throw std::overflow_error("cantor_pair_u64 overflow");
  return static_cast<std::uint64_t>(v);
}

std::pair<std::uint64_t, std::uint64_t> cantor_unpair_u64(std::uint64_t n) {
  auto tri = [](unsigned __int128 w) { return w * (w + 1) / 2; };
  // Floating estimate, then correct by at most a few steps.
  unsigned __int128 w = static_cast<unsigned __int128>(
      (std::sqrt(8.0L * static_cast<long double>(n) + 1.0L) - 1.0L) / 2.0L);
  while (w > 0 && tri(w) > n) --w;
  while (tri(w + 1) <= n) ++w;
  std::uint64_t b = static_cast<std::uint64_t>(n - tri(w));
  std::uint64_t a = static_cast<std::uint64_t>(w) - b;
  return {a, b};
}

Nat tuple_encode(const std::vector<Nat>& xs) {
  if (xs.empty()) throw StructuralError("tuple_encode needs at least one component");
  Nat acc = xs.back();
  for (std::size_t i = xs.size() - 1; i-- > 0;) acc = cantor_pair(xs[i], acc);
  return acc;
}

std::vector<Nat> tuple_decode(const Nat& n, std::size_t arity) {
  if (arity == 0) throw StructuralError("tuple_decode needs arity >= 1");
  std::vector<Nat> out;
  out.reserve(arity);
  Nat rest = n;
  for (std::size_t i = 0; i + 1 < arity; ++i) {
    auto [head, tail] = cantor_unpair(rest);
    out.push_back(head);
    rest = tail;
  }
  out.push_back(rest);
  return out;
}

std::uint64_t tuple_encode_u64(const std::vector<std::uint64_t>& xs) {
  if (xs.empty()) throw StructuralError("tuple_encode needs at least one component");
  std::uint64_t acc = xs.back();
  for (std::size_t i = xs.size() - 1; i-- > 0;) acc = cantor_pair_u64(xs[i], acc);
  return acc;
}

std::vector<std::uint64_t> tuple_decode_u64(std::uint64_t n, std::size_t arity) {
  if (arity == 0) throw StructuralError("tuple_decode needs arity >= 1");
  std::vector<std::uint64_t> out;
  out.reserve(arity);
  std::uint64_t rest = n;
  for (std::size_t i = 0; i + 1 < arity; ++i) {
    auto [head, tail] = cantor_unpair_u64(rest);
    out.push_back(head);
    rest = tail;
  }
  out.push_back(rest);
  return out;
}

}  // namespace dprm
