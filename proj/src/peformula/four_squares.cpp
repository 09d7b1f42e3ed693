#include "dprm/peformula/four_squares.hpp"

#include <algorithm>

namespace dprm::pe {

namespace {

Nat isqrt(const Nat& n) {
  Nat r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

}  // namespace

std::optional<std::array<Nat, 4>> four_squares(const Int& n) {
  if (n < 0) return std::nullopt;
  // a <= b <= c <= d forces 4a^2 <= n, 3b^2 <= n - a^2, 2c^2 <= n - a^2 - b^2.
  for (Nat a = 0; 4 * a * a <= n; ++a) {
    Nat ra = n - a * a;
    for (Nat b = a; 3 * b * b <= ra; ++b) {
      Nat rb = ra - b * b;
      for (Nat c = b; 2 * c * c <= rb; ++c) {
        Nat rc = rb - c * c;
        Nat d = isqrt(rc);
        if (d * d == rc && d >= c) return std::array<Nat, 4>{a, b, c, d};
      }
    }
  }
  return std::nullopt;
}

std::optional<std::array<Nat, 4>> four_squares_brute(const Int& n) {
  if (n < 0) return std::nullopt;
  Nat s = isqrt(n);
  std::optional<std::array<Nat, 4>> best;
  for (Nat a = 0; a <= s; ++a)
    for (Nat b = 0; b <= s; ++b)
      for (Nat c = 0; c <= s; ++c)
        for (Nat d = 0; d <= s; ++d) {
          if (a * a + b * b + c * c + d * d != n) continue;
          std::array<Nat, 4> q{a, b, c, d};
          std::sort(q.begin(), q.end());
          if (!best || q < *best) best = q;
        }
  return best;
}

}  // namespace dprm::pe
