#include "dprm/ffdio/lacunary.hpp"

#include <algorithm>
#include <stdexcept>

namespace dprm::ff {

namespace {

Nat power(std::uint32_t p, unsigned long e) {
  Nat r;
  mpz_ui_pow_ui(r.get_mpz_t(), p, e);
  return r;
}

unsigned long self_power(unsigned j) {
  unsigned long r = 1;
  for (unsigned i = 0; i < j; ++i) r *= j;
  return r;
}

}  // namespace

std::vector<Nat> bigA_generators(std::uint32_t p, unsigned j_max) {
  if (!is_small_prime(p)) throw std::invalid_argument("bigA: p must be a small prime");
  if (j_max > 6) throw std::invalid_argument("bigA: j_max above 6 is too large to represent");
  std::vector<Nat> g;
  for (unsigned j = 1; j <= j_max; ++j) g.push_back(power(p, self_power(j)));
  return g;
}

std::vector<Nat> bigA_members(std::uint32_t p, unsigned j_max) {
  if (j_max > 20) throw std::invalid_argument("bigA_members: too many subsets");
  auto g = bigA_generators(p, j_max);
  std::vector<Nat> out;
  for (std::size_t mask = 0; mask < (std::size_t(1) << g.size()); ++mask) {
    Nat s = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (mask >> i & 1) s += g[i];
    }
    out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
    throw std::logic_error("bigA_members: two subsets share a sum");
  }
  return out;
}

Nat count_subset_sums_leq(const std::vector<Nat>& generators, const Nat& x) {
  Nat prefix = 0;
  for (const auto& g : generators) {
    if (g <= prefix) throw std::invalid_argument("count_subset_sums_leq: generators are not superincreasing");
    prefix += g;
  }
  // With g_k larger than the sum of all smaller generators: every subset
  // without g_k fits under x once g_k <= x, so
  // count(k, x) = 2^(k-1) + count(k-1, x - g_k) for g_k <= x, and
  // count(k-1, x) otherwise.
  Nat count = 0;
  Nat rest = x;
  if (rest < 0) return 0;
  for (std::size_t k = generators.size(); k-- > 0;) {
    if (generators[k] <= rest) {
      count += Nat(1) << k;
      rest -= generators[k];
    }
  }
  return count + 1;  // the subset reached at the end, possibly empty
}

Nat bigA_counting(std::uint32_t p, unsigned j) {
  return count_subset_sums_leq(bigA_generators(p, j), power(p, self_power(j)));
}

bool bigA_digit_support_ok(const Nat& n, std::uint32_t p, unsigned j_max) {
  std::vector<unsigned long> allowed;
  for (unsigned j = 1; j <= j_max; ++j) allowed.push_back(self_power(j));
  Nat m = n;
  unsigned long pos = 0;
  while (m > 0) {
    unsigned long d = mpz_fdiv_q_ui(m.get_mpz_t(), m.get_mpz_t(), p);
    if (d > 1) return false;
    if (d == 1 && std::find(allowed.begin(), allowed.end(), pos) == allowed.end()) return false;
    ++pos;
  }
  return true;
}

Nat bigA_partial_sum(std::uint32_t p, unsigned r) {
  Nat s = 0;
  for (const auto& g : bigA_generators(p, r)) s += g;
  return s;
}

PowerSeries one_plus_t_power(std::uint32_t p, const Nat& e, std::int64_t n) {
  PowerSeries base(p, n, 0);
  base.set_coeff(0, 1);
  if (n > 1) base.set_coeff(1, 1);
  return base.pow(e);
}

PowerSeries bigA_product(std::uint32_t p, unsigned r, std::int64_t n) {
  PowerSeries acc(p, n, 0);
  acc.set_coeff(0, 1);
  for (const auto& g : bigA_generators(p, r)) {
    PowerSeries factor(p, n, 0);
    factor.set_coeff(0, 1);
    if (g < n) factor.set_coeff(g.get_si(), 1);
    acc = acc * factor;
  }
  return acc;
}

bool product_identity_check(std::uint32_t p, unsigned r, std::int64_t n) {
  return one_plus_t_power(p, bigA_partial_sum(p, r), n).agrees_with(bigA_product(p, r, n));
}

std::int64_t fA_convergence_ord(std::uint32_t p, unsigned r, std::int64_t n) {
  // Generators from p^((j_max)^(j_max)) >= N on contribute nothing below N.
  unsigned j_max = 1;
  while (j_max < 6 && power(p, self_power(j_max)) < n) ++j_max;
  PowerSeries fa = genseries(bigA_members(p, j_max), p, n);
  return (fa - one_plus_t_power(p, bigA_partial_sum(p, r), n)).ord();
}

}  // namespace dprm::ff
