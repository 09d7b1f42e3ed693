#include "dprm/ffdio/automata.hpp"

#include <memory>
#include <stdexcept>

namespace dprm::ff {

DigitAutomaton::DigitAutomaton(std::uint32_t base, std::vector<std::vector<std::size_t>> delta, std::size_t initial,
                               std::set<std::size_t> accepting, std::string name)
    : base_(base), delta_(std::move(delta)), initial_(initial), accepting_(std::move(accepting)), name_(std::move(name)) {
  if (base_ < 2) throw std::invalid_argument("DigitAutomaton: base must be at least 2");
  if (initial_ >= delta_.size()) throw std::invalid_argument("DigitAutomaton: initial state out of range");
  for (const auto& row : delta_) {
    if (row.size() != base_) throw std::invalid_argument("DigitAutomaton: transition table is not total");
    for (auto s : row) {
      if (s >= delta_.size()) throw std::invalid_argument("DigitAutomaton: transition to unknown state");
    }
  }
  for (auto s : accepting_) {
    if (s >= delta_.size()) throw std::invalid_argument("DigitAutomaton: unknown accepting state");
  }
}

DigitAutomaton DigitAutomaton::multiples_of(std::uint32_t k, std::uint32_t base) {
  if (k == 0) throw std::invalid_argument("multiples_of: k must be positive");
  // State (r, w): r = value read so far mod k, w = base^(digits read) mod k.
  std::vector<std::vector<std::size_t>> delta(std::size_t(k) * k, std::vector<std::size_t>(base));
  for (std::uint32_t r = 0; r < k; ++r) {
    for (std::uint32_t w = 0; w < k; ++w) {
      for (std::uint32_t d = 0; d < base; ++d) {
        std::uint32_t r2 = static_cast<std::uint32_t>((r + std::uint64_t(d) * w) % k);
        std::uint32_t w2 = static_cast<std::uint32_t>(std::uint64_t(w) * base % k);
        delta[std::size_t(r) * k + w][d] = std::size_t(r2) * k + w2;
      }
    }
  }
  std::set<std::size_t> acc;
  for (std::uint32_t w = 0; w < k; ++w) acc.insert(w);
  return DigitAutomaton(base, std::move(delta), 1 % k, std::move(acc),
                        "multiples of " + std::to_string(k) + " base " + std::to_string(base));
}

DigitAutomaton DigitAutomaton::powers_of_base(std::uint32_t base) {
  // 0: only zeros so far, 1: exactly one 1 then zeros, 2: dead.
  std::vector<std::vector<std::size_t>> delta(3, std::vector<std::size_t>(base, 2));
  delta[0][0] = 0;
  delta[0][1] = 1;
  delta[1][0] = 1;
  return DigitAutomaton(base, std::move(delta), 0, {1}, "powers of " + std::to_string(base));
}

std::vector<std::uint32_t> digits_lsb_first(const Nat& n, std::uint32_t base) {
  if (n < 0) throw std::invalid_argument("digits_lsb_first: negative number");
  std::vector<std::uint32_t> out;
  Nat m = n;
  while (m > 0) {
    out.push_back(static_cast<std::uint32_t>(mpz_fdiv_q_ui(m.get_mpz_t(), m.get_mpz_t(), base)));
  }
  return out;
}

std::size_t DigitAutomaton::run(const std::vector<std::uint32_t>& digits) const {
  std::size_t s = initial_;
  for (auto d : digits) {
    if (d >= base_) throw std::invalid_argument("DigitAutomaton: digit out of range");
    s = delta_[s][d];
  }
  return s;
}

bool DigitAutomaton::accepts(const Nat& n) const { return accepting_.count(run(digits_lsb_first(n, base_))) > 0; }

bool DigitAutomaton::zero_padding_invariant() const {
  std::vector<bool> seen(delta_.size(), false);
  std::vector<std::size_t> stack{initial_};
  seen[initial_] = true;
  while (!stack.empty()) {
    std::size_t s = stack.back();
    stack.pop_back();
    if (accepting_.count(s) != accepting_.count(delta_[s][0])) return false;
    for (auto n : delta_[s]) {
      if (!seen[n]) {
        seen[n] = true;
        stack.push_back(n);
      }
    }
  }
  return true;
}

Enumerator<Nat> DigitAutomaton::members(std::uint64_t fuel) const {
  auto self = std::make_shared<DigitAutomaton>(*this);
  auto n = std::make_shared<Nat>(0);
  return Enumerator<Nat>(
      [self, n]() {
        Nat cur = (*n)++;
        if (self->accepts(cur)) return StepResult<Nat>::emit(cur);
        return StepResult<Nat>::idle();
      },
      fuel);
}

Nat counting(const DigitAutomaton& m, const Nat& x) {
  Nat c = 0;
  for (Nat n = 0; n <= x; ++n) {
    if (m.accepts(n)) ++c;
  }
  return c;
}

Nat counting(const std::vector<Nat>& members, const Nat& x) {
  Nat c = 0;
  for (const auto& a : members) {
    if (a <= x) ++c;
  }
  return c;
}

}  // namespace dprm::ff
