#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "dprm/kernel/enumerator.hpp"
#include "dprm/kernel/numbers.hpp"

namespace dprm::ff {

// Deterministic automaton over base-m digits, read least significant digit
// first. The number 0 is the empty digit string.
class DigitAutomaton {
 public:
  DigitAutomaton(std::uint32_t base, std::vector<std::vector<std::size_t>> delta, std::size_t initial,
                 std::set<std::size_t> accepting, std::string name = {});

  // Residues: accepts n iff k | n.
  static DigitAutomaton multiples_of(std::uint32_t k, std::uint32_t base);
  // Accepts base^i for i >= 0, i.e. digit strings 0...01.
  static DigitAutomaton powers_of_base(std::uint32_t base);

  std::uint32_t base() const { return base_; }
  std::size_t states() const { return delta_.size(); }
  const std::string& name() const { return name_; }
  std::size_t run(const std::vector<std::uint32_t>& digits) const;
  bool accepts(const Nat& n) const;
  // Acceptance is unchanged by appending high-order zero digits iff every
  // reachable state agrees with its 0-successor.
  bool zero_padding_invariant() const;

  // Accepted numbers in increasing order; one fuel unit per tested number.
  Enumerator<Nat> members(std::uint64_t fuel) const;

 private:
  std::uint32_t base_;
  std::vector<std::vector<std::size_t>> delta_;
  std::size_t initial_;
  std::set<std::size_t> accepting_;
  std::string name_;
};

std::vector<std::uint32_t> digits_lsb_first(const Nat& n, std::uint32_t base);

// #{n <= x : M accepts n}, by running every n.
Nat counting(const DigitAutomaton& m, const Nat& x);
// #{a in members : a <= x}.
Nat counting(const std::vector<Nat>& members, const Nat& x);

}  // namespace dprm::ff
