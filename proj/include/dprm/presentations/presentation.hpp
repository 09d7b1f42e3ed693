#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dprm/presentations/structure.hpp"

namespace dprm::pres {

using Code = std::uint64_t;

template <class W>
struct Yes {
  W witness;
};

struct Unknown {
  std::uint64_t fuel_used;
};

template <class W>
using SemiDecision = std::variant<Yes<W>, Unknown>;

template <class W>
bool is_yes(const SemiDecision<W>& d) {
  return std::holds_alternative<Yes<W>>(d);
}

template <class W>
const W& witness(const SemiDecision<W>& d) {
  return std::get<Yes<W>>(d).witness;
}

// A surjection N -> M realised by a total decoder onto canonical forms.
// find_code is the surjectivity evidence: a fuel-bounded inverse search.
// Equality of canonical forms decides E_rho whenever decidable_equality is
// set; every built-in has it.
template <class T>
struct Presentation {
  std::string name;
  StructurePtr<T> structure;
  std::function<T(Code)> decode;
  std::function<std::optional<Code>(const T&, std::uint64_t fuel)> find_code;
  bool decidable_equality = true;
  bool bijective = false;
};

// Memoised decoder for dense scans over consecutive codes. References stay
// valid as the cache grows.
template <class T>
class DecodeCache {
 public:
  explicit DecodeCache(std::function<T(Code)> decode) : decode_(std::move(decode)) {}

  const T& operator()(Code n) {
    while (values_.size() <= n) values_.push_back(decode_(values_.size()));
    return values_[n];
  }

  std::size_t size() const { return values_.size(); }

 private:
  std::function<T(Code)> decode_;
  std::deque<T> values_;
};

// Linear inverse search: the least n < fuel with decode(n) = value.
template <class T>
std::optional<Code> scan_for_code(const std::function<T(Code)>& decode, const T& value,
                                  std::uint64_t fuel) {
  for (Code n = 0; n < fuel; ++n) {
    if (decode(n) == value) return n;
  }
  return std::nullopt;
}

}  // namespace dprm::pres
