#pragma once

#include <cstdint>
#include <limits>

namespace dprm {

inline constexpr std::uint64_t kUnbounded = std::numeric_limits<std::uint64_t>::max();

// Step allowance for one evaluation. Running out is an ordinary outcome.
class Budget {
 public:
  explicit Budget(std::uint64_t steps) : limit_(steps) {}

  // Consumes n steps if available; otherwise consumes nothing and returns false.
  bool spend(std::uint64_t n = 1) {
    if (limit_ - used_ < n) return false;
    used_ += n;
    return true;
  }

  std::uint64_t used() const { return used_; }
  std::uint64_t limit() const { return limit_; }
  std::uint64_t remaining() const { return limit_ - used_; }
  bool exhausted() const { return used_ == limit_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

}  // namespace dprm
