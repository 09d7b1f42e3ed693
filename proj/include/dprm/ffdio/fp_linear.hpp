#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace dprm::ff {

using FpVector = std::vector<std::uint32_t>;

// Dense matrix over F_p, row-major.
struct FpMatrix {
  std::uint32_t p;
  std::size_t rows;
  std::size_t cols;
  std::vector<std::uint32_t> a;

  FpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols) : p(p), rows(rows), cols(cols), a(rows * cols, 0) {}
  std::uint32_t& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  std::uint32_t at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

// Solution set of M x = b: a particular solution plus a kernel basis.
struct AffineSolution {
  FpVector particular;
  std::vector<FpVector> kernel;
};

// Gauss-Jordan elimination. nullopt when the system is inconsistent.
std::optional<AffineSolution> solve_mod_p(FpMatrix m, FpVector b);

// Every vector particular + sum c_i kernel_i, in lexicographic order of the
// coefficient tuple (c_1, ..., c_k). Throws when p^k exceeds `limit`.
std::vector<FpVector> all_solutions(const AffineSolution& s, std::uint32_t p, std::size_t limit = 1u << 20);

}  // namespace dprm::ff
