#include "dprm/ffdio/fp_linear.hpp"

#include <stdexcept>

#include "dprm/ffdio/fp_poly.hpp"

namespace dprm::ff {

std::optional<AffineSolution> solve_mod_p(FpMatrix m, FpVector b) {
  const std::uint32_t p = m.p;
  if (b.size() != m.rows) throw std::invalid_argument("solve_mod_p: right-hand side has the wrong length");
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t piv = r;
    while (piv < m.rows && m.at(piv, c) == 0) ++piv;
    if (piv == m.rows) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
      std::swap(b[piv], b[r]);
    }
    std::uint32_t inv = inv_mod(m.at(r, c), p);
    for (std::size_t j = 0; j < m.cols; ++j) m.at(r, j) = static_cast<std::uint32_t>(std::uint64_t(m.at(r, j)) * inv % p);
    b[r] = static_cast<std::uint32_t>(std::uint64_t(b[r]) * inv % p);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      std::uint64_t f = m.at(i, c);
      for (std::size_t j = 0; j < m.cols; ++j) {
        m.at(i, j) = static_cast<std::uint32_t>((m.at(i, j) + (p - f) * m.at(r, j)) % p);
      }
      b[i] = static_cast<std::uint32_t>((b[i] + (p - f) * b[r]) % p);
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < m.rows; ++i) {
    if (b[i] != 0) return std::nullopt;
  }
  AffineSolution s;
  s.particular.assign(m.cols, 0);
  for (std::size_t i = 0; i < r; ++i) s.particular[pivot_col[i]] = b[i];
  std::vector<bool> is_pivot(m.cols, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  for (std::size_t f = 0; f < m.cols; ++f) {
    if (is_pivot[f]) continue;
    FpVector v(m.cols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < r; ++i) v[pivot_col[i]] = (p - m.at(i, f)) % p;
    s.kernel.push_back(std::move(v));
  }
  return s;
}

std::vector<FpVector> all_solutions(const AffineSolution& s, std::uint32_t p, std::size_t limit) {
  std::size_t count = 1;
  for (std::size_t i = 0; i < s.kernel.size(); ++i) {
    if (count > limit / p) throw std::length_error("all_solutions: solution space too large");
    count *= p;
  }
  std::vector<FpVector> out;
  out.reserve(count);
  std::vector<std::uint32_t> c(s.kernel.size(), 0);
  for (std::size_t n = 0; n < count; ++n) {
    FpVector v = s.particular;
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k] == 0) continue;
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = static_cast<std::uint32_t>((v[j] + std::uint64_t(c[k]) * s.kernel[k][j]) % p);
    }
    out.push_back(std::move(v));
    for (std::size_t k = c.size(); k-- > 0;) {
      if (++c[k] < p) break;
      c[k] = 0;
    }
  }
  return out;
}

}  // namespace dprm::ff
