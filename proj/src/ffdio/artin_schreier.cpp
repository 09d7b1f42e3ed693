#include "dprm/ffdio/artin_schreier.hpp"

#include <algorithm>
#include <stdexcept>

#include "dprm/ffdio/fp_linear.hpp"

namespace dprm::ff {

int height(const FpRatFun& f) { return std::max({0, f.num().degree(), f.den().degree()}); }

namespace {

// Monic D with D^p = e, if e is a p-th power of a monic polynomial.
std::optional<FpPoly> pth_root_of_den(const FpPoly& e) {
  if (!e.is_pth_power()) return std::nullopt;
  return e.pth_root();
}

}  // namespace

std::vector<FpRatFun> artin_schreier_preimage(const FpRatFun& g, int degree_bound) {
  const std::uint32_t p = g.prime();
  // With f = N/D in lowest terms, f^p - f = (N^p - N D^(p-1)) / D^p, again in
  // lowest terms, so den(g) must be D^p. A pole of order m at infinity in f
  // becomes one of order p*m, which bounds deg N.
  auto d = pth_root_of_den(g.den());
  if (!d) return {};
  const FpPoly& D = *d;
  int dd = D.degree();
  int pole = g.num().degree() - g.den().degree();
  int max_n = dd;
  if (pole > 0) {
    if (pole % static_cast<int>(p) != 0) return {};
    max_n = dd + pole / static_cast<int>(p);
  }
  std::size_t unknowns = static_cast<std::size_t>(max_n) + 1;
  std::size_t rows = std::max<std::size_t>(static_cast<std::size_t>(p) * max_n, g.num().degree()) + 1;
  rows = std::max<std::size_t>(rows, static_cast<std::size_t>(max_n + (p - 1) * dd) + 1);
  FpMatrix m(p, rows, unknowns);
  FpPoly dp1 = D.pow(static_cast<std::uint64_t>(p - 1));
  for (std::size_t i = 0; i < unknowns; ++i) {
    FpPoly col = FpPoly::monomial(p, 1, i * p) - dp1.shifted(i);
    for (std::size_t r = 0; r < rows; ++r) m.at(r, i) = col.coeff(r);
  }
  FpVector rhs(rows);
  for (std::size_t r = 0; r < rows; ++r) rhs[r] = g.num().coeff(r);
  auto sol = solve_mod_p(std::move(m), std::move(rhs));
  if (!sol) return {};
  // The kernel of N -> N^p - N D^(p-1) is F_p * D.
  if (sol->kernel.size() != 1) throw std::logic_error("artin_schreier_preimage: kernel is not one-dimensional");
  std::vector<FpRatFun> out;
  for (const auto& v : all_solutions(*sol, p)) {
    FpRatFun f(FpPoly(p, v), D);
    if (f.pow(Int(p)) - f != g) throw std::logic_error("artin_schreier_preimage: solution fails verification");
    if (height(f) <= degree_bound) out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end());
  if (!out.empty()) {
    // Coset check: all differences are constants, and there are p of them
    // unless the degree bound cut the coset (it cannot: adding a constant
    // does not change the height of a nonconstant f, and constants have height 0).
    for (const auto& f : out) {
      if (!(f - out.front()).is_constant()) throw std::logic_error("artin_schreier_preimage: not an F_p coset");
    }
    if (out.size() != p) throw std::logic_error("artin_schreier_preimage: coset has the wrong size");
  }
  return out;
}

}  // namespace dprm::ff
