#include "dprm/ffdio/pheidas.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "dprm/ffdio/artin_schreier.hpp"
#include "dprm/ffdio/fp_linear.hpp"

namespace dprm::ff {

bool on_pheidas_curve(const PheidasPoint& pt) {
  std::uint32_t p = pt.x.prime();
  if (pt.x.is_zero()) return false;
  FpRatFun t = FpRatFun::t(p);
  Int pp(p);
  return pt.x - t == pt.y.pow(pp) - pt.y && pt.x.inverse() - t.inverse() == pt.z.pow(pp) - pt.z;
}

std::vector<PheidasPoint> pheidas_family(std::uint32_t p, int degree_bound) {
  std::vector<PheidasPoint> out;
  FpRatFun t = FpRatFun::t(p);
  FpRatFun x = t;
  FpRatFun ysum(p), zsum(p);
  for (;;) {
    if (height(x) > degree_bound) break;
    for (std::uint32_t b = 0; b < p; ++b) {
      FpRatFun y = ysum + FpRatFun::constant(p, b);
      if (height(y) > degree_bound) continue;
      for (std::uint32_t c = 0; c < p; ++c) {
        FpRatFun z = zsum + FpRatFun::constant(p, c);
        if (height(z) <= degree_bound) out.push_back({x, y, z});
      }
    }
    ysum = ysum + x;
    zsum = zsum + x.inverse();
    x = x.frobenius();
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Every monic polynomial of degree d over F_p with nonzero constant term.
std::vector<FpPoly> monic_unit_at_zero(std::uint32_t p, int d) {
  std::vector<FpPoly> out;
  std::vector<std::uint32_t> c(static_cast<std::size_t>(d) + 1, 0);
  c[d] = 1;
  if (d == 0) return {FpPoly::constant(p, 1)};
  for (;;) {
    if (c[0] != 0) out.emplace_back(p, c);
    std::size_t k = 0;
    while (k < static_cast<std::size_t>(d)) {
      if (++c[k] < p) break;
      c[k++] = 0;
    }
    if (k == static_cast<std::size_t>(d)) break;
  }
  return out;
}

// Solutions with ord_0(x) = 1. Such an x is t W^p / D^p with W, D monic of
// the same degree d, coprime and prime to t; x - t = t R^p / D^p with
// R = W - D, and x - t = y^p - y forces y = N/D with deg N <= d. The pairs
// (R, N) then form the kernel of an F_p-linear map, solved per D.
std::vector<FpRatFun> unit_order_candidates(std::uint32_t p, int degree_bound) {
  std::vector<FpRatFun> out;
  FpPoly t = FpPoly::t(p);
  for (int d = 0; 1 + static_cast<int>(p) * d <= degree_bound; ++d) {
    for (const FpPoly& D : monic_unit_at_zero(p, d)) {
      std::size_t nr = static_cast<std::size_t>(d), nn = static_cast<std::size_t>(d) + 1;
      std::size_t rows = static_cast<std::size_t>(p) * d + 2;
      FpMatrix m(p, rows, nr + nn);
      FpPoly dp1 = D.pow(static_cast<std::uint64_t>(p - 1));
      for (std::size_t j = 0; j < nr; ++j) m.at(j * p + 1, j) = p - 1;  // -t * t^(p j)
      for (std::size_t i = 0; i < nn; ++i) {
        FpPoly col = FpPoly::monomial(p, 1, i * p) - dp1.shifted(i);
        for (std::size_t r = 0; r < rows; ++r) m.at(r, nr + i) = col.coeff(r);
      }
      auto sol = solve_mod_p(std::move(m), FpVector(rows, 0));
      std::set<FpVector> rs;
      for (const auto& v : all_solutions(*sol, p)) rs.insert(FpVector(v.begin(), v.begin() + nr));
      for (const auto& rv : rs) {
        FpPoly W = D + FpPoly(p, rv);
        if (W.coeff(0) == 0 || !gcd(W, D).is_one()) continue;
        FpRatFun x(t * W.pow(static_cast<std::uint64_t>(p)), D.pow(static_cast<std::uint64_t>(p)));
        if (height(x) <= degree_bound) out.push_back(std::move(x));
      }
    }
  }
  return out;
}

// x values with ord_0(x) >= 1 and height <= bound that can lie on the curve.
// Pole orders of y^p - y are multiples of p, which forces den(x) = D^p,
// num(x) = c t^e W^p with e = 1 or p | e, and deg x >= 1. When p | e,
// x = x'^p and x' satisfies both equations iff x does, since
// u^p - u is always in the image. When e = 1 the degree at infinity forces
// c = 1 and deg W = deg D.
std::set<FpRatFun> x_candidates(std::uint32_t p, int degree_bound) {
  std::set<FpRatFun> out;
  if (degree_bound < 1) return out;
  for (const auto& x : x_candidates(p, degree_bound / static_cast<int>(p))) out.insert(x.frobenius());
  for (auto& x : unit_order_candidates(p, degree_bound)) out.insert(std::move(x));
  return out;
}

}  // namespace

std::vector<PheidasPoint> pheidas_solutions(std::uint32_t p, int degree_bound) {
  if (!is_small_prime(p) || p == 2) throw std::invalid_argument("pheidas_solutions requires an odd prime");
  FpRatFun t = FpRatFun::t(p);
  std::vector<PheidasPoint> out;
  for (const auto& x : x_candidates(p, degree_bound)) {
    auto ys = artin_schreier_preimage(x - t, degree_bound);
    if (ys.empty()) continue;
    auto zs = artin_schreier_preimage(x.inverse() - t.inverse(), degree_bound);
    for (const auto& y : ys)
      for (const auto& z : zs) out.push_back({x, y, z});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FpRatFun> pheidas_x_candidates(std::uint32_t p, int degree_bound) {
  std::vector<FpRatFun> xs;
  for (const auto& pt : pheidas_solutions(p, degree_bound)) {
    if (xs.empty() || xs.back() != pt.x) xs.push_back(pt.x);
  }
  return xs;
}

std::optional<unsigned> frobenius_leq(const FpRatFun& x, const FpRatFun& y, unsigned s_max) {
  FpRatFun cur = x;
  for (unsigned s = 0; s <= s_max; ++s) {
    if (cur == y) return s;
    // Past the height of y only constants stay put; those were checked at s = 0.
    if (height(cur) > height(y)) return std::nullopt;
    cur = cur.frobenius();
  }
  return std::nullopt;
}

}  // namespace dprm::ff
