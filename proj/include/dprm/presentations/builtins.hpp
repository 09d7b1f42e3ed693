#pragma once

#include <functional>
#include <string>

#include "dprm/ffdio/fp_ratfun.hpp"
#include "dprm/presentations/presentation.hpp"

namespace dprm::pres {

// n -> n.
Presentation<Nat> nat_id();
// n -> (-1)^n ceil(n/2); bijective.
Presentation<Int> int_zigzag();
// <i, j> -> i - j; every integer has infinitely many codes.
Presentation<Int> int_pairs();
// n -> tau(n); bijective.
Presentation<Rational> rat_tau();
// <i, j> -> zigzag(i) / (j + 1); redundant. The least code of a value is the
// code of its reduced form.
Presentation<Rational> rat_pairs();

// (F_p(t); 0, 1, t, +, *, =). Numerals are read mod p.
StructurePtr<ff::FpRatFun> fp_ratfun_structure(std::uint32_t p);
// <i, j> -> N_i / D_j, with N_i the polynomial whose coefficients are the
// base-p digits of i and D_j the j-th monic polynomial (monic_from_index).
Presentation<ff::FpRatFun> fp_ratfun(std::uint32_t p);

// Swaps 2k and 2k+1. Its own inverse.
Code sigma_swap(Code n);

// rho o sigma, for a permutation sigma with inverse sigma_inv.
template <class T>
Presentation<T> permuted(const Presentation<T>& rho, std::function<Code(Code)> sigma,
                         std::function<Code(Code)> sigma_inv, std::string name) {
  Presentation<T> out = rho;
  out.name = std::move(name);
  auto dec = rho.decode;
  out.decode = [dec, sigma](Code n) { return dec(sigma(n)); };
  auto find = rho.find_code;
  out.find_code = [find, sigma_inv](const T& v, std::uint64_t fuel) -> std::optional<Code> {
    auto c = find(v, fuel);
    if (!c) return std::nullopt;
    return sigma_inv(*c);
  };
  return out;
}

}  // namespace dprm::pres
