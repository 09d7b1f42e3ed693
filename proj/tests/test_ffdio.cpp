#include <map>
#include <set>

#include "doctest.h"
#include "dprm/ffdio/artin_schreier.hpp"
#include "dprm/ffdio/automata.hpp"
#include "dprm/ffdio/fp_linear.hpp"
#include "dprm/ffdio/fp_poly.hpp"
#include "dprm/ffdio/fp_ratfun.hpp"
#include "dprm/ffdio/lacunary.hpp"
#include "dprm/ffdio/left_diophantine.hpp"
#include "dprm/ffdio/pheidas.hpp"
#include "dprm/ffdio/power_series.hpp"
#include "dprm/ffdio/qpoly.hpp"
#include "oracles.hpp"

using namespace dprm;
using namespace dprm::ff;

namespace {

FpPoly random_poly(oracle::Gen& g, std::uint32_t p, int max_deg) {
  std::vector<std::uint32_t> c(static_cast<std::size_t>(g.range(0, max_deg + 1)));
  for (auto& x : c) x = static_cast<std::uint32_t>(g.below(p));
  return FpPoly(p, c);
}

FpRatFun random_ratfun(oracle::Gen& g, std::uint32_t p, int max_deg) {
  FpPoly d(p);
  while (d.is_zero()) d = random_poly(g, p, max_deg);
  return FpRatFun(random_poly(g, p, max_deg), d);
}

// Every rational function with numerator degree <= b and monic denominator
// of degree <= b.
std::vector<FpRatFun> all_ratfuns(std::uint32_t p, int b) {
  std::vector<FpPoly> nums, dens;
  std::uint64_t count = 1;
  for (int i = 0; i <= b; ++i) count *= p;
  for (std::uint64_t n = 0; n < count; ++n) nums.push_back(poly_from_digits(p, Nat(n)));
  for (std::uint64_t k = 0;; ++k) {
    FpPoly d = monic_from_index(p, Nat(k));
    if (d.degree() > b) break;
    dens.push_back(d);
  }
  std::set<FpRatFun> out;
  for (const auto& n : nums)
    for (const auto& d : dens) out.insert(FpRatFun(n, d));
  return {out.begin(), out.end()};
}

}  // namespace

TEST_SUITE("ffdio") {
  TEST_CASE("polynomial ring laws over F_p") {
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
      oracle::Gen g(50 + p);
      for (int i = 0; i < 200; ++i) {
        FpPoly a = random_poly(g, p, 8), b = random_poly(g, p, 8), c = random_poly(g, p, 8);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - b) + b == a);
        CHECK(a * b == b * a);
        if (!b.is_zero()) {
          auto [q, r] = a.divmod(b);
          CHECK(q * b + r == a);
          CHECK(r.degree() < b.degree());
        }
        FpPoly h = gcd(a, b);
        if (!h.is_zero()) {
          CHECK(a.divmod(h).second.is_zero());
          CHECK(b.divmod(h).second.is_zero());
        }
        CHECK(a.frobenius() == a.pow(std::uint64_t{p}));
        if (a.frobenius().is_pth_power()) CHECK(a.frobenius().pth_root() == a);
      }
    }
    CHECK_THROWS_AS(FpPoly(4), std::invalid_argument);
    CHECK_THROWS_AS(FpPoly::t(3).divmod(FpPoly(3)), std::domain_error);
  }

  TEST_CASE("monic indices and digit codes round-trip") {
    for (std::uint32_t p : {2u, 3u, 5u}) {
      for (std::uint64_t k = 0; k < 400; ++k) {
        FpPoly f = monic_from_index(p, Nat(k));
        CHECK(f.lead() == 1);
        CHECK(monic_index(f) == Nat(k));
        CHECK(poly_to_digits(poly_from_digits(p, Nat(k))) == Nat(k));
      }
    }
    CHECK(parse_poly("poly p=3 [1,0,2]") == FpPoly(3, {1, 0, 2}));
    CHECK(parse_poly(FpPoly(5, {0, 4}).to_string()) == FpPoly(5, {0, 4}));
  }

  TEST_CASE("rational functions form a field") {
    for (std::uint32_t p : {2u, 3u, 5u}) {
      oracle::Gen g(60 + p);
      for (int i = 0; i < 150; ++i) {
        FpRatFun a = random_ratfun(g, p, 4), b = random_ratfun(g, p, 4);
        CHECK((a + b) - b == a);
        if (!b.is_zero()) CHECK((a / b) * b == a);
        CHECK(a.frobenius() == a.pow(Int(p)));
        CHECK(a.den().lead() == 1);
        CHECK(gcd(a.num(), a.den()).is_one());
        CHECK(parse_ratfun(a.to_string()) == a);
      }
    }
    CHECK(FpRatFun::t_power(3, -2) * FpRatFun::t_power(3, 5) == FpRatFun::t_power(3, 3));
    CHECK(FpRatFun::t_power(3, -2).t_adic_ord() == -2);
  }

  TEST_CASE("linear systems mod p agree with exhaustive search") {
    oracle::Gen g(70);
    for (int trial = 0; trial < 100; ++trial) {
      std::uint32_t p = trial % 2 ? 3 : 2;
      std::size_t rows = 1 + g.below(3), cols = 1 + g.below(4);
      FpMatrix m(p, rows, cols);
      for (auto& x : m.a) x = static_cast<std::uint32_t>(g.below(p));
      FpVector b(rows);
      for (auto& x : b) x = static_cast<std::uint32_t>(g.below(p));
      std::set<FpVector> brute;
      std::size_t total = 1;
      for (std::size_t j = 0; j < cols; ++j) total *= p;
      for (std::size_t code = 0; code < total; ++code) {
        FpVector x(cols);
        std::size_t c = code;
        for (auto& v : x) {
          v = static_cast<std::uint32_t>(c % p);
          c /= p;
        }
        bool ok = true;
        for (std::size_t i = 0; i < rows; ++i) {
          std::uint32_t s = 0;
          for (std::size_t j = 0; j < cols; ++j) s = (s + m.at(i, j) * x[j]) % p;
          ok = ok && s == b[i];
        }
        if (ok) brute.insert(x);
      }
      auto sol = solve_mod_p(m, b);
      if (brute.empty()) {
        CHECK_FALSE(sol);
        continue;
      }
      REQUIRE(sol);
      auto all = all_solutions(*sol, p);
      CHECK(std::set<FpVector>(all.begin(), all.end()) == brute);
      CHECK(all.size() == brute.size());
    }
  }

  TEST_CASE("Artin-Schreier preimages are full F_p cosets") {
    for (std::uint32_t p : {3u, 5u}) {
      oracle::Gen g(80 + p);
      for (int i = 0; i < 40; ++i) {
        FpRatFun f = random_ratfun(g, p, 2);
        FpRatFun gv = f.pow(Int(p)) - f;
        auto pre = artin_schreier_preimage(gv, height(f));
        REQUIRE(pre.size() == p);
        CHECK(std::find(pre.begin(), pre.end(), f) != pre.end());
        for (const auto& h : pre) CHECK(h.pow(Int(p)) - h == gv);
      }
      CHECK(artin_schreier_preimage(FpRatFun::t(p), 10).empty());
    }
  }

  TEST_CASE("the Pheidas family lies on the curve") {
    for (std::uint32_t p : {2u, 3u, 5u}) {
      auto fam = pheidas_family(p, 30);
      CHECK_FALSE(fam.empty());
      for (const auto& pt : fam) CHECK(on_pheidas_curve(pt));
    }
  }

  TEST_CASE("Pheidas solutions match exhaustive search for small heights") {
    for (auto [p, b] : {std::pair<std::uint32_t, int>{3, 4}, {5, 2}}) {
      auto cands = all_ratfuns(p, b);
      Int pp(p);
      std::map<FpRatFun, std::vector<FpRatFun>> as;
      for (const auto& y : cands) as[y.pow(pp) - y].push_back(y);
      FpRatFun t = FpRatFun::t(p);
      std::set<PheidasPoint> brute;
      for (const auto& x : cands) {
        if (x.is_zero()) continue;
        auto iy = as.find(x - t);
        auto iz = as.find(x.inverse() - t.inverse());
        if (iy == as.end() || iz == as.end()) continue;
        for (const auto& y : iy->second)
          for (const auto& z : iz->second) brute.insert({x, y, z});
      }
      auto sols = pheidas_solutions(p, b);
      CHECK(std::set<PheidasPoint>(sols.begin(), sols.end()) == brute);
      CHECK(sols == pheidas_family(p, b));
    }
    CHECK_THROWS_AS(pheidas_solutions(2, 4), std::invalid_argument);
  }

  TEST_CASE("frobenius_leq finds the exponent") {
    FpRatFun x = parse_ratfun("[1,1] / [0,1]", 3);
    CHECK(frobenius_leq(x, x, 4) == 0u);
    CHECK(frobenius_leq(x, x.frobenius().frobenius(), 4) == 2u);
    CHECK_FALSE(frobenius_leq(x, x + FpRatFun::constant(3, 1), 4));
  }

  TEST_CASE("power series arithmetic") {
    std::uint32_t p = 3;
    oracle::Gen g(90);
    for (int i = 0; i < 50; ++i) {
      FpPoly a = random_poly(g, p, 10), b = random_poly(g, p, 10);
      auto sa = PowerSeries::from_poly(a, 16), sb = PowerSeries::from_poly(b, 16);
      CHECK((sa * sb).agrees_with(PowerSeries::from_poly(a * b, 16)));
      CHECK((sa + sb).agrees_with(PowerSeries::from_poly(a + b, 16)));
      CHECK(sa.pow(Nat(4)).agrees_with(PowerSeries::from_poly(a.pow(std::uint64_t{4}), 16)));
      CHECK(sa.frobenius().agrees_with(PowerSeries::from_poly(a.frobenius(), 48)));
    }
    auto geo = PowerSeries::from_ratfun(parse_ratfun("[1] / [1,2]", 3), 20);
    for (int i = 0; i < 20; ++i) CHECK(geo.coeff(i) == 1);
    auto laurent = PowerSeries::from_ratfun(FpRatFun::t_power(3, -2), 5);
    CHECK(laurent.ord() == -2);
    CHECK(laurent.to_string() == "-2:1 + O(t^5)");
  }

  TEST_CASE("Christol series satisfy their relations") {
    for (std::uint32_t p : {2u, 3u, 5u}) {
      std::vector<Nat> pows;
      for (Nat e = 1; e < 200; e *= p) pows.push_back(e);
      for (std::uint32_t b = 0; b < p; ++b) {
        PowerSeries f = genseries(pows, p, 200);
        f.set_coeff(0, b);
        std::vector<FpPoly> rel{FpPoly::t(p), FpPoly::constant(p, p - 1), FpPoly(p)};
        for (std::uint32_t k = 3; k <= p; ++k) rel.push_back(FpPoly(p));
        rel.back() = FpPoly::constant(p, 1);
        CHECK(verify_algebraic(f, rel) >= 200);
      }
    }
    auto en = from_vector<Nat>({Nat(1), Nat(5)}, 2);
    CHECK_THROWS(genseries(en, 2, 50));
  }

  TEST_CASE("digit automata") {
    for (std::uint32_t base : {2u, 3u, 10u}) {
      for (std::uint32_t k : {1u, 3u, 4u, 7u}) {
        auto m = DigitAutomaton::multiples_of(k, base);
        CHECK(m.zero_padding_invariant());
        for (long n = 0; n < 300; ++n) CHECK(m.accepts(Nat(n)) == (n % k == 0));
        CHECK(counting(m, Nat(299)) == Nat(299 / k + 1));
      }
      auto pw = DigitAutomaton::powers_of_base(base);
      std::set<long> powers;
      for (long v = 1; v < 100000; v *= base) powers.insert(v);
      for (long n = 0; n < 2000; ++n) CHECK(pw.accepts(Nat(n)) == (powers.count(n) == 1));
      auto mem = pw.members(2000).drain();
      for (std::size_t i = 1; i < mem.size(); ++i) CHECK(mem[i - 1] < mem[i]);
    }
    CHECK(digits_lsb_first(Nat(0), 2).empty());
    CHECK(digits_lsb_first(Nat(6), 2) == std::vector<std::uint32_t>{0, 1, 1});
    // Accepts exactly the strings ending in a zero digit, so padding matters.
    DigitAutomaton bad(2, {{1, 0}, {1, 0}}, 0, {1});
    CHECK_FALSE(bad.zero_padding_invariant());
  }

  TEST_CASE("lacunary set members and counts") {
    for (std::uint32_t p : {2u, 3u}) {
      auto gens = bigA_generators(p, 3);
      std::set<Nat> brute;
      for (unsigned mask = 0; mask < 8; ++mask) {
        Nat s = 0;
        for (unsigned j = 0; j < 3; ++j)
          if (mask >> j & 1) s += gens[j];
        brute.insert(s);
      }
      auto mem = bigA_members(p, 3);
      CHECK(std::set<Nat>(mem.begin(), mem.end()) == brute);
      for (const auto& m : mem) CHECK(bigA_digit_support_ok(m, p, 3));
      CHECK_FALSE(bigA_digit_support_ok(Nat(p) * Nat(p), p, 3));
      for (unsigned j = 1; j <= 3; ++j) {
        Nat x = gens[j - 1];
        CHECK(bigA_counting(p, j) == counting(mem, x));
        CHECK(bigA_counting(p, j) == Nat(1 + (1u << (j - 1))));
      }
    }
    CHECK_THROWS_AS(count_subset_sums_leq({Nat(2), Nat(1)}, Nat(5)), std::invalid_argument);
  }

  TEST_CASE("binomial powers agree with Lucas") {
    for (std::uint32_t p : {2u, 3u, 5u}) {
      for (std::uint64_t e : {1ull, 7ull, 30ull, 100ull}) {
        auto s = one_plus_t_power(p, Nat(e), 128);
        for (std::uint64_t k = 0; k < 128; ++k) CHECK(s.coeff(static_cast<std::int64_t>(k)) == oracle::lucas(e, k, p));
      }
    }
  }

  TEST_CASE("rational polynomials and root isolation") {
    // (u - 1)(u + 2)(2u - 3)^2
    QPoly f = parse_qpoly("-18,33,-11,-8,4");
    auto chain = sturm_chain(f);
    CHECK(count_roots(chain, Rational(-10), Rational(10)) == 3);
    CHECK(count_roots(chain, Rational(0), Rational(1)) == 1);
    CHECK(count_roots(chain, Rational(1), Rational(3, 2)) == 1);
    Rational cb = cauchy_bound(f);
    CHECK(count_roots(chain, -cb - 1, cb) == 3);
    QPoly a = parse_qpoly("1,2,1"), b = parse_qpoly("-1,0,1");
    QPoly g = gcd(a, b);
    CHECK(g.degree() == 1);
    auto [q, r] = f.divmod(b);
    CHECK(r.degree() < 2);
    AlgebraicReal s2{parse_qpoly("-2,0,1"), Rational(1), Rational(2)};
    auto fine = refine(s2, 30);
    CHECK(fine.hi - fine.lo < Rational(1, 1 << 29));
    CHECK(less_than(Rational(141421, 100000), s2));
    CHECK_FALSE(less_than(Rational(70711, 50000), s2));
  }

  TEST_CASE("left Diophantine enumeration of the rationals below sqrt 2") {
    LeftDiophantine ld(parse_qpoly("2,0,-1"), Rational(2));
    auto xs = ld.enumerate(4096).drain();
    CHECK_FALSE(xs.empty());
    Rational best = xs.front();
    for (const auto& u : xs) {
      CHECK(u * u < 2);
      CHECK(l_alpha_member(u, ld.alpha()));
      if (u > best) best = u;
    }
    double diff = std::abs(best.get_d() - std::sqrt(2.0));
    CHECK(diff < 1e-3);
    CHECK_THROWS_AS(LeftDiophantine(parse_qpoly("-2,0,1"), Rational(2)), std::domain_error);
    CHECK_THROWS_AS(LeftDiophantine(parse_qpoly("0,0,-1"), Rational(2)), std::domain_error);
  }
}
