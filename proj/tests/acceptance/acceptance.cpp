// Acceptance checks. Each criterion prints one PASS/FAIL line with its
// wall time; a run exits nonzero when any selected criterion fails.
//
//   acceptance                 run all criteria
//   acceptance --criterion N   run only criterion N

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dprm/ffdio/automata.hpp"
#include "dprm/ffdio/lacunary.hpp"
#include "dprm/ffdio/left_diophantine.hpp"
#include "dprm/ffdio/pheidas.hpp"
#include "dprm/ffdio/power_series.hpp"
#include "dprm/peformula/four_squares.hpp"
#include "dprm/presentations/algorithms.hpp"
#include "dprm/presentations/builtins.hpp"
#include "dprm/presentations/rational_listing.hpp"
#include "dprm/presentations/universal_listing.hpp"
#include "dprm/recfun/eval.hpp"
#include "dprm/recfun/godel.hpp"
#include "dprm/recfun/library.hpp"
#include "oracles.hpp"
#include "run_cli.hpp"

using namespace dprm;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail.clear();
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
  void note(const std::string& what) {
    if (pass) detail += (detail.empty() ? "" : "; ") + what;
  }
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<Outcome()> run;
};

Rational R(const oracle::Frac& f) { return Rational(f.num, f.den); }

std::string str(const Rational& r) { return to_string(r); }

// 1. tau: distinct values, inverse, integer preimages.
Outcome tau_enumeration() {
  Outcome o;
  std::set<Rational> seen;
  bool distinct = true;
  for (std::uint64_t n = 0; n <= 10000; ++n) distinct = seen.insert(pres::tau(Nat(n))).second && distinct;
  o.require(distinct, "tau(0..10000) has a repeated value");

  std::size_t checked = 0, bad = 0;
  for (long den = 1; den <= 50; ++den) {
    for (long num = -50; num <= 50; ++num) {
      Rational r(num, den);
      r.canonicalize();
      ++checked;
      if (pres::tau(pres::tau_inverse(r)) != r) ++bad;
    }
  }
  o.require(bad == 0, std::to_string(bad) + " rationals fail tau(tau_inverse(r)) = r");

  std::set<std::uint64_t> integral, expect;
  for (std::uint64_t n = 0; n <= 4096; ++n) {
    if (pres::tau(Nat(n)).get_den() == 1) integral.insert(n);
  }
  for (std::uint64_t k = 1; k <= 4096; k *= 2) {
    expect.insert(k);
    expect.insert(k - 1);
  }
  o.require(integral == expect, "integer preimages differ from {2^k} u {2^k - 1}");
  o.note("10001 distinct values, " + std::to_string(checked) + " round trips, " + std::to_string(integral.size()) +
         " integral indices");
  return o;
}

// 2. Continued-fraction codec.
Outcome cf_codec() {
  Outcome o;
  std::size_t bad = 0, checked = 0;
  for (long num = 1; num <= 50; ++num) {
    for (long den = 1; den <= 50; ++den) {
      Rational r(num, den);
      r.canonicalize();
      ++checked;
      if (pres::q_pos(pres::cf_encode(pres::cf_terms(r))) != r) ++bad;
    }
  }
  o.require(bad == 0, std::to_string(bad) + " positive rationals fail the round trip");
  auto q = oracle::q_table(512);
  std::set<oracle::Frac> seen;
  bool distinct = true, agree = true;
  for (std::uint64_t n = 1; n <= 512; ++n) {
    Rational v = pres::q_pos(Nat(n));
    agree = agree && v == R(q[n]);
    distinct = seen.insert(q[n]).second && distinct;
  }
  o.require(distinct, "q_pos(1..512) has a repeated value");
  o.require(agree, "q_pos disagrees with the reference table");
  o.note(std::to_string(checked) + " round trips, q_pos(1..512) distinct");
  return o;
}

// 3. Universal listing alpha for two presentations.
Outcome universal_listing() {
  Outcome o;
  auto t = oracle::tau_table(2000);
  auto data = pres::rational_listing_data();
  for (auto rho : {pres::rat_tau(), pres::rat_pairs()}) {
    pres::AlphaSolver<Rational> solver(data, rho, 2'000'000'000ull);
    std::size_t bad = 0;
    auto last = solver.alpha(2000);
    if (!pres::is_yes(last)) {
      o.require(false, rho.name + ": ran out of fuel");
      continue;
    }
    for (pres::Code n = 0; n <= 2000; ++n) {
      auto a = solver.alpha(n);
      if (rho.decode(pres::witness(a)) != R(t[n])) ++bad;
    }
    o.require(bad == 0, rho.name + ": " + std::to_string(bad) + " mismatches");
    o.note(rho.name + " ok, fuel " + std::to_string(solver.fuel_used()));
  }
  return o;
}

// 4. Bijectivization of rat-pairs.
Outcome bijectivization() {
  Outcome o;
  auto rho = pres::rat_pairs();
  auto h = pres::bijectivize(rho, 501, 100'000'000);
  o.require(h.size() == 501, "only " + std::to_string(h.size()) + " codes found");
  std::set<Rational> values;
  bool distinct = true, minimal = true;
  pres::Code y = 0;
  for (std::size_t x = 0; x < h.size(); ++x) {
    // Re-verify minimality: every code below h(x) decodes into an earlier class.
    for (; y < h[x]; ++y) minimal = minimal && values.count(rho.decode(y)) == 1;
    Rational v = rho.decode(h[x]);
    distinct = values.insert(v).second && distinct;
    y = h[x] + 1;
  }
  o.require(distinct, "h(0..500) decode to repeated fractions");
  o.require(minimal, "some h(x) is not the least new code");

  auto t = oracle::tau_table(200);
  std::vector<std::string> missing;
  std::uint64_t prefix = 0;
  bool gap = false;
  for (std::size_t n = 0; n <= 200; ++n) {
    if (!values.count(R(t[n]))) {
      missing.push_back(str(R(t[n])));
      gap = true;
    } else if (!gap) {
      prefix = n;
    }
  }
  // How many least codes are needed to reach all of tau(0..200).
  std::set<Rational> need;
  for (std::size_t n = 0; n <= 200; ++n) need.insert(R(t[n]));
  auto more = pres::bijectivize(rho, 2000, 100'000'000);
  std::size_t needed = 0;
  for (std::size_t x = 0; x < more.size() && !need.empty(); ++x) {
    need.erase(rho.decode(more[x]));
    needed = x;
  }
  std::string miss;
  for (const auto& m : missing) miss += (miss.empty() ? "" : " ") + m;
  o.require(missing.empty(), "coverage: h(0..500) misses " + std::to_string(missing.size()) +
                                 " values of tau(0..200): " + miss + "; covered prefix tau(0.." +
                                 std::to_string(prefix) + "), full coverage needs h(0.." +
                                 std::to_string(needed) + ")");
  o.note("501 distinct minimal codes covering tau(0..200)");
  return o;
}

// 5. Translations into rat-pairs.
Outcome translation() {
  Outcome o;
  auto rho = pres::rat_pairs();
  auto gamma = pres::rat_tau();
  auto t = oracle::tau_table(1000);
  auto check = [&](const pres::Presentation<Rational>& g, const std::function<pres::Code(pres::Code)>& index,
                   const std::string& label) {
    auto phi = pres::find_translation(g, rho, 500, 2'000'000'000ull);
    std::size_t bad = 0;
    for (pres::Code n = 0; n <= 500; ++n) {
      if (!phi[n] || rho.decode(*phi[n]) != g.decode(n) || g.decode(n) != R(t[index(n)])) ++bad;
    }
    o.require(bad == 0, label + ": " + std::to_string(bad) + " entries wrong or missing");
    o.note(label + " ok");
  };
  check(gamma, [](pres::Code n) { return n; }, "rat-tau");
  auto swapped = pres::permuted(gamma, pres::sigma_swap, pres::sigma_swap, "rat-tau-sigma");
  check(swapped, [](pres::Code n) { return n ^ 1u; }, "rat-tau o sigma");
  return o;
}

// 6. mu-recursive engine.
Outcome recursive_engine() {
  Outcome o;
  auto corpus = recfun::lib::corpus();
  o.require(corpus.size() == 20, "corpus has " + std::to_string(corpus.size()) + " programs");
  std::size_t runs = 0, disagree = 0, halts = 0;
  std::size_t mu_checks = 0, mu_bad = 0;
  for (const auto& [name, prog] : corpus) {
    Nat e = recfun::godel_encode(prog);
    for (std::uint64_t i = 0; i < 100; ++i) {
      std::vector<Nat> args;
      for (auto c : tuple_decode_u64(i, prog.arity())) args.push_back(from_u64(c));
      for (std::uint64_t b : {200ull, 20000ull}) {
        auto d = recfun::eval(prog, args, b);
        auto u = recfun::eval_universal(e, args, b + prog.size());
        ++runs;
        if (recfun::halted(d) != recfun::halted(u) ||
            (recfun::halted(d) && recfun::value_of(d) != recfun::value_of(u))) {
          ++disagree;
        }
        halts += recfun::halted(d);
        if (prog.kind() == recfun::Kind::Mu && recfun::halted(d) && b == 20000) {
          ++mu_checks;
          std::vector<Nat> bargs{Nat(0)};
          bargs.insert(bargs.end(), args.begin(), args.end());
          Nat y = recfun::value_of(d);
          for (Nat j = 0; j <= y; ++j) {
            bargs[0] = j;
            auto r = recfun::eval(prog.child(0), bargs, 1'000'000);
            bool ok = recfun::halted(r) && ((j == y) == (recfun::value_of(r) == 0));
            if (!ok) {
              ++mu_bad;
              break;
            }
          }
        }
      }
    }
  }
  o.require(disagree == 0, std::to_string(disagree) + " of " + std::to_string(runs) + " runs disagree");
  o.require(mu_bad == 0, std::to_string(mu_bad) + " mu results are not least zeros");
  o.require(mu_checks > 0, "no mu results checked");

  std::vector<std::uint64_t> prev;
  bool monotone = true;
  for (std::uint64_t f = 1000, k = 0; k <= 5; ++k, f *= 2) {
    auto got = recfun::halting_prefix(f).drain();
    monotone = monotone && got.size() >= prev.size() && std::equal(prev.begin(), prev.end(), got.begin());
    prev = std::move(got);
  }
  o.require(monotone, "halting prefix is not monotone under fuel doubling");
  o.note(std::to_string(runs) + " matched runs (" + std::to_string(halts) + " halting), " +
         std::to_string(mu_checks) + " mu results minimal, halting prefix " + std::to_string(prev.size()) +
         " at fuel 32000");
  return o;
}

// 7. Four squares.
Outcome four_squares() {
  Outcome o;
  std::size_t bad = 0, notmin = 0;
  for (long n = 0; n <= 10000; ++n) {
    auto r = pe::four_squares(Int(n));
    if (!r) {
      ++bad;
      continue;
    }
    const auto& a = *r;
    if (a[0] * a[0] + a[1] * a[1] + a[2] * a[2] + a[3] * a[3] != n) ++bad;
    if (n <= 1000) {
      auto ref = oracle::four_squares(n);
      for (int i = 0; i < 4; ++i) {
        if (a[i] != Nat(ref[i])) {
          ++notmin;
          break;
        }
      }
    }
  }
  o.require(bad == 0, std::to_string(bad) + " values lack a valid representation");
  o.require(notmin == 0, std::to_string(notmin) + " representations are not lexicographically least");
  o.note("n <= 10000 represented, n <= 1000 minimal");
  return o;
}

// 8. Pheidas curve, p = 3, degree bound 27.
Outcome pheidas() {
  Outcome o;
  const std::uint32_t p = 3;
  auto sols = ff::pheidas_solutions(p, 27);
  auto fam = ff::pheidas_family(p, 27);
  o.require(sols == fam, "oracle (" + std::to_string(sols.size()) + ") and family (" + std::to_string(fam.size()) +
                             ") differ");
  for (const auto& pt : sols) o.require(ff::on_pheidas_curve(pt), "a reported point is not on the curve");

  std::set<ff::FpRatFun> xs, ys, want_x, want_y;
  for (const auto& pt : sols) {
    xs.insert(pt.x);
    ys.insert(pt.y);
  }
  ff::FpRatFun partial(p);
  for (std::int64_t e = 1; e <= 27; e *= 3) want_x.insert(ff::FpRatFun::t_power(p, e));
  for (int n = 0; n <= 3; ++n) {
    for (std::uint32_t b = 0; b < p; ++b) want_y.insert(partial + ff::FpRatFun::constant(p, b));
    std::int64_t e = 1;
    for (int i = 0; i < n; ++i) e *= 3;
    partial = partial + ff::FpRatFun::t_power(p, e);
  }
  o.require(xs == want_x, "x-projection is not {t, t^3, t^9, t^27}");
  o.require(ys == want_y && ys.size() == 12, "y-projection differs (" + std::to_string(ys.size()) + " values)");
  o.note(std::to_string(sols.size()) + " solutions, x-projection 4 values, y-projection 12 values");
  return o;
}

// 9. Christol residuals.
Outcome christol() {
  Outcome o;
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const std::int64_t n = 81;
    std::vector<Nat> pows;
    for (Nat e = 1; e < n; e *= p) pows.push_back(e);
    for (std::uint32_t b = 0; b < p; ++b) {
      ff::PowerSeries f = ff::genseries(pows, p, n);
      f.set_coeff(0, b);
      std::vector<ff::FpPoly> rel(p + 1, ff::FpPoly(p));
      rel[0] = ff::FpPoly::t(p);
      rel[1] = ff::FpPoly::constant(p, p - 1);
      rel[p] = ff::FpPoly::constant(p, 1);
      std::int64_t ord = ff::verify_algebraic(f, rel);
      // Direct residual: f^p has coefficient f_k at t^(pk).
      bool direct = true;
      for (std::int64_t k = 0; k < n; ++k) {
        std::uint32_t fp = k % p == 0 ? f.coeff(k / p) : 0;
        std::uint32_t r = (fp + p - f.coeff(k) + (k == 1 ? 1 : 0)) % p;
        direct = direct && r == 0;
      }
      o.require(ord >= n && direct, "f_" + std::to_string(b) + " fails for p = " + std::to_string(p));
    }
    auto all = ff::DigitAutomaton::multiples_of(1, p).members(256);
    ff::PowerSeries fn = ff::genseries(all, p, 256);
    std::int64_t ord = ff::verify_algebraic(fn, {ff::FpPoly::constant(p, p - 1), ff::FpPoly(p, {1, p - 1})});
    o.require(ord >= 256, "f_N fails for p = " + std::to_string(p));
  }
  o.note("f_b residual 0 mod t^81 for p in {2,3,5}; (1-t) f_N - 1 = 0 mod t^256");
  return o;
}

// 10. Lacunary set A.
Outcome lacunary() {
  Outcome o;
  for (std::uint32_t p : {2u, 3u}) {
    for (unsigned j = 1; j <= 5; ++j) {
      Nat got = ff::bigA_counting(p, j);
      o.require(got == Nat(1 + (1u << (j - 1))),
                "N(A, " + std::to_string(p) + "^" + std::to_string(j) + "^" + std::to_string(j) + ") = " +
                    got.get_str());
    }
    for (unsigned j = 1; j <= 3; ++j) {
      auto mem = ff::bigA_members(p, j);
      for (const auto& m : mem) {
        Nat v = m;
        bool ok = true;
        for (unsigned pos = 0; v > 0; ++pos) {
          unsigned long d = mpz_fdiv_ui(v.get_mpz_t(), p);
          v /= p;
          if (d == 0) continue;
          bool support = false;
          for (unsigned i = 1; i <= j; ++i) {
            unsigned long ii = 1;
            for (unsigned k = 0; k < i; ++k) ii *= i;
            support = support || ii == pos;
          }
          ok = ok && d == 1 && support;
        }
        o.require(ok, "member " + m.get_str() + " has digits outside {j^j}");
      }
      Nat x = ff::bigA_generators(p, j).back();
      o.require(ff::counting(mem, x) == ff::bigA_counting(p, j), "member list and counting disagree");
    }
  }
  o.note("N(A, p^(j^j)) = 1 + 2^(j-1) for j = 1..5, p = 2, 3; digit support checked for j <= 3");
  return o;
}

// 11. Product identity and convergence of (1+t)^(n_r) to f_A.
Outcome product_identity() {
  Outcome o;
  struct Case {
    std::uint32_t p;
    unsigned r;
    std::int64_t n;
  };
  for (Case c : {Case{2, 2, 64}, Case{2, 3, 1024}, Case{3, 2, 256}}) {
    std::string label = "(" + std::to_string(c.p) + "," + std::to_string(c.r) + "," + std::to_string(c.n) + ")";
    o.require(ff::product_identity_check(c.p, c.r, c.n), label + ": library check fails");
    // Lucas: the coefficients of (1+t)^(n_r) mod p are the indicator of
    // subset sums of the generators.
    auto gens = ff::bigA_generators(c.p, c.r);
    std::set<std::uint64_t> sums{0};
    for (const auto& g : gens) {
      std::set<std::uint64_t> next = sums;
      if (g < c.n) {
        for (auto s : sums) next.insert(s + g.get_ui());
      }
      sums = next;
    }
    std::uint64_t nr = ff::bigA_partial_sum(c.p, c.r).get_ui();
    auto lhs = ff::one_plus_t_power(c.p, Nat(nr), c.n);
    auto rhs = ff::bigA_product(c.p, c.r, c.n);
    bool ok = true;
    for (std::int64_t k = 0; k < c.n; ++k) {
      std::uint32_t want = oracle::lucas(nr, static_cast<std::uint64_t>(k), c.p);
      std::uint32_t indicator = sums.count(static_cast<std::uint64_t>(k)) ? 1 : 0;
      ok = ok && want == indicator && lhs.coeff(k) == want && rhs.coeff(k) == want;
    }
    o.require(ok, label + ": coefficients disagree with Lucas");
  }
  std::int64_t ord = ff::fA_convergence_ord(2, 1, 64);
  o.require(ord == 16, "ord(f_A - (1+t)^(n_1)) = " + std::to_string(ord));
  o.note("three identities hold, ord(f_A - (1+t)^(n_1)) = 16");
  return o;
}

// 12. Rationals below sqrt 2 as a left-Diophantine set.
Outcome left_diophantine() {
  Outcome o;
  ff::LeftDiophantine ld(ff::parse_qpoly("2,0,-1"), Rational(2));
  auto xs = ld.enumerate(ff::kLeftDioDefaultFuel).drain();
  o.require(!xs.empty(), "no elements");
  Rational best = xs.empty() ? Rational(0) : xs.front();
  std::size_t bad = 0;
  for (const auto& u : xs) {
    if (!(u * u < 2) || !ff::l_alpha_member(u, ld.alpha())) ++bad;
    if (u > best) best = u;
  }
  double diff = std::abs(best.get_d() - std::sqrt(2.0));
  o.require(bad == 0, std::to_string(bad) + " elements fail the sign test");
  o.require(diff < 1e-3, "prefix maximum " + str(best) + " is " + std::to_string(diff) + " from sqrt 2");
  std::ostringstream s;
  s << xs.size() << " elements at fuel " << ff::kLeftDioDefaultFuel << ", max " << str(best) << " (off by "
    << diff << ")";
  o.note(s.str());
  return o;
}

// 13. Every CLI subcommand is deterministic.
Outcome determinism() {
  Outcome o;
  const std::vector<std::string> runs = {
      "recfun-eval --program mul --args 6,7",
      "recfun-eval --program exact-sqrt --args 49 --universal",
      "halting --fuel 3000",
      "tau --upto 64",
      "tau-inv --q 1/2,-3/4,22/7",
      "cf-encode --q 3/2,5/8",
      "bijectivize --count 60",
      "equiv --upto 40",
      "equiv --upto 40 --sigma",
      "universal-listing --rho rat-pairs --upto 60",
      "pe-eval --rho rat-tau --formula \"E y. x = y * y\" --assign x=4/9",
      "pe-enumerate --formula \"E a. E b. x = a * a + b * b\" --vars x --limit 12",
      "compose --theta1 nz --theta2 kappa-zq --limit 3",
      "graph --theta kappa-zq --limit 10",
      "homotopy --theta nz --theta2 zn --limit 10",
      "foursquares --upto 50",
      "pheidas --p 3 --deg 9",
      "frobenius --p 3 --x [0,1] --y [0,0,0,0,0,0,0,0,0,1]",
      "automaton --kind multiples --k 3 --upto 40",
      "automaton --kind powers --base 3 --upto 100",
      "christol --p 3",
      "bigA --p 3",
      "product-identity --p 2 --r 2 --N 64",
      "leftdio",
      "--plain tau --upto 16",
  };
  std::set<std::string> subs;
  for (const auto& args : runs) {
    auto a = run_cli(args);
    auto b = run_cli(args);
    o.require(a.status == 0, "'" + args + "' exited with " + std::to_string(a.status));
    o.require(a.out == b.out && a.status == b.status && !a.out.empty(), "'" + args + "' is not deterministic");
    std::istringstream in(args);
    std::string first;
    in >> first;
    if (first == "--plain") in >> first;
    subs.insert(first);
  }
  o.require(subs.size() == 21, "covered " + std::to_string(subs.size()) + " subcommands, expected 21");
  o.note(std::to_string(runs.size()) + " invocations over " + std::to_string(subs.size()) +
         " subcommands byte-identical");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<Criterion> all = {
      {1, "tau enumeration", 1, tau_enumeration},
      {2, "continued-fraction codec", 1, cf_codec},
      {3, "universal listing", 30, universal_listing},
      {4, "bijectivization of rat-pairs", 30, bijectivization},
      {5, "translation into rat-pairs", 30, translation},
      {6, "mu-recursive engine", 60, recursive_engine},
      {7, "four squares", 10, four_squares},
      {8, "Pheidas curve p=3 bound 27", 60, pheidas},
      {9, "Christol residuals", 5, christol},
      {10, "lacunary set A", 5, lacunary},
      {11, "product identity", 30, product_identity},
      {12, "left-Diophantine sqrt 2", 10, left_diophantine},
      {13, "CLI determinism", 600, determinism},
  };
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--criterion N]\n";
      return 2;
    }
  }
  int failed = 0, ran = 0;
  for (const auto& c : all) {
    if (only && c.id != only) continue;
    ++ran;
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_seconds) {
      o.pass = false;
      o.detail = "took longer than " + std::to_string(static_cast<int>(c.limit_seconds)) + " s; " + o.detail;
    }
    char head[128];
    std::snprintf(head, sizeof head, "%s %2d %-30s %7.2fs  ", o.pass ? "PASS" : "FAIL", c.id, c.title.c_str(), secs);
    std::cout << head << o.detail << std::endl;
    if (!o.pass) ++failed;
  }
  if (ran == 0) {
    std::cerr << "no such criterion\n";
    return 2;
  }
  return failed ? 1 : 0;
}
