#include <map>
#include <set>

#include "doctest.h"
#include "dprm/presentations/algorithms.hpp"
#include "dprm/presentations/builtins.hpp"
#include "dprm/presentations/rational_listing.hpp"
#include "dprm/presentations/universal_listing.hpp"
#include "oracles.hpp"

using namespace dprm;
using namespace dprm::pres;

namespace {

Rational R(const oracle::Frac& f) { return Rational(f.num, f.den); }

}  // namespace

TEST_SUITE("presentations") {
  TEST_CASE("tau agrees with the bottom-up table") {
    auto t = oracle::tau_table(3000);
    for (std::size_t n = 0; n <= 3000; ++n) CHECK(tau(Nat(n)) == R(t[n]));
  }

  TEST_CASE("q_pos agrees with the bottom-up table") {
    auto q = oracle::q_table(2000);
    for (std::size_t n = 1; n <= 2000; ++n) CHECK(q_pos(Nat(n)) == R(q[n]));
    CHECK_THROWS_AS(q_pos(Nat(0)), std::invalid_argument);
  }

  TEST_CASE("tau_inverse inverts tau on random rationals") {
    oracle::Gen g(31);
    for (int i = 0; i < 2000; ++i) {
      Rational r(g.range(-500, 500), g.range(1, 500));
      r.canonicalize();
      CHECK(tau(tau_inverse(r)) == r);
    }
  }

  TEST_CASE("continued fraction terms end in 1 and evaluate back") {
    oracle::Gen g(32);
    for (int i = 0; i < 1000; ++i) {
      Rational r(g.range(1, 1000), g.range(1, 1000));
      r.canonicalize();
      auto terms = cf_terms(r);
      CHECK(terms.size() >= 2);
      CHECK(terms.back() == 1);
      CHECK(cf_value(terms) == r);
      CHECK(q_pos(cf_encode(terms)) == r);
    }
    CHECK(cf_terms(Rational(3, 2)) == std::vector<Nat>{1, 1, 1});
    CHECK(cf_encode({1, 1, 1}) == 6);
    CHECK_THROWS_AS(cf_encode({2}), std::invalid_argument);
    CHECK_THROWS_AS(cf_encode({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(cf_encode({1, 0, 1}), std::invalid_argument);
  }

  TEST_CASE("zigzag is a bijection") {
    for (std::uint64_t n = 0; n < 1000; ++n) {
      CHECK(zigzag(Nat(n)) == Int(oracle::zigzag(n)));
      CHECK(zigzag_inverse(zigzag(Nat(n))) == Nat(n));
    }
  }

  TEST_CASE("rat-pairs decodes fractions and finds least codes") {
    auto rho = rat_pairs();
    CHECK_FALSE(rho.bijective);
    for (Code c = 0; c < 3000; ++c) CHECK(rho.decode(c) == R(oracle::rat_pairs(c)));
    std::map<Rational, Code> least;
    for (Code c = 0; c < 3000; ++c) least.emplace(rho.decode(c), c);
    for (const auto& [v, c] : least) {
      auto found = rho.find_code(v, 1'000'000);
      REQUIRE(found);
      CHECK(*found == c);
    }
  }

  TEST_CASE("bijective presentations invert exactly") {
    auto tz = rat_tau();
    CHECK(tz.bijective);
    for (Code c = 0; c < 500; ++c) CHECK(*tz.find_code(tz.decode(c), 10) == c);
    auto iz = int_zigzag();
    for (Code c = 0; c < 500; ++c) CHECK(*iz.find_code(iz.decode(c), 10) == c);
    auto ip = int_pairs();
    for (Code c = 0; c < 500; ++c) {
      auto k = ip.find_code(ip.decode(c), 1'000'000);
      REQUIRE(k);
      CHECK(*k <= c);
      CHECK(ip.decode(*k) == ip.decode(c));
    }
  }

  TEST_CASE("bijectivize matches a direct least-code scan") {
    auto rho = rat_pairs();
    auto h = bijectivize(rho, 300, 1'000'000);
    REQUIRE(h.size() == 300);
    std::vector<Code> expect;
    std::set<oracle::Frac> seen;
    for (Code c = 0; expect.size() < 300; ++c) {
      if (seen.insert(oracle::rat_pairs(c)).second) expect.push_back(c);
    }
    CHECK(h == expect);
    auto short_run = bijectivize(rho, 300, 100);
    CHECK(short_run.size() < 300);
    CHECK(std::equal(short_run.begin(), short_run.end(), h.begin()));
  }

  TEST_CASE("E_rho pairs are exactly the equal-value pairs") {
    auto rho = rat_pairs();
    auto pairs = e_rho_enumerate(rho, 5000).drain();
    std::set<CodePair> got(pairs.begin(), pairs.end());
    for (std::uint64_t k = 0; k < 5000; ++k) {
      auto [m, n] = oracle::unpair(k);
      bool eq = oracle::rat_pairs(m) == oracle::rat_pairs(n);
      CHECK(got.count({m, n}) == (eq ? 1u : 0u));
    }
  }

  TEST_CASE("translation between rat-tau and rat-pairs") {
    auto gamma = rat_tau();
    auto rho = rat_pairs();
    auto phi = find_translation(gamma, rho, 60, 10'000'000);
    for (Code n = 0; n <= 60; ++n) {
      REQUIRE(phi[n]);
      CHECK(rho.decode(*phi[n]) == gamma.decode(n));
    }
    auto sg = permuted(gamma, sigma_swap, sigma_swap, "tau-sigma");
    for (Code n = 0; n < 100; ++n) CHECK(sigma_swap(sigma_swap(n)) == n);
    CHECK(sigma_swap(4) == 5);
    auto one = translate_one(sg, rho, 7, 10'000'000);
    REQUIRE(is_yes(one));
    CHECK(rho.decode(witness(one)) == gamma.decode(6));
    CHECK_FALSE(is_yes(translate_one(gamma, rho, 200, 10)));
  }

  TEST_CASE("listing data reproduces tau and the naturals") {
    auto data = rational_listing_data();
    std::map<Code, Rational> memo;
    auto t = oracle::tau_table(1000);
    for (Code n = 0; n <= 1000; ++n) CHECK(listing_value(data, n, &memo) == R(t[n]));
    auto nat = natural_listing_data();
    for (Code n = 0; n <= 50; ++n) CHECK(listing_value(nat, n) == Nat(n));
  }

  TEST_CASE("universal listing alpha is correct for every presentation") {
    auto data = rational_listing_data();
    auto t = oracle::tau_table(200);
    for (auto rho : {rat_tau(), rat_pairs()}) {
      AlphaSolver<Rational> solver(data, rho, 100'000'000);
      for (Code n = 0; n <= 200; ++n) {
        auto a = solver.alpha(n);
        REQUIRE(is_yes(a));
        CHECK(rho.decode(witness(a)) == R(t[n]));
      }
    }
    auto starved = universal_listing_alpha(data, rat_pairs(), 200, 50);
    CHECK_FALSE(is_yes(starved));
  }

  TEST_CASE("graph pullback enumerates exactly the graph of a piece") {
    auto data = rational_listing_data();
    auto rho = rat_tau();
    for (const auto& piece : data.pieces) {
      auto got = graph_pullback_enumerate(piece, rho, 3000).drain();
      CHECK_FALSE(got.empty());
      for (const auto& x : got) {
        std::vector<Rational> args;
        for (std::size_t j = 1; j < x.size(); ++j) args.push_back(rho.decode(x[j]));
        auto v = piece.F(args);
        REQUIRE(v);
        CHECK(rho.decode(x[0]) == *v);
      }
    }
  }

  TEST_CASE("rho pullback covers the preimage of a computable map") {
    // X = {n : n even} seen through rat-pairs: f(n) = 2n.
    auto rho = rat_pairs();
    auto en = rho_pullback_enumerator(rho, 1, [](Code n) { return CodeTuple{2 * n}; }, 200000);
    auto got = en.drain();
    CHECK(got.size() > 10);
    for (const auto& x : got) {
      auto v = rho.decode(x[0]);
      bool in_image = false;
      for (Code n = 0; n < 2000 && !in_image; ++n) in_image = rho.decode(2 * n) == v;
      CHECK(in_image);
    }
  }

  TEST_CASE("transfer skips tuples outside the domain") {
    auto rho = int_zigzag();
    std::function<std::optional<Rational>(std::span<const Int>)> theta =
        [](std::span<const Int> xs) -> std::optional<Rational> {
      if (xs[1] == 0) return std::nullopt;
      return make_rational(xs[0], xs[1]);
    };
    auto tr = transfer_presentation<Int, Rational>(
        "q-from-z", rat_structure(), theta, 2, rho, [](Code k) { return tuple_decode_u64(k, 2); });
    for (Code n = 0; n < 200; ++n) {
      Rational v = tr.presentation.decode(n);
      CHECK(v == v);
    }
    CHECK_FALSE(tr.log->skipped.empty());
    auto c = tr.presentation.find_code(Rational(-3, 7), 100000);
    REQUIRE(c);
    CHECK(tr.presentation.decode(*c) == Rational(-3, 7));
  }

  TEST_CASE("structures evaluate their signatures") {
    auto q = rat_structure();
    CHECK(*q->apply("+", {Rational(1, 2), Rational(1, 3)}) == Rational(5, 6));
    CHECK(*q->apply("*", {Rational(2), Rational(1, 4)}) == Rational(1, 2));
    CHECK(q->relation("=", {Rational(1), parse_rational("2/2")}));
    CHECK(*q->constant("7") == 7);
    auto n = nat_structure();
    CHECK(*n->apply("+", {Nat(2), Nat(3)}) == 5);
    CHECK(n->signature.relation_arity("=") == 2u);
    CHECK_FALSE(n->signature.function_arity("-"));
  }

  TEST_CASE("F_p(t) presentation reaches every function it is asked for") {
    auto rho = fp_ratfun(3);
    auto x = ff::parse_ratfun("[1,2] / [2,0,1]", 3);
    auto c = rho.find_code(x, 10'000'000);
    REQUIRE(c);
    CHECK(rho.decode(*c) == x);
  }
}
