#include <functional>
#include <map>
#include <optional>

#include "doctest.h"
#include "dprm/kernel/pairing.hpp"
#include "dprm/recfun/eval.hpp"
#include "dprm/recfun/godel.hpp"
#include "dprm/recfun/library.hpp"
#include "dprm/recfun/listable.hpp"
#include "dprm/recfun/sexpr.hpp"
#include "oracles.hpp"

using namespace dprm;
using namespace dprm::recfun;

namespace {

using Native = std::function<std::optional<long>(const std::vector<long>&)>;

// Native meaning of every corpus program; nullopt marks divergence.
const std::map<std::string, Native>& natives() {
  static const std::map<std::string, Native> m = {
      {"id", [](auto& a) { return std::optional<long>(a[0]); }},
      {"succ", [](auto& a) { return std::optional<long>(a[0] + 1); }},
      {"zero", [](auto&) { return std::optional<long>(0); }},
      {"pred", [](auto& a) { return std::optional<long>(a[0] > 0 ? a[0] - 1 : 0); }},
      {"dbl", [](auto& a) { return std::optional<long>(2 * a[0]); }},
      {"add", [](auto& a) { return std::optional<long>(a[0] + a[1]); }},
      {"mul", [](auto& a) { return std::optional<long>(a[0] * a[1]); }},
      {"monus", [](auto& a) { return std::optional<long>(std::max(a[0] - a[1], 0L)); }},
      {"absdiff", [](auto& a) { return std::optional<long>(std::abs(a[0] - a[1])); }},
      {"sg", [](auto& a) { return std::optional<long>(a[0] ? 1 : 0); }},
      {"nsg", [](auto& a) { return std::optional<long>(a[0] ? 0 : 1); }},
      {"square", [](auto& a) { return std::optional<long>(a[0] * a[0]); }},
      {"half", [](auto& a) { return a[0] % 2 ? std::nullopt : std::optional<long>(a[0] / 2); }},
      {"exact-sqrt",
       [](auto& a) -> std::optional<long> {
         for (long y = 0; y * y <= a[0]; ++y)
           if (y * y == a[0]) return y;
         return std::nullopt;
       }},
      {"partial-sub", [](auto& a) { return a[0] >= a[1] ? std::optional<long>(a[0] - a[1]) : std::nullopt; }},
      {"never-zero", [](auto&) { return std::optional<long>(); }},
      {"ceil-sqrt",
       [](auto& a) {
         long y = 0;
         while (y * y < a[0]) ++y;
         return std::optional<long>(y);
       }},
      {"triangle", [](auto& a) { return std::optional<long>(a[0] * (a[0] + 1) / 2); }},
      {"exp2", [](auto& a) { return std::optional<long>(1L << a[0]); }},
      {"max", [](auto& a) { return std::optional<long>(std::max(a[0], a[1])); }},
  };
  return m;
}

std::vector<Nat> to_nats(const std::vector<long>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_SUITE("recfun") {
  TEST_CASE("corpus programs compute their native meaning") {
    auto corpus = lib::corpus();
    REQUIRE(corpus.size() == 20);
    oracle::Gen g(21);
    for (const auto& [name, prog] : corpus) {
      CAPTURE(name);
      REQUIRE(natives().count(name));
      for (int trial = 0; trial < 25; ++trial) {
        std::vector<long> args;
        for (std::size_t i = 0; i < prog.arity(); ++i) args.push_back(g.range(0, name == "exp2" ? 12 : 30));
        auto expect = natives().at(name)(args);
        auto got = eval(prog, to_nats(args), 2'000'000);
        CAPTURE(args);
        if (expect) {
          REQUIRE(halted(got));
          CHECK(value_of(got) == Nat(*expect));
        } else {
          CHECK_FALSE(halted(got));
        }
      }
    }
  }

  TEST_CASE("arity mismatch is structural") {
    CHECK_THROWS_AS(eval(lib::add(), {Nat(1)}, 100), StructuralError);
    CHECK_THROWS_AS(Expr::compose(lib::add(), {Expr::succ()}), StructuralError);
    CHECK_THROWS_AS(Expr::proj(2, 2), StructuralError);
    CHECK_THROWS_AS(Expr::primrec(Expr::zero(1), Expr::succ()), StructuralError);
  }

  TEST_CASE("budget exhaustion is an outcome and larger budgets agree") {
    auto f = lib::mul();
    auto small = eval(f, {Nat(20), Nat(20)}, 50);
    CHECK_FALSE(halted(small));
    CHECK(std::get<BudgetExhausted>(small).steps_used <= 50);
    auto big = eval(f, {Nat(20), Nat(20)}, 1'000'000);
    REQUIRE(halted(big));
    CHECK(value_of(big) == 400);
  }

  TEST_CASE("halting is monotone in the budget") {
    oracle::Gen g(22);
    for (const auto& [name, prog] : lib::corpus()) {
      std::vector<Nat> args;
      for (std::size_t i = 0; i < prog.arity(); ++i) args.push_back(g.range(0, 9));
      bool before = false;
      for (std::uint64_t b = 1; b <= 1 << 16; b *= 2) {
        bool now = halted(eval(prog, args, b));
        CHECK((!before || now));
        before = now;
      }
    }
  }

  TEST_CASE("mu returns the least zero of its body") {
    for (const auto& [name, prog] : lib::corpus()) {
      if (prog.kind() != Kind::Mu) continue;
      CAPTURE(name);
      const Expr& body = prog.child(0);
      for (long x = 0; x < 20; ++x) {
        std::vector<Nat> args(prog.arity(), Nat(x));
        if (prog.arity() == 2) args[1] = Nat(x / 3);
        auto r = eval(prog, args, 1'000'000);
        if (!halted(r)) continue;
        Nat y = value_of(r);
        std::vector<Nat> bargs{y};
        bargs.insert(bargs.end(), args.begin(), args.end());
        auto at = eval(body, bargs, 1'000'000);
        REQUIRE(halted(at));
        CHECK(value_of(at) == 0);
        for (Nat j = 0; j < y; ++j) {
          bargs[0] = j;
          auto b = eval(body, bargs, 1'000'000);
          REQUIRE(halted(b));
          CHECK(value_of(b) != 0);
        }
      }
    }
  }

  TEST_CASE("godel codes round-trip and encode the documented layout") {
    CHECK(godel_encode(Expr::succ()) == cantor_pair(Nat(2), Nat(0)));
    CHECK(godel_encode(Expr::zero(3)) == cantor_pair(Nat(1), Nat(3)));
    CHECK(godel_encode(Expr::proj(1, 2)) == cantor_pair(Nat(3), cantor_pair(Nat(1), Nat(2))));
    for (const auto& [name, prog] : lib::corpus()) {
      auto back = godel_try_decode(godel_encode(prog));
      REQUIRE(back);
      CHECK(*back == prog);
    }
  }

  TEST_CASE("total decoding falls back to the divergent program") {
    std::size_t valid = 0;
    for (std::uint64_t n = 0; n < 2000; ++n) {
      auto strict = godel_try_decode(Nat(n));
      Expr total = godel_decode(Nat(n));
      if (strict) {
        ++valid;
        CHECK(godel_encode(*strict) == Nat(n));
        CHECK(total == *strict);
      } else {
        CHECK(total == diverging(1));
      }
    }
    CHECK(valid > 0);
    CHECK(godel_decode(godel_encode(lib::add()), 1) == diverging(1));
  }

  TEST_CASE("universal evaluation matches direct evaluation at matched budgets") {
    oracle::Gen g(23);
    for (const auto& [name, prog] : lib::corpus()) {
      Nat e = godel_encode(prog);
      for (int trial = 0; trial < 10; ++trial) {
        std::vector<Nat> args;
        for (std::size_t i = 0; i < prog.arity(); ++i) args.push_back(g.range(0, 12));
        std::uint64_t b = 1 + g.below(5000);
        auto d = eval(prog, args, b);
        auto u = eval_universal(e, args, b + prog.size());
        REQUIRE(halted(d) == halted(u));
        if (halted(d)) CHECK(value_of(d) == value_of(u));
      }
    }
  }

  TEST_CASE("halting prefix grows monotonically with fuel") {
    std::vector<std::uint64_t> prev;
    for (std::uint64_t f = 500; f <= 8000; f *= 2) {
      auto got = halting_prefix(f).drain();
      REQUIRE(got.size() >= prev.size());
      CHECK(std::equal(prev.begin(), prev.end(), got.begin()));
      for (auto x : got) CHECK(halted(eval_universal(Nat(x), {Nat(x)}, 1'000'000)));
      prev = got;
    }
    CHECK_FALSE(prev.empty());
  }

  TEST_CASE("s-expressions round-trip") {
    for (const auto& [name, prog] : lib::corpus()) CHECK(parse_sexpr(to_sexpr(prog)) == prog);
    CHECK(parse_sexpr("(comp add (proj 0 1) (proj 0 1)) ; doubling") == lib::dbl());
    CHECK(parse_sexpr("mul") == lib::mul());
    CHECK_THROWS_AS(parse_sexpr("(comp succ"), ParseError);
    CHECK_THROWS_AS(parse_sexpr("(frob 1)"), ParseError);
  }

  TEST_CASE("listable sets") {
    auto evens = ListableSet::domain_of(lib::half());
    auto got = evens.enumerate(20000).drain();
    std::set<Tuple> s(got.begin(), got.end());
    CHECK(s.size() == got.size());
    for (long x = 0; x <= 4; x += 2) CHECK(s.count(Tuple{Nat(x)}));
    for (const auto& t : got) CHECK(t[0] % 2 == 0);

    auto squares = ListableSet::image_of({lib::square()});
    std::set<Nat> sqs;
    for (auto& t : squares.enumerate(20000).drain()) {
      Nat r = sqrt(t[0]);
      CHECK(r * r == t[0]);
      sqs.insert(t[0]);
    }
    for (long v : {0, 1, 4, 9}) CHECK(sqs.count(Nat(v)));

    auto a = ListableSet::from_list(1, {{Nat(1)}, {Nat(2)}, {Nat(3)}});
    auto b = ListableSet::from_list(1, {{Nat(2)}, {Nat(3)}, {Nat(4)}});
    auto un = set_union(a, b).enumerate(1000).drain();
    CHECK(std::set<Tuple>(un.begin(), un.end()).size() == 4);
    auto in = set_intersect(a, b).enumerate(1000).drain();
    CHECK(std::set<Tuple>(in.begin(), in.end()) == std::set<Tuple>{{Nat(2)}, {Nat(3)}});
    auto pr = set_product(a, b).enumerate(10000).drain();
    CHECK(pr.size() == 9);
    auto proj = set_project(set_product(a, b), {1}).enumerate(10000).drain();
    CHECK(std::set<Tuple>(proj.begin(), proj.end()).size() == 3);
    auto img = set_image({lib::dbl()}, a).enumerate(10000).drain();
    CHECK(std::set<Tuple>(img.begin(), img.end()) == std::set<Tuple>{{Nat(2)}, {Nat(4)}, {Nat(6)}});
    auto pre = set_preimage({lib::square()}, ListableSet::from_list(1, {{Nat(9)}, {Nat(7)}})).enumerate(20000).take(1);
    REQUIRE(pre.size() == 1);
    CHECK(pre[0][0] == 3);
  }
}
