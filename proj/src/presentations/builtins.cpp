#include "dprm/presentations/builtins.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>

#include "dprm/kernel/pairing.hpp"
#include "dprm/presentations/rational_listing.hpp"

namespace dprm::pres {
namespace {

std::optional<Code> fits(const Nat& v) {
  if (v < 0 || mpz_sizeinbase(v.get_mpz_t(), 2) > 64) return std::nullopt;
  return to_u64(v);
}

}  // namespace

Presentation<Nat> nat_id() {
  Presentation<Nat> p;
  p.name = "nat-id";
  p.structure = nat_structure();
  p.decode = [](Code n) { return from_u64(n); };
  p.find_code = [](const Nat& v, std::uint64_t) { return fits(v); };
  p.bijective = true;
  return p;
}

Presentation<Int> int_zigzag() {
  Presentation<Int> p;
  p.name = "int-zigzag";
  p.structure = int_structure();
  p.decode = [](Code n) { return zigzag(from_u64(n)); };
  p.find_code = [](const Int& v, std::uint64_t) { return fits(zigzag_inverse(v)); };
  p.bijective = true;
  return p;
}

Presentation<Int> int_pairs() {
  Presentation<Int> p;
  p.name = "int-pairs";
  p.structure = int_structure();
  p.decode = [](Code n) {
    auto [i, j] = cantor_unpair_u64(n);
    return Int(from_u64(i) - from_u64(j));
  };
  p.find_code = [](const Int& v, std::uint64_t) -> std::optional<Code> {
    Nat i = v > 0 ? Nat(v) : Nat(0);
    Nat j = v < 0 ? Nat(-v) : Nat(0);
    return fits(cantor_pair(i, j));
  };
  return p;
}

Presentation<Rational> rat_tau() {
  Presentation<Rational> p;
  p.name = "rat-tau";
  p.structure = rat_structure();
  p.decode = [](Code n) { return tau(from_u64(n)); };
  p.find_code = [](const Rational& v, std::uint64_t) { return fits(tau_inverse(v)); };
  p.bijective = true;
  return p;
}

Presentation<Rational> rat_pairs() {
  Presentation<Rational> p;
  p.name = "rat-pairs";
  p.structure = rat_structure();
  p.decode = [](Code n) {
    auto [i, j] = cantor_unpair_u64(n);
    return make_rational(zigzag(from_u64(i)), from_u64(j) + 1);
  };
  p.find_code = [](const Rational& v, std::uint64_t) -> std::optional<Code> {
    Nat i = zigzag_inverse(v.get_num());
    Nat j = Nat(v.get_den()) - 1;
    return fits(cantor_pair(i, j));
  };
  return p;
}

StructurePtr<ff::FpRatFun> fp_ratfun_structure(std::uint32_t p) {
  static std::mutex mu;
  static std::map<std::uint32_t, StructurePtr<ff::FpRatFun>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(p);
  if (it != cache.end()) return it->second;
  if (!ff::is_small_prime(p)) throw std::invalid_argument("fp-ratfun needs a prime, got " + std::to_string(p));
  auto s = std::make_shared<Structure<ff::FpRatFun>>();
  s->name = "F" + std::to_string(p) + "(t)";
  s->signature = make_signature({"0", "1", "t"}, {{"+", 2}, {"*", 2}});
  s->constant = [p](const std::string& c) -> std::optional<ff::FpRatFun> {
    if (c == "t") return ff::FpRatFun::t(p);
    if (!c.empty() && std::all_of(c.begin(), c.end(), [](unsigned char ch) { return std::isdigit(ch); })) {
      return ff::FpRatFun::constant(p, mpz_fdiv_ui(Nat(c, 10).get_mpz_t(), p));
    }
    return std::nullopt;
  };
  s->apply = [](const std::string& f, const std::vector<ff::FpRatFun>& a) -> std::optional<ff::FpRatFun> {
    if (a.size() != 2) return std::nullopt;
    if (f == "+") return a[0] + a[1];
    if (f == "*") return a[0] * a[1];
    return std::nullopt;
  };
  s->relation = [](const std::string& r, const std::vector<ff::FpRatFun>& a) {
    return r == "=" && a.size() == 2 && a[0] == a[1];
  };
  s->show = [](const ff::FpRatFun& f) { return f.pretty(); };
  cache[p] = s;
  return s;
}

Presentation<ff::FpRatFun> fp_ratfun(std::uint32_t p) {
  Presentation<ff::FpRatFun> out;
  out.name = "fp-ratfun:" + std::to_string(p);
  out.structure = fp_ratfun_structure(p);
  out.decode = [p](Code n) {
    auto [i, j] = cantor_unpair_u64(n);
    return ff::FpRatFun(ff::poly_from_digits(p, from_u64(i)), ff::monic_from_index(p, from_u64(j)));
  };
  out.find_code = [](const ff::FpRatFun& f, std::uint64_t) -> std::optional<Code> {
    return fits(cantor_pair(ff::poly_to_digits(f.num()), ff::monic_index(f.den())));
  };
  return out;
}

Code sigma_swap(Code n) { return n ^ 1u; }

}  // namespace dprm::pres
