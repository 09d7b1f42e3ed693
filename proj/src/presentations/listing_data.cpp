#include "dprm/presentations/universal_listing.hpp"

namespace dprm::pres {

ListingData<Rational> rational_listing_data() {
  ListingData<Rational> d;
  d.name = "rational";
  d.c = 2;
  d.seeds = {Rational(0), Rational(1), Rational(-1)};
  d.part = [](Code n) -> std::size_t {
    switch (n % 4) {
      case 3:
        return 0;
      case 0:
        return 1;
      default:
        return 2;
    }
  };
  d.pieces = {
      {"S", 1, [](Code n) { return std::vector<Code>{(n - 1) / 2}; },
       [](const std::vector<Rational>& a) -> std::optional<Rational> { return Rational(a[0] + 1); }},
      {"P", 1, [](Code n) { return std::vector<Code>{n / 2}; },
       [](const std::vector<Rational>& a) -> std::optional<Rational> { return Rational(a[0] - 1); }},
      {"R", 1, [](Code n) { return std::vector<Code>{n >= 2 ? n - 2 : 0}; },
       [](const std::vector<Rational>& a) -> std::optional<Rational> {
         if (a[0] == 0) return std::nullopt;
         return Rational(1 / a[0]);
       }},
  };
  return d;
}

ListingData<Nat> natural_listing_data() {
  ListingData<Nat> d;
  d.name = "natural";
  d.c = 0;
  d.seeds = {Nat(0)};
  d.part = [](Code) -> std::size_t { return 0; };
  d.pieces = {
      {"S", 1, [](Code n) { return std::vector<Code>{n - 1}; },
       [](const std::vector<Nat>& a) -> std::optional<Nat> { return Nat(a[0] + 1); }},
  };
  return d;
}

}  // namespace dprm::pres
