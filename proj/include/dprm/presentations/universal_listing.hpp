#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dprm/kernel/pairing.hpp"
#include "dprm/presentations/algorithms.hpp"
#include "dprm/presentations/presentation.hpp"

namespace dprm::pres {

// One branch of a recursive listing: for n in the branch,
// value(n) = F(value(h(n)_1), ..., value(h(n)_a)).
template <class T>
struct ListingPiece {
  std::string name;
  std::size_t arity;
  std::function<std::vector<Code>(Code)> h;
  std::function<std::optional<T>(const std::vector<T>&)> F;
};

// value(n) = seeds[n] for n <= c; otherwise pieces[part(n)] applies. The
// indices returned by h must be smaller than n.
template <class T>
struct ListingData {
  std::string name;
  Code c;
  std::vector<T> seeds;
  std::function<std::size_t(Code)> part;
  std::vector<ListingPiece<T>> pieces;
};

// The listing determined by the data, by direct recursion.
template <class T>
T listing_value(const ListingData<T>& data, Code n, std::map<Code, T>* memo = nullptr) {
  if (n <= data.c) return data.seeds.at(n);
  if (memo) {
    auto it = memo->find(n);
    if (it != memo->end()) return it->second;
  }
  const auto& piece = data.pieces.at(data.part(n));
  std::vector<T> args;
  for (Code m : piece.h(n)) {
    if (m >= n) throw StructuralError("listing data: h(n) must be smaller than n");
    args.push_back(listing_value(data, m, memo));
  }
  auto v = piece.F(args);
  if (!v) throw StructuralError("listing data: " + piece.name + " undefined at n = " + std::to_string(n));
  if (memo) memo->emplace(n, *v);
  return *v;
}

// Q instance: c = 2, seeds 0, 1, -1; S(x) = x + 1 on n = 3 mod 4 with
// h = (n-1)/2, P(x) = x - 1 on n = 0 mod 4 with h = n/2, R(x) = 1/x on
// n = 1, 2 mod 4 with h = n - 2. Its listing is tau.
ListingData<Rational> rational_listing_data();
// N instance: c = 0, seed 0, S on every n > 0 with h = n - 1.
ListingData<Nat> natural_listing_data();

// Literal enumeration of rho^*(graph of F) = {(x_0, x_1..x_a) : rho(x_0) =
// F(rho(x_1), ..., rho(x_a))} in order of the tuple code of (x_0, ..., x_a).
template <class T>
Enumerator<CodeTuple> graph_pullback_enumerate(const ListingPiece<T>& piece, const Presentation<T>& rho,
                                               std::uint64_t fuel) {
  auto cache = std::make_shared<DecodeCache<T>>(rho.decode);
  auto k = std::make_shared<Code>(0);
  std::size_t a = piece.arity;
  auto F = piece.F;
  return Enumerator<CodeTuple>(
      [cache, k, a, F]() {
        CodeTuple x = tuple_decode_u64((*k)++, a + 1);
        std::vector<T> args;
        for (std::size_t j = 1; j <= a; ++j) args.push_back((*cache)(x[j]));
        auto v = F(args);
        if (v && (*cache)(x[0]) == *v) return StepResult<CodeTuple>::emit(std::move(x));
        return StepResult<CodeTuple>::idle();
      },
      fuel);
}

// alpha with rho(alpha(n)) = listing_value(data, n), by course-of-values
// recursion: alpha(n) for n <= c comes from rho.find_code(seed), and for
// n > c it is the output coordinate of the first element of
// rho^*(graph F_i) whose input coordinates equal alpha(h(n)). Under the
// tuple-code order, for fixed inputs the codes grow with x_0, so that first
// element has the least x_0 with rho(x_0) = F_i(rho(alpha(h(n)))); the
// search scans x_0 = 0, 1, ... at one fuel unit per candidate.
template <class T>
class AlphaSolver {
 public:
  AlphaSolver(ListingData<T> data, Presentation<T> rho, std::uint64_t fuel)
      : data_(std::move(data)), rho_(std::move(rho)), cache_(rho_.decode), fuel_(fuel) {}

  SemiDecision<Code> alpha(Code n) {
    for (Code m = static_cast<Code>(memo_.size()); m <= n; ++m) {
      auto v = compute(m);
      if (!v) return Unknown{spent_};
      memo_.push_back(*v);
    }
    return Yes<Code>{memo_[n]};
  }

  std::uint64_t fuel_used() const { return spent_; }

 private:
  std::optional<Code> compute(Code n) {
    if (n <= data_.c) {
      if (spent_ >= fuel_) return std::nullopt;
      auto code = rho_.find_code(data_.seeds.at(n), fuel_ - spent_);
      ++spent_;
      return code;
    }
    const auto& piece = data_.pieces.at(data_.part(n));
    std::vector<T> args;
    for (Code m : piece.h(n)) {
      if (m >= n) throw StructuralError("listing data: h(n) must be smaller than n");
      args.push_back(cache_(memo_[m]));
    }
    auto target = piece.F(args);
    if (!target) throw StructuralError("listing data: " + piece.name + " undefined at n = " + std::to_string(n));
    for (Code x0 = 0;; ++x0) {
      if (spent_ >= fuel_) return std::nullopt;
      ++spent_;
      if (cache_(x0) == *target) return x0;
    }
  }

  ListingData<T> data_;
  Presentation<T> rho_;
  DecodeCache<T> cache_;
  std::uint64_t fuel_;
  std::uint64_t spent_ = 0;
  std::vector<Code> memo_;
};

template <class T>
SemiDecision<Code> universal_listing_alpha(const ListingData<T>& data, const Presentation<T>& rho, Code n,
                                           std::uint64_t fuel) {
  AlphaSolver<T> solver(data, rho, fuel);
  return solver.alpha(n);
}

}  // namespace dprm::pres
