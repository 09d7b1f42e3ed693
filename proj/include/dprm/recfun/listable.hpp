#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "dprm/kernel/enumerator.hpp"
#include "dprm/kernel/numbers.hpp"
#include "dprm/recfun/expr.hpp"

namespace dprm::recfun {

using Tuple = std::vector<Nat>;

// A listable subset of N^r, held as a recipe for fresh enumerators. Every
// enumerator produced by enumerate() emits each member at most once, in a
// deterministic order, one unit of fuel per internal step.
class ListableSet {
 public:
  using Factory = std::function<Enumerator<Tuple>(std::uint64_t fuel)>;

  // Inputs on which f halts; dovetailed over (input code, stage budget).
  static ListableSet domain_of(Expr f);
  // Image of N^k under the tuple (f_1, ..., f_m) of k-ary programs.
  static ListableSet image_of(std::vector<Expr> fs);
  // Any enumerator recipe; duplicates it emits are removed.
  static ListableSet explicit_set(std::size_t arity, Factory factory);
  static ListableSet from_list(std::size_t arity, std::vector<Tuple> items);

  std::size_t arity() const { return arity_; }
  Enumerator<Tuple> enumerate(std::uint64_t fuel) const;

 private:
  ListableSet(std::size_t arity, Factory f) : arity_(arity), make_(std::move(f)) {}
  std::size_t arity_;
  Factory make_;
};

ListableSet set_union(const ListableSet& a, const ListableSet& b);
ListableSet set_intersect(const ListableSet& a, const ListableSet& b);
ListableSet set_product(const ListableSet& a, const ListableSet& b);
// Keeps the listed coordinates in the listed order; covers projections and
// permutations.
ListableSet set_project(const ListableSet& a, const std::vector<std::size_t>& coords);

// f(X) and f^{-1}(B) for f = (f_1, ..., f_m), each f_i of arity arity(X)
// (resp. with m = arity(B)). Budget exhaustion inside f only delays items.
ListableSet set_image(const std::vector<Expr>& fs, const ListableSet& x);
ListableSet set_preimage(const std::vector<Expr>& fs, const ListableSet& b);

}  // namespace dprm::recfun
