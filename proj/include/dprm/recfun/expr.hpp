#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "dprm/kernel/numbers.hpp"

namespace dprm::recfun {

enum class Kind { Zero, Succ, Proj, Compose, PrimRec, Mu };

class Expr;

struct Node {
  Kind kind;
  std::size_t arity;
  std::size_t index;  // projection coordinate, 0-based; unused otherwise
  std::vector<Expr> children;
};

// Immutable μ-recursive program. Construction goes through the factories,
// which enforce arity consistency, so every Expr value is well formed.
//
//   zero(k)            k-ary constant 0 (k may be 0)
//   succ()             x -> x + 1
//   proj(i, k)         (x_0..x_{k-1}) -> x_i
//   compose(g, hs)     x -> g(h_1(x), ..., h_m(x)); g has arity m >= 1
//   primrec(b, s)      f(0, x) = b(x); f(y+1, x) = s(y, f(y, x), x)
//   mu(g)              x -> least y with g(y, x) = 0, all probes halting
class Expr {
 public:
  static Expr zero(std::size_t arity);
  static Expr succ();
  static Expr proj(std::size_t index, std::size_t arity);
  static Expr compose(Expr outer, std::vector<Expr> inners);
  static Expr primrec(Expr base, Expr step);
  static Expr mu(Expr body);

  Kind kind() const { return node_->kind; }
  std::size_t arity() const { return node_->arity; }
  std::size_t index() const { return node_->index; }
  const std::vector<Expr>& children() const { return node_->children; }
  const Expr& child(std::size_t i) const { return node_->children.at(i); }
  const Node& node() const { return *node_; }

  // Number of AST nodes.
  std::size_t size() const;

  friend bool operator==(const Expr& a, const Expr& b);
  friend bool operator!=(const Expr& a, const Expr& b) { return !(a == b); }

 private:
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// The canonical everywhere-divergent program of the given arity:
// mu(compose(succ, [proj(0, arity + 1)])), whose body never returns 0.
Expr diverging(std::size_t arity);

}  // namespace dprm::recfun
