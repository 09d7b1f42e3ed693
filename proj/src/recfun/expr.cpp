#include "dprm/recfun/expr.hpp"

#include <string>

namespace dprm::recfun {

Expr Expr::zero(std::size_t arity) {
  return Expr(std::make_shared<const Node>(Node{Kind::Zero, arity, 0, {}}));
}

Expr Expr::succ() { return Expr(std::make_shared<const Node>(Node{Kind::Succ, 1, 0, {}})); }

Expr Expr::proj(std::size_t index, std::size_t arity) {
  if (index >= arity) {
    throw StructuralError("proj index " + std::to_string(index) + " out of range for arity " +
                          std::to_string(arity));
  }
  return Expr(std::make_shared<const Node>(Node{Kind::Proj, arity, index, {}}));
}

Expr Expr::compose(Expr outer, std::vector<Expr> inners) {
  if (inners.empty()) throw StructuralError("compose needs at least one inner function");
  if (outer.arity() != inners.size()) {
    throw StructuralError("compose: outer arity " + std::to_string(outer.arity()) + " but " +
                          std::to_string(inners.size()) + " inner functions");
  }
  std::size_t k = inners.front().arity();
  for (const auto& h : inners) {
    if (h.arity() != k) throw StructuralError("compose: inner functions disagree on arity");
  }
  std::vector<Expr> children;
  children.reserve(inners.size() + 1);
  children.push_back(std::move(outer));
  for (auto& h : inners) children.push_back(std::move(h));
  return Expr(std::make_shared<const Node>(Node{Kind::Compose, k, 0, std::move(children)}));
}

Expr Expr::primrec(Expr base, Expr step) {
  std::size_t k = base.arity();
  if (step.arity() != k + 2) {
    throw StructuralError("primrec: step arity must be base arity + 2 (got " +
                          std::to_string(step.arity()) + " vs " + std::to_string(k) + ")");
  }
  return Expr(std::make_shared<const Node>(Node{Kind::PrimRec, k + 1, 0, {base, step}}));
}

Expr Expr::mu(Expr body) {
  if (body.arity() == 0) throw StructuralError("mu: body must have arity >= 1");
  std::size_t k = body.arity() - 1;
  return Expr(std::make_shared<const Node>(Node{Kind::Mu, k, 0, {body}}));
}

std::size_t Expr::size() const {
  std::size_t n = 1;
  for (const auto& c : node_->children) n += c.size();
  return n;
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.arity() != b.arity() || a.index() != b.index()) return false;
  if (a.children().size() != b.children().size()) return false;
  for (std::size_t i = 0; i < a.children().size(); ++i) {
    if (a.children()[i] != b.children()[i]) return false;
  }
  return true;
}

Expr diverging(std::size_t arity) {
  return Expr::mu(Expr::compose(Expr::succ(), {Expr::proj(0, arity + 1)}));
}

}  // namespace dprm::recfun
