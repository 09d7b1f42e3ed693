#include "dprm/recfun/library.hpp"

#include <functional>

namespace dprm::recfun::lib {
namespace {

Expr P(std::size_t i, std::size_t k) { return Expr::proj(i, k); }
Expr C(Expr g, std::vector<Expr> hs) { return Expr::compose(std::move(g), std::move(hs)); }

}  // namespace

Expr add() { return Expr::primrec(P(0, 1), C(Expr::succ(), {P(1, 3)})); }

Expr mul() { return Expr::primrec(Expr::zero(1), C(add(), {P(1, 3), P(2, 3)})); }

Expr pred() { return Expr::primrec(Expr::zero(0), P(0, 2)); }

Expr monus() {
  // m(y, x) = x - y by recursion on y, then swap the arguments.
  Expr m = Expr::primrec(P(0, 1), C(pred(), {P(1, 3)}));
  return C(m, {P(1, 2), P(0, 2)});
}

Expr absdiff() { return C(add(), {monus(), C(monus(), {P(1, 2), P(0, 2)})}); }

Expr sg() { return Expr::primrec(Expr::zero(0), C(Expr::succ(), {Expr::zero(2)})); }

Expr nsg() { return Expr::primrec(C(Expr::succ(), {Expr::zero(0)}), Expr::zero(2)); }

Expr dbl() { return C(add(), {P(0, 1), P(0, 1)}); }

Expr square() { return C(mul(), {P(0, 1), P(0, 1)}); }

Expr constant(unsigned long value, std::size_t arity) {
  Expr e = Expr::zero(arity);
  for (unsigned long i = 0; i < value; ++i) e = C(Expr::succ(), {e});
  return e;
}

Expr half() { return Expr::mu(C(absdiff(), {C(dbl(), {P(0, 2)}), P(1, 2)})); }

Expr exact_sqrt() { return Expr::mu(C(absdiff(), {C(square(), {P(0, 2)}), P(1, 2)})); }

Expr partial_sub() {
  return Expr::mu(C(absdiff(), {C(add(), {P(0, 3), P(2, 3)}), P(1, 3)}));
}

Expr double_equals_four() { return Expr::mu(C(absdiff(), {dbl(), constant(4, 1)})); }

Expr never_zero(std::size_t arity) { return Expr::mu(C(Expr::succ(), {P(0, arity + 1)})); }

namespace {

Expr ceil_sqrt() { return Expr::mu(C(monus(), {P(1, 2), C(square(), {P(0, 2)})})); }

Expr triangle() {
  return Expr::primrec(Expr::zero(0), C(add(), {P(1, 2), C(Expr::succ(), {P(0, 2)})}));
}

Expr exp2() { return Expr::primrec(C(Expr::succ(), {Expr::zero(0)}), C(dbl(), {P(1, 2)})); }

Expr maximum() { return C(add(), {P(0, 2), C(monus(), {P(1, 2), P(0, 2)})}); }

const std::map<std::string, std::function<Expr()>>& table() {
  static const std::map<std::string, std::function<Expr()>> t = {
      {"add", add},
      {"mul", mul},
      {"pred", pred},
      {"monus", monus},
      {"absdiff", absdiff},
      {"sg", sg},
      {"nsg", nsg},
      {"dbl", dbl},
      {"square", square},
      {"half", half},
      {"exact-sqrt", exact_sqrt},
      {"partial-sub", partial_sub},
      {"ceil-sqrt", ceil_sqrt},
      {"triangle", triangle},
      {"exp2", exp2},
      {"max", maximum},
  };
  return t;
}

}  // namespace

std::optional<Expr> lookup(const std::string& name) {
  auto it = table().find(name);
  if (it == table().end()) return std::nullopt;
  return it->second();
}

std::vector<std::string> names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : table()) out.push_back(k);
  return out;
}

std::vector<CorpusEntry> corpus() {
  return {
      {"id", P(0, 1)},
      {"succ", Expr::succ()},
      {"zero", Expr::zero(1)},
      {"pred", pred()},
      {"dbl", dbl()},
      {"add", add()},
      {"mul", mul()},
      {"monus", monus()},
      {"absdiff", absdiff()},
      {"sg", sg()},
      {"nsg", nsg()},
      {"square", square()},
      {"half", half()},
      {"exact-sqrt", exact_sqrt()},
      {"partial-sub", partial_sub()},
      {"never-zero", never_zero(1)},
      {"ceil-sqrt", ceil_sqrt()},
      {"triangle", triangle()},
      {"exp2", exp2()},
      {"max", maximum()},
  };
}

}  // namespace dprm::recfun::lib
