#include "dprm/peformula/builtin_interpretations.hpp"

#include "dprm/peformula/parser.hpp"
#include "dprm/presentations/structure.hpp"

namespace dprm::pe {

namespace {

FormulaDef def(const std::string& text, std::vector<std::string> vars) {
  return FormulaDef{parse_formula(text, {"0", "1"}), std::move(vars)};
}

}  // namespace

Interpretation<Nat, Int> nat_to_int() {
  Interpretation<Nat, Int> th;
  th.name = "nz";
  th.rank = 2;
  th.source = pres::nat_structure();
  th.target = pres::int_structure();
  InterpretationFormulas f;
  f.rank = 2;
  f.symbols.insert_or_assign("=", def("a1 + b2 = a2 + b1", {"a1", "b1", "a2", "b2"}));
  f.symbols.insert_or_assign("+", def("a1 + a2 + b3 = a3 + b1 + b2", {"a1", "b1", "a2", "b2", "a3", "b3"}));
  f.symbols.insert_or_assign("*", def("a1 * a2 + b1 * b2 + b3 = a3 + a1 * b2 + b1 * a2", {"a1", "b1", "a2", "b2", "a3", "b3"}));
  f.symbols.insert_or_assign("0", def("a = b", {"a", "b"}));
  f.symbols.insert_or_assign("1", def("a = b + 1", {"a", "b"}));
  th.formulas = std::move(f);
  th.map = [](std::span<const Nat> xs) -> std::optional<Int> { return Int(xs[0] - xs[1]); };
  return th;
}

Interpretation<Int, Nat> int_to_nat() {
  Interpretation<Int, Nat> th;
  th.name = "zn";
  th.rank = 1;
  th.source = pres::int_structure();
  th.target = pres::nat_structure();
  InterpretationFormulas f;
  f.rank = 1;
  f.domain = def("E a. E b. E c. E d. x = a * a + b * b + c * c + d * d", {"x"});
  f.symbols.insert_or_assign("=", def("x1 = x2", {"x1", "x2"}));
  f.symbols.insert_or_assign("+", def("x1 + x2 = x3", {"x1", "x2", "x3"}));
  f.symbols.insert_or_assign("*", def("x1 * x2 = x3", {"x1", "x2", "x3"}));
  f.symbols.insert_or_assign("0", def("x = 0", {"x"}));
  f.symbols.insert_or_assign("1", def("x = 1", {"x"}));
  th.formulas = std::move(f);
  th.map = [](std::span<const Int> xs) -> std::optional<Nat> {
    if (xs[0] < 0) return std::nullopt;
    return Nat(xs[0]);
  };
  return th;
}

Interpretation<Int, Rational> int_to_rat() {
  Interpretation<Int, Rational> th;
  th.name = "kappa-zq";
  th.rank = 2;
  th.source = pres::int_structure();
  th.target = pres::rat_structure();
  InterpretationFormulas f;
  f.rank = 2;
  f.domain = def("E c. E d. E e. E g. b * b = 1 + c * c + d * d + e * e + g * g", {"a", "b"});
  f.symbols.insert_or_assign("=", def("a1 * b2 = a2 * b1", {"a1", "b1", "a2", "b2"}));
  f.symbols.insert_or_assign("+", def("(a1 * b2 + a2 * b1) * b3 = a3 * b1 * b2", {"a1", "b1", "a2", "b2", "a3", "b3"}));
  f.symbols.insert_or_assign("*", def("a1 * a2 * b3 = a3 * b1 * b2", {"a1", "b1", "a2", "b2", "a3", "b3"}));
  f.symbols.insert_or_assign("0", def("a = 0", {"a", "b"}));
  f.symbols.insert_or_assign("1", def("a = b", {"a", "b"}));
  th.formulas = std::move(f);
  th.map = [](std::span<const Int> xs) -> std::optional<Rational> {
    if (xs[1] == 0) return std::nullopt;
    return make_rational(xs[0], xs[1]);
  };
  return th;
}

Interpretation<Rational, Int> rat_to_int_inclusion() {
  Interpretation<Rational, Int> th;
  th.name = "z-in-q";
  th.rank = 1;
  th.source = pres::rat_structure();
  th.target = pres::int_structure();
  th.map = [](std::span<const Rational> xs) -> std::optional<Int> {
    if (xs[0].get_den() != 1) return std::nullopt;
    return Int(xs[0].get_num());
  };
  return th;
}

std::vector<std::string> interpretation_names() { return {"nz", "zn", "kappa-zq", "z-in-q", "id"}; }

}  // namespace dprm::pe
