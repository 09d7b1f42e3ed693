#include "dprm/presentations/structure.hpp"

#include <algorithm>
#include <cctype>

namespace dprm::pres {

std::optional<std::size_t> Signature::function_arity(const std::string& name) const {
  for (const auto& f : functions) {
    if (f.name == name) return f.arity;
  }
  return std::nullopt;
}

std::optional<std::size_t> Signature::relation_arity(const std::string& name) const {
  for (const auto& r : relations) {
    if (r.name == name) return r.arity;
  }
  return std::nullopt;
}

bool Signature::has_constant(const std::string& name) const {
  return std::find(constants.begin(), constants.end(), name) != constants.end();
}

Signature make_signature(std::vector<std::string> constants, std::vector<SymbolInfo> functions,
                         std::vector<SymbolInfo> extra_relations) {
  Signature s;
  s.constants = std::move(constants);
  s.functions = std::move(functions);
  s.relations.push_back({"=", 2});
  for (auto& r : extra_relations) s.relations.push_back(std::move(r));
  return s;
}

namespace {

bool is_numeral(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

template <class T>
StructurePtr<T> ring_structure(std::string name, std::function<std::string(const T&)> show) {
  auto s = std::make_shared<Structure<T>>();
  s->name = std::move(name);
  s->signature = make_signature({"0", "1"}, {{"+", 2}, {"*", 2}});
  s->constant = [](const std::string& c) -> std::optional<T> {
    if (is_numeral(c)) return T(Nat(c, 10));
    return std::nullopt;
  };
  s->apply = [](const std::string& f, const std::vector<T>& args) -> std::optional<T> {
    if (args.size() != 2) return std::nullopt;
    if (f == "+") return T(args[0] + args[1]);
    if (f == "*") return T(args[0] * args[1]);
    return std::nullopt;
  };
  s->relation = [](const std::string& r, const std::vector<T>& args) {
    return r == "=" && args.size() == 2 && args[0] == args[1];
  };
  s->show = std::move(show);
  return s;
}

}  // namespace

StructurePtr<Nat> nat_structure() {
  static auto s = ring_structure<Nat>("N", [](const Nat& v) { return to_string(v); });
  return s;
}

StructurePtr<Int> int_structure() {
  static auto s = ring_structure<Int>("Z", [](const Int& v) { return to_string(v); });
  return s;
}

StructurePtr<Rational> rat_structure() {
  static auto s = ring_structure<Rational>("Q", [](const Rational& v) { return to_string(v); });
  return s;
}

}  // namespace dprm::pres
