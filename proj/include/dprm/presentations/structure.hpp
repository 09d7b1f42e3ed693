#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dprm/kernel/numbers.hpp"

namespace dprm::pres {

struct SymbolInfo {
  std::string name;
  std::size_t arity;
};

// Relations always include binary "=".
struct Signature {
  std::vector<std::string> constants;
  std::vector<SymbolInfo> functions;
  std::vector<SymbolInfo> relations;

  std::optional<std::size_t> function_arity(const std::string& name) const;
  std::optional<std::size_t> relation_arity(const std::string& name) const;
  bool has_constant(const std::string& name) const;
};

Signature make_signature(std::vector<std::string> constants, std::vector<SymbolInfo> functions,
                         std::vector<SymbolInfo> extra_relations = {});

// Computable model of a signature over canonical element representations T.
// constant() also accepts decimal numerals when the structure has them.
// apply() returns nullopt for undefined values (a partial operation).
template <class T>
struct Structure {
  std::string name;
  Signature signature;
  std::function<std::optional<T>(const std::string&)> constant;
  std::function<std::optional<T>(const std::string&, const std::vector<T>&)> apply;
  std::function<bool(const std::string&, const std::vector<T>&)> relation;
  std::function<std::string(const T&)> show;
};

template <class T>
using StructurePtr = std::shared_ptr<const Structure<T>>;

// (N; 0, 1, +, *, =), (Z; 0, 1, +, *, =), (Q; 0, 1, +, *, =).
StructurePtr<Nat> nat_structure();
StructurePtr<Int> int_structure();
StructurePtr<Rational> rat_structure();

}  // namespace dprm::pres
