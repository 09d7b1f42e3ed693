#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

#include "dprm/peformula/formula.hpp"

namespace dprm::pe {

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(const std::string& msg, std::size_t pos)
      : std::runtime_error("syntax error at offset " + std::to_string(pos) + ": " + msg), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

// Grammar (whitespace-insensitive):
//   formula := conj ('|' conj)*
//   conj    := unit ('&' unit)*
//   unit    := 'E' var '.' formula | '(' formula ')' | rel '(' term (',' term)* ')'
//            | term '=' term
//   term    := prod ('+' prod)*
//   prod    := factor ('*' factor)*
//   factor  := ident | numeral | '(' term ')'
// 'E' is reserved. Numerals are constants; identifiers listed in
// `constants` are constants, all others are variables. A quantifier body
// extends as far right as possible.
Formula parse_formula(std::string_view text, const std::set<std::string>& constants = {});
Term parse_term(std::string_view text, const std::set<std::string>& constants = {});

}  // namespace dprm::pe
