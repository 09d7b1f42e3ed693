#include "dprm/peformula/parser.hpp"

#include <cctype>
#include <optional>

namespace dprm::pe {
namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::set<std::string>& constants)
      : s_(text), constants_(constants) {}

  Formula formula_all() {
    Formula f = disj();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return f;
  }

  Term term_all() {
    Term t = term();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) { throw SyntaxError(msg, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool at(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool eat(char c) {
    if (!at(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!eat(c)) {
      if (pos_ >= s_.size()) fail(std::string("expected '") + c + "' but input ended");
      fail(std::string("expected '") + c + "', found '" + s_[pos_] + "'");
    }
  }

  static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  // Identifier at the cursor without consuming it.
  std::string peek_ident() {
    skip();
    std::size_t p = pos_;
    if (p >= s_.size() || !ident_start(s_[p])) return {};
    while (p < s_.size() && ident_char(s_[p])) ++p;
    return std::string(s_.substr(pos_, p - pos_));
  }

  std::string ident() {
    std::string id = peek_ident();
    if (id.empty()) fail("expected identifier");
    pos_ += id.size();
    return id;
  }

  Formula disj() {
    Formula f = conj();
    while (eat('|')) f = Formula::disj(f, conj());
    return f;
  }

  Formula conj() {
    Formula f = unit();
    while (eat('&')) f = Formula::conj(f, unit());
    return f;
  }

  Formula unit() {
    skip();
    if (pos_ >= s_.size()) fail("expected formula but input ended");
    std::string id = peek_ident();
    if (id == "E") {
      pos_ += 1;
      std::string v = ident();
      if (v == "E") fail("'E' cannot be used as a variable");
      expect('.');
      return Formula::exists(v, disj());
    }
    if (at('(')) {
      std::size_t save = pos_;
      std::optional<SyntaxError> first;
      try {
        ++pos_;
        Formula f = disj();
        expect(')');
        skip();
        bool continues_term = pos_ < s_.size() && (s_[pos_] == '=' || s_[pos_] == '+' || s_[pos_] == '*');
        if (!continues_term) return f;
      } catch (const SyntaxError& e) {
        first = e;
      }
      pos_ = save;
      try {
        return atom();
      } catch (const SyntaxError& e) {
        // Report whichever reading got further into the input.
        if (first && first->position() > e.position()) throw *first;
        throw;
      }
    }
    if (!id.empty()) {
      std::size_t save = pos_;
      pos_ += id.size();
      if (at('(')) {
        ++pos_;
        std::vector<Term> ts{term()};
        while (eat(',')) ts.push_back(term());
        expect(')');
        return Formula::atomic(id, std::move(ts));
      }
      pos_ = save;
    }
    return atom();
  }

  Formula atom() {
    Term l = term();
    expect('=');
    Term r = term();
    return Formula::eq(l, r);
  }

  Term term() {
    Term t = product();
    while (eat('+')) t = Term::app("+", {t, product()});
    return t;
  }

  Term product() {
    Term t = factor();
    while (eat('*')) t = Term::app("*", {t, factor()});
    return t;
  }

  Term factor() {
    skip();
    if (pos_ >= s_.size()) fail("expected term but input ended");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Term t = term();
      expect(')');
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Term::constant(std::string(s_.substr(start, pos_ - start)));
    }
    if (ident_start(c)) {
      std::string id = peek_ident();
      if (id == "E") fail("'E' is reserved for the existential quantifier");
      pos_ += id.size();
      if (constants_.count(id)) return Term::constant(id);
      return Term::var(id);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  const std::set<std::string>& constants_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text, const std::set<std::string>& constants) {
  return Parser(text, constants).formula_all();
}

Term parse_term(std::string_view text, const std::set<std::string>& constants) {
  return Parser(text, constants).term_all();
}

}  // namespace dprm::pe
