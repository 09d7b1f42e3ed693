#include "dprm/recfun/sexpr.hpp"

#include <cctype>
#include <vector>

#include "dprm/recfun/library.hpp"

namespace dprm::recfun {
namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse_all() {
    Expr e = parse_expr();
    skip();
    if (pos_ != text_.size()) throw ParseError("trailing input", pos_);
    return e;
  }

 private:
  void skip() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::string atom() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == ';') break;
      ++pos_;
    }
    if (start == pos_) throw ParseError("expected atom", pos_);
    return std::string(text_.substr(start, pos_ - start));
  }

  std::size_t number() {
    std::size_t at = pos_;
    std::string s = atom();
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("expected number", at);
    }
    if (s.size() > 9) throw ParseError("number too large", at);
    return static_cast<std::size_t>(std::stoul(s));
  }

  void expect(char c) {
    skip();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
    ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  Expr parse_expr() {
    skip();
    std::size_t at = pos_;
    if (!peek('(')) {
      std::string name = atom();
      auto e = lib::lookup(name);
      if (!e) throw ParseError("unknown program name '" + name + "'", at);
      return *e;
    }
    expect('(');
    std::size_t head_at = pos_;
    std::string head = atom();
    try {
      if (head == "zero") {
        std::size_t k = number();
        expect(')');
        return Expr::zero(k);
      }
      if (head == "succ") {
        expect(')');
        return Expr::succ();
      }
      if (head == "proj") {
        std::size_t i = number();
        std::size_t k = number();
        expect(')');
        return Expr::proj(i, k);
      }
      if (head == "comp") {
        Expr g = parse_expr();
        std::vector<Expr> hs;
        while (!peek(')')) {
          if (pos_ >= text_.size()) throw ParseError("unterminated comp", pos_);
          hs.push_back(parse_expr());
        }
        expect(')');
        return Expr::compose(g, std::move(hs));
      }
      if (head == "prec") {
        Expr b = parse_expr();
        Expr s = parse_expr();
        expect(')');
        return Expr::primrec(b, s);
      }
      if (head == "mu") {
        Expr b = parse_expr();
        expect(')');
        return Expr::mu(b);
      }
    } catch (const StructuralError& e) {
      throw ParseError(e.what(), at);
    }
    throw ParseError("unknown form '" + head + "'", head_at);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse_sexpr(std::string_view text) { return Parser(text).parse_all(); }

std::string to_sexpr(const Expr& f) {
  switch (f.kind()) {
    case Kind::Zero:
      return "(zero " + std::to_string(f.arity()) + ")";
    case Kind::Succ:
      return "(succ)";
    case Kind::Proj:
      return "(proj " + std::to_string(f.index()) + " " + std::to_string(f.arity()) + ")";
    case Kind::Compose: {
      std::string s = "(comp";
      for (const auto& c : f.children()) s += " " + to_sexpr(c);
      return s + ")";
    }
    case Kind::PrimRec:
      return "(prec " + to_sexpr(f.child(0)) + " " + to_sexpr(f.child(1)) + ")";
    case Kind::Mu:
      return "(mu " + to_sexpr(f.child(0)) + ")";
  }
  return "";
}

}  // namespace dprm::recfun
