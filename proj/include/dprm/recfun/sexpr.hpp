#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "dprm/recfun/expr.hpp"

namespace dprm::recfun {

// Surface syntax:
//   (zero k) (succ) (proj i k) (comp F G1 ... Gm) (prec B S) (mu B)
// A bare identifier names a library program (add, mul, pred, monus, ...).
// ';' starts a comment running to the end of the line.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at offset " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

Expr parse_sexpr(std::string_view text);
std::string to_sexpr(const Expr& f);

}  // namespace dprm::recfun
