#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace dprm::pe {

enum class TermKind { Var, Const, App };

class Term {
 public:
  static Term var(std::string name);
  static Term constant(std::string name);
  static Term app(std::string fn, std::vector<Term> args);

  TermKind kind() const { return node_->kind; }
  const std::string& name() const { return node_->name; }
  const std::vector<Term>& args() const { return node_->args; }

  friend bool operator==(const Term& a, const Term& b);
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

 private:
  struct Node {
    TermKind kind;
    std::string name;
    std::vector<Term> args;
  };
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

enum class FormulaKind { Atomic, And, Or, Exists };

// Positive-existential formulas. There is deliberately no negation and no
// universal quantifier.
class Formula {
 public:
  static Formula atomic(std::string relation, std::vector<Term> terms);
  static Formula eq(Term lhs, Term rhs) { return atomic("=", {std::move(lhs), std::move(rhs)}); }
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula exists(std::string var, Formula body);
  // Right fold; a single element is returned unchanged. Throws on empty.
  static Formula conj_all(std::vector<Formula> parts);
  static Formula exists_all(const std::vector<std::string>& vars, Formula body);

  FormulaKind kind() const { return node_->kind; }
  const std::string& relation() const { return node_->name; }  // Atomic
  const std::string& var() const { return node_->name; }       // Exists
  const std::vector<Term>& terms() const { return node_->terms; }
  const Formula& left() const { return node_->children.at(0); }
  const Formula& right() const { return node_->children.at(1); }
  const Formula& body() const { return node_->children.at(0); }

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

 private:
  struct Node {
    FormulaKind kind;
    std::string name;
    std::vector<Term> terms;
    std::vector<Formula> children;
  };
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

std::string print(const Term& t);
std::string print(const Formula& f);

// Free variables in natural order (x2 before x10).
std::vector<std::string> free_vars(const Formula& f);
void collect_vars(const Term& t, std::set<std::string>& out);
// Every variable name occurring anywhere, bound or free.
std::set<std::string> all_vars(const Formula& f);

bool natural_less(const std::string& a, const std::string& b);

// Simultaneous substitution of free variables by variables. Bound variables
// that would capture a substituted name are renamed first.
Formula rename_free(const Formula& f, const std::map<std::string, std::string>& subst);
Term rename_vars(const Term& t, const std::map<std::string, std::string>& subst);

// Fresh variable names "w<k>" avoiding a growing set of used names.
class FreshNames {
 public:
  explicit FreshNames(std::set<std::string> used = {}) : used_(std::move(used)) {}
  std::string next(const std::string& stem = "w");
  void reserve(const std::string& name) { used_.insert(name); }
  void reserve(const std::set<std::string>& names) { used_.insert(names.begin(), names.end()); }

 private:
  std::set<std::string> used_;
  std::size_t counter_ = 0;
};

// Prenex form: bound variables renamed apart (outermost first) and the
// quantifier-free matrix.
struct Prenex {
  std::vector<std::string> bound;
  Formula matrix;
};
Prenex to_prenex(const Formula& f);

}  // namespace dprm::pe
