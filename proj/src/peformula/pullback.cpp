#include "dprm/peformula/interpretation.hpp"

#include <cctype>

namespace dprm::pe {

Formula instantiate(const FormulaDef& def, const std::vector<std::string>& names) {
  if (def.vars.size() != names.size()) {
    throw StructuralError("instantiate: expected " + std::to_string(def.vars.size()) + " variables, got " +
                          std::to_string(names.size()));
  }
  std::map<std::string, std::string> subst;
  for (std::size_t i = 0; i < names.size(); ++i) subst[def.vars[i]] = names[i];
  return rename_free(def.formula, subst);
}

namespace {

using Block = std::vector<std::string>;

bool is_numeral(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

class Puller {
 public:
  Puller(const InterpretationFormulas& theta, std::set<std::string> used) : theta_(theta), fresh_(std::move(used)) {}

  Block new_block(const std::string& stem) {
    Block b;
    for (std::size_t j = 0; j < theta_.rank; ++j) b.push_back(fresh_.next(stem));
    return b;
  }

  void domain_of(const Block& b, std::vector<Formula>& out) {
    if (theta_.domain) out.push_back(instantiate(*theta_.domain, b));
  }

  const FormulaDef& symbol(const std::string& name) {
    auto it = theta_.symbols.find(name);
    if (it == theta_.symbols.end()) throw StructuralError("interpretation has no formula for symbol '" + name + "'");
    return it->second;
  }

  // Returns the block naming the value of t, adding the fresh variables it
  // needed to `vars` and their defining conditions to `conds`.
  Block flatten(const Term& t, const std::map<std::string, Block>& env, std::vector<std::string>& vars,
                std::vector<Formula>& conds) {
    switch (t.kind()) {
      case TermKind::Var: {
        auto it = env.find(t.name());
        if (it == env.end()) throw StructuralError("pullback: unbound variable '" + t.name() + "'");
        return it->second;
      }
      case TermKind::Const: {
        if (!theta_.symbols.count(t.name()) && is_numeral(t.name()) && t.name() != "0" && t.name() != "1") {
          // n = 1 + 1 + ... + 1
          unsigned long n = std::stoul(t.name());
          if (n > 64) throw StructuralError("pullback: numeral too large to unfold");
          Term acc = Term::constant("1");
          for (unsigned long i = 1; i < n; ++i) acc = Term::app("+", {acc, Term::constant("1")});
          return flatten(acc, env, vars, conds);
        }
        Block b = new_block("c");
        vars.insert(vars.end(), b.begin(), b.end());
        domain_of(b, conds);
        conds.push_back(instantiate(symbol(t.name()), b));
        return b;
      }
      case TermKind::App: {
        Block all;
        for (const auto& a : t.args()) {
          Block ab = flatten(a, env, vars, conds);
          all.insert(all.end(), ab.begin(), ab.end());
        }
        Block b = new_block("f");
        vars.insert(vars.end(), b.begin(), b.end());
        domain_of(b, conds);
        all.insert(all.end(), b.begin(), b.end());
        conds.push_back(instantiate(symbol(t.name()), all));
        return b;
      }
    }
    return {};
  }

  Formula translate(const Formula& f, const std::map<std::string, Block>& env) {
    switch (f.kind()) {
      case FormulaKind::Atomic: {
        std::vector<std::string> vars;
        std::vector<Formula> conds;
        Block all;
        for (const auto& t : f.terms()) {
          Block b = flatten(t, env, vars, conds);
          all.insert(all.end(), b.begin(), b.end());
        }
        conds.push_back(instantiate(symbol(f.relation()), all));
        return Formula::exists_all(vars, Formula::conj_all(std::move(conds)));
      }
      case FormulaKind::And:
        return Formula::conj(translate(f.left(), env), translate(f.right(), env));
      case FormulaKind::Or:
        return Formula::disj(translate(f.left(), env), translate(f.right(), env));
      case FormulaKind::Exists: {
        Block b = new_block(f.var());
        auto inner = env;
        inner[f.var()] = b;
        std::vector<Formula> parts;
        domain_of(b, parts);
        parts.push_back(translate(f.body(), inner));
        return Formula::exists_all(b, Formula::conj_all(std::move(parts)));
      }
    }
    return f;
  }

 private:
  const InterpretationFormulas& theta_;
  FreshNames fresh_;
};

std::set<std::string> names_in(const InterpretationFormulas& theta, const FormulaDef& def) {
  std::set<std::string> used = all_vars(def.formula);
  used.insert(def.vars.begin(), def.vars.end());
  if (theta.domain) {
    auto d = all_vars(theta.domain->formula);
    used.insert(d.begin(), d.end());
  }
  for (const auto& [name, sd] : theta.symbols) {
    auto s = all_vars(sd.formula);
    used.insert(s.begin(), s.end());
  }
  return used;
}

}  // namespace

FormulaDef pullback(const FormulaDef& def, const InterpretationFormulas& theta) {
  Puller puller(theta, names_in(theta, def));
  std::map<std::string, Block> env;
  FormulaDef out{def.formula, {}};
  std::vector<Formula> parts;
  for (const auto& v : def.vars) {
    Block b = puller.new_block(v);
    env[v] = b;
    out.vars.insert(out.vars.end(), b.begin(), b.end());
    puller.domain_of(b, parts);
  }
  parts.push_back(puller.translate(def.formula, env));
  out.formula = Formula::conj_all(std::move(parts));
  return out;
}

InterpretationFormulas compose_formulas(const InterpretationFormulas& theta1, const InterpretationFormulas& theta2) {
  InterpretationFormulas z;
  z.rank = theta1.rank * theta2.rank;
  if (theta2.domain) {
    z.domain = pullback(*theta2.domain, theta1);
  } else if (theta1.domain) {
    // Only the block domains of theta1 remain.
    std::vector<std::string> vars;
    std::vector<Formula> parts;
    FreshNames fresh(all_vars(theta1.domain->formula));
    for (std::size_t b = 0; b < theta2.rank; ++b) {
      std::vector<std::string> block;
      for (std::size_t j = 0; j < theta1.rank; ++j) block.push_back(fresh.next("d"));
      parts.push_back(instantiate(*theta1.domain, block));
      vars.insert(vars.end(), block.begin(), block.end());
    }
    z.domain = FormulaDef{Formula::conj_all(std::move(parts)), vars};
  }
  for (const auto& [name, def] : theta2.symbols) z.symbols.insert_or_assign(name, pullback(def, theta1));
  return z;
}

InterpretationFormulas identity_formulas(const pres::Signature& sig) {
  InterpretationFormulas id;
  id.rank = 1;
  for (const auto& c : sig.constants) {
    id.symbols.insert_or_assign(c, FormulaDef{Formula::eq(Term::var("x"), Term::constant(c)), {"x"}});
  }
  for (const auto& f : sig.functions) {
    std::vector<std::string> vars;
    std::vector<Term> args;
    for (std::size_t i = 1; i <= f.arity; ++i) {
      vars.push_back("x" + std::to_string(i));
      args.push_back(Term::var(vars.back()));
    }
    vars.push_back("x" + std::to_string(f.arity + 1));
    id.symbols.insert_or_assign(f.name, FormulaDef{Formula::eq(Term::app(f.name, args), Term::var(vars.back())), vars});
  }
  for (const auto& r : sig.relations) {
    std::vector<std::string> vars;
    std::vector<Term> args;
    for (std::size_t i = 1; i <= r.arity; ++i) {
      vars.push_back("x" + std::to_string(i));
      args.push_back(Term::var(vars.back()));
    }
    id.symbols.insert_or_assign(r.name, FormulaDef{Formula::atomic(r.name, args), vars});
  }
  return id;
}

}  // namespace dprm::pe
