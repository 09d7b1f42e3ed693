#include "dprm/peformula/formula.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace dprm::pe {

Term Term::var(std::string name) {
  return Term(std::make_shared<const Node>(Node{TermKind::Var, std::move(name), {}}));
}

Term Term::constant(std::string name) {
  return Term(std::make_shared<const Node>(Node{TermKind::Const, std::move(name), {}}));
}

Term Term::app(std::string fn, std::vector<Term> args) {
  return Term(std::make_shared<const Node>(Node{TermKind::App, std::move(fn), std::move(args)}));
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  return a.kind() == b.kind() && a.name() == b.name() && a.args() == b.args();
}

Formula Formula::atomic(std::string relation, std::vector<Term> terms) {
  return Formula(std::make_shared<const Node>(Node{FormulaKind::Atomic, std::move(relation), std::move(terms), {}}));
}

Formula Formula::conj(Formula a, Formula b) {
  return Formula(std::make_shared<const Node>(Node{FormulaKind::And, "", {}, {std::move(a), std::move(b)}}));
}

Formula Formula::disj(Formula a, Formula b) {
  return Formula(std::make_shared<const Node>(Node{FormulaKind::Or, "", {}, {std::move(a), std::move(b)}}));
}

Formula Formula::exists(std::string var, Formula body) {
  return Formula(std::make_shared<const Node>(Node{FormulaKind::Exists, std::move(var), {}, {std::move(body)}}));
}

Formula Formula::conj_all(std::vector<Formula> parts) {
  if (parts.empty()) throw std::invalid_argument("conj_all of nothing");
  Formula acc = parts.back();
  for (std::size_t i = parts.size() - 1; i-- > 0;) acc = conj(parts[i], acc);
  return acc;
}

Formula Formula::exists_all(const std::vector<std::string>& vars, Formula body) {
  for (std::size_t i = vars.size(); i-- > 0;) body = exists(vars[i], std::move(body));
  return body;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  return a.kind() == b.kind() && a.node_->name == b.node_->name && a.node_->terms == b.node_->terms &&
         a.node_->children == b.node_->children;
}

namespace {

bool is_app(const Term& t, const char* fn) { return t.kind() == TermKind::App && t.name() == fn; }

std::string wrap(const std::string& s) { return "(" + s + ")"; }

}  // namespace

std::string print(const Term& t) {
  switch (t.kind()) {
    case TermKind::Var:
    case TermKind::Const:
      return t.name();
    case TermKind::App:
      break;
  }
  const auto& a = t.args();
  if (a.size() == 2 && t.name() == "+") {
    std::string r = print(a[1]);
    return print(a[0]) + " + " + (is_app(a[1], "+") ? wrap(r) : r);
  }
  if (a.size() == 2 && t.name() == "*") {
    std::string l = print(a[0]);
    std::string r = print(a[1]);
    if (is_app(a[0], "+")) l = wrap(l);
    if (is_app(a[1], "+") || is_app(a[1], "*")) r = wrap(r);
    return l + " * " + r;
  }
  std::string s = t.name() + "(";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? ", " : "") + print(a[i]);
  return s + ")";
}

std::string print(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Atomic: {
      const auto& ts = f.terms();
      if (f.relation() == "=" && ts.size() == 2) return print(ts[0]) + " = " + print(ts[1]);
      std::string s = f.relation() + "(";
      for (std::size_t i = 0; i < ts.size(); ++i) s += (i ? ", " : "") + print(ts[i]);
      return s + ")";
    }
    case FormulaKind::And: {
      auto k = f.left().kind();
      std::string l = print(f.left());
      if (k == FormulaKind::Or || k == FormulaKind::Exists) l = wrap(l);
      k = f.right().kind();
      std::string r = print(f.right());
      if (k != FormulaKind::Atomic) r = wrap(r);
      return l + " & " + r;
    }
    case FormulaKind::Or: {
      std::string l = print(f.left());
      if (f.left().kind() == FormulaKind::Exists) l = wrap(l);
      auto k = f.right().kind();
      std::string r = print(f.right());
      if (k == FormulaKind::Or || k == FormulaKind::Exists) r = wrap(r);
      return l + " | " + r;
    }
    case FormulaKind::Exists: {
      std::string b = print(f.body());
      if (f.body().kind() != FormulaKind::Exists) b = wrap(b);
      return "E " + f.var() + ". " + b;
    }
  }
  return "";
}

bool natural_less(const std::string& a, const std::string& b) {
  auto split = [](const std::string& s) {
    std::size_t i = s.size();
    while (i > 0 && std::isdigit(static_cast<unsigned char>(s[i - 1]))) --i;
    return std::make_pair(s.substr(0, i), s.substr(i));
  };
  auto [pa, da] = split(a);
  auto [pb, db] = split(b);
  if (pa != pb) return pa < pb;
  // Compare digit suffixes numerically (shorter means smaller once leading
  // zeros are ignored), then fall back to the raw text.
  auto strip = [](const std::string& d) {
    std::size_t i = 0;
    while (i + 1 < d.size() && d[i] == '0') ++i;
    return d.substr(i);
  };
  std::string sa = strip(da), sb = strip(db);
  if (da.empty() != db.empty()) return da.empty();
  if (sa.size() != sb.size()) return sa.size() < sb.size();
  if (sa != sb) return sa < sb;
  return a < b;
}

void collect_vars(const Term& t, std::set<std::string>& out) {
  if (t.kind() == TermKind::Var) out.insert(t.name());
  for (const auto& a : t.args()) collect_vars(a, out);
}

namespace {

void free_into(const Formula& f, std::set<std::string>& bound, std::set<std::string>& out) {
  switch (f.kind()) {
    case FormulaKind::Atomic: {
      std::set<std::string> vs;
      for (const auto& t : f.terms()) collect_vars(t, vs);
      for (const auto& v : vs) {
        if (!bound.count(v)) out.insert(v);
      }
      return;
    }
    case FormulaKind::And:
    case FormulaKind::Or:
      free_into(f.left(), bound, out);
      free_into(f.right(), bound, out);
      return;
    case FormulaKind::Exists: {
      bool had = bound.count(f.var()) > 0;
      bound.insert(f.var());
      free_into(f.body(), bound, out);
      if (!had) bound.erase(f.var());
      return;
    }
  }
}

void all_into(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case FormulaKind::Atomic:
      for (const auto& t : f.terms()) collect_vars(t, out);
      return;
    case FormulaKind::And:
    case FormulaKind::Or:
      all_into(f.left(), out);
      all_into(f.right(), out);
      return;
    case FormulaKind::Exists:
      out.insert(f.var());
      all_into(f.body(), out);
      return;
  }
}

}  // namespace

std::vector<std::string> free_vars(const Formula& f) {
  std::set<std::string> bound, out;
  free_into(f, bound, out);
  std::vector<std::string> v(out.begin(), out.end());
  std::sort(v.begin(), v.end(), natural_less);
  return v;
}

std::set<std::string> all_vars(const Formula& f) {
  std::set<std::string> out;
  all_into(f, out);
  return out;
}

std::string FreshNames::next(const std::string& stem) {
  for (;;) {
    std::string name = stem + "_" + std::to_string(counter_++);
    if (used_.insert(name).second) return name;
  }
}

Term rename_vars(const Term& t, const std::map<std::string, std::string>& subst) {
  switch (t.kind()) {
    case TermKind::Var: {
      auto it = subst.find(t.name());
      return it == subst.end() ? t : Term::var(it->second);
    }
    case TermKind::Const:
      return t;
    case TermKind::App: {
      std::vector<Term> args;
      for (const auto& a : t.args()) args.push_back(rename_vars(a, subst));
      return Term::app(t.name(), std::move(args));
    }
  }
  return t;
}

namespace {

Formula rename_rec(const Formula& f, const std::map<std::string, std::string>& subst, FreshNames& fresh) {
  switch (f.kind()) {
    case FormulaKind::Atomic: {
      std::vector<Term> ts;
      for (const auto& t : f.terms()) ts.push_back(rename_vars(t, subst));
      return Formula::atomic(f.relation(), std::move(ts));
    }
    case FormulaKind::And:
      return Formula::conj(rename_rec(f.left(), subst, fresh), rename_rec(f.right(), subst, fresh));
    case FormulaKind::Or:
      return Formula::disj(rename_rec(f.left(), subst, fresh), rename_rec(f.right(), subst, fresh));
    case FormulaKind::Exists: {
      auto inner = subst;
      inner.erase(f.var());
      std::string v = f.var();
      bool captures = false;
      for (const auto& [from, to] : inner) {
        if (to == v) captures = true;
      }
      if (captures) {
        std::string nv = fresh.next(v);
        inner[v] = nv;
        v = nv;
      }
      return Formula::exists(v, rename_rec(f.body(), inner, fresh));
    }
  }
  return f;
}

}  // namespace

Formula rename_free(const Formula& f, const std::map<std::string, std::string>& subst) {
  std::set<std::string> used = all_vars(f);
  for (const auto& [from, to] : subst) used.insert(to);
  FreshNames fresh(used);
  return rename_rec(f, subst, fresh);
}

namespace {

Formula prenex_rec(const Formula& f, const std::map<std::string, std::string>& subst,
                   std::set<std::string>& taken, FreshNames& fresh, std::vector<std::string>& bound) {
  switch (f.kind()) {
    case FormulaKind::Atomic: {
      std::vector<Term> ts;
      for (const auto& t : f.terms()) ts.push_back(rename_vars(t, subst));
      return Formula::atomic(f.relation(), std::move(ts));
    }
    case FormulaKind::And: {
      Formula l = prenex_rec(f.left(), subst, taken, fresh, bound);
      return Formula::conj(l, prenex_rec(f.right(), subst, taken, fresh, bound));
    }
    case FormulaKind::Or: {
      Formula l = prenex_rec(f.left(), subst, taken, fresh, bound);
      return Formula::disj(l, prenex_rec(f.right(), subst, taken, fresh, bound));
    }
    case FormulaKind::Exists: {
      std::string name = f.var();
      if (taken.count(name)) name = fresh.next(f.var());
      taken.insert(name);
      bound.push_back(name);
      auto inner = subst;
      inner[f.var()] = name;
      return prenex_rec(f.body(), inner, taken, fresh, bound);
    }
  }
  return f;
}

}  // namespace

Prenex to_prenex(const Formula& f) {
  auto fv = free_vars(f);
  std::set<std::string> taken(fv.begin(), fv.end());
  FreshNames fresh(all_vars(f));
  std::vector<std::string> bound;
  Formula m = prenex_rec(f, {}, taken, fresh, bound);
  return {std::move(bound), std::move(m)};
}

}  // namespace dprm::pe
