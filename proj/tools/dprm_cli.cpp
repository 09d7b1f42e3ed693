#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <variant>

#include "dprm/ffdio/automata.hpp"
#include "dprm/ffdio/lacunary.hpp"
#include "dprm/ffdio/left_diophantine.hpp"
#include "dprm/ffdio/pheidas.hpp"
#include "dprm/ffdio/power_series.hpp"
#include "dprm/peformula/builtin_interpretations.hpp"
#include "dprm/peformula/four_squares.hpp"
#include "dprm/peformula/parser.hpp"
#include "dprm/peformula/search.hpp"
#include "dprm/presentations/algorithms.hpp"
#include "dprm/presentations/builtins.hpp"
#include "dprm/presentations/rational_listing.hpp"
#include "dprm/presentations/universal_listing.hpp"
#include "dprm/recfun/eval.hpp"
#include "dprm/recfun/godel.hpp"
#include "dprm/recfun/sexpr.hpp"

using json = nlohmann::ordered_json;
using namespace dprm;
using ff::FpRatFun;
using pres::Code;
using pres::Presentation;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitInternal = 3;
constexpr int kExitAllUnknown = 4;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Line-oriented output: one JSON object per line, or tab-separated values
// with --plain. Counts known and unknown search outcomes for the exit code.
class Emitter {
 public:
  explicit Emitter(bool plain) : plain_(plain) {}

  void header(const json& config) {
    if (plain_) {
      std::cout << "#";
      for (auto& [k, v] : config.items()) std::cout << ' ' << k << '=' << (v.is_string() ? v.get<std::string>() : v.dump());
      std::cout << '\n';
    } else {
      json h;
      h["record"] = "config";
      for (auto& [k, v] : config.items()) h[k] = v;
      std::cout << h.dump() << '\n';
    }
  }

  void row(const std::string& record, const json& fields) {
    if (plain_) {
      std::cout << record;
      for (auto& [k, v] : fields.items()) std::cout << '\t' << (v.is_string() ? v.get<std::string>() : v.dump());
      std::cout << '\n';
    } else {
      json r;
      r["record"] = record;
      for (auto& [k, v] : fields.items()) r[k] = v;
      std::cout << r.dump() << '\n';
    }
  }

  void known() { ++known_; }
  void unknown() { ++unknown_; }
  int exit_code() const { return (unknown_ > 0 && known_ == 0) ? kExitAllUnknown : 0; }

 private:
  bool plain_;
  int known_ = 0;
  int unknown_ = 0;
};

std::string read_text(const std::string& arg) {
  if (arg.empty() || arg[0] != '@') return arg;
  std::ifstream in(arg.substr(1));
  if (!in) throw ConfigError("cannot read file '" + arg.substr(1) + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\n");
  auto e = s.find_last_not_of(" \t\n");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

std::string show(const Int& v) { return to_string(v); }
std::string show(const Rational& v) { return to_string(v); }
std::string show(const FpRatFun& v) { return v.to_string(); }

template <class T>
json show_all(const std::vector<T>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(show(v));
  return a;
}

// ---- registries -----------------------------------------------------------

using AnyPres = std::variant<Presentation<Int>, Presentation<Rational>, Presentation<FpRatFun>>;

const std::vector<std::string> kPresentationNames = {"nat-id", "int-zigzag", "int-pairs", "rat-tau", "rat-pairs",
                                                     "fp-ratfun:<p>"};

AnyPres lookup_presentation(const std::string& name) {
  if (name == "nat-id") return pres::nat_id();
  if (name == "int-zigzag") return pres::int_zigzag();
  if (name == "int-pairs") return pres::int_pairs();
  if (name == "rat-tau") return pres::rat_tau();
  if (name == "rat-pairs") return pres::rat_pairs();
  if (name.rfind("fp-ratfun:", 0) == 0) {
    unsigned long p = 0;
    try {
      p = std::stoul(name.substr(10));
    } catch (const std::exception&) {
      throw ConfigError("bad prime in presentation name '" + name + "'");
    }
    if (!ff::is_small_prime(static_cast<std::uint32_t>(p))) throw ConfigError("'" + name + "': p must be a small prime");
    return pres::fp_ratfun(static_cast<std::uint32_t>(p));
  }
  std::string known;
  for (const auto& n : kPresentationNames) known += " " + n;
  throw ConfigError("unknown presentation '" + name + "' (known:" + known + ")");
}

template <class T>
T parse_value(const std::string& text, const Presentation<T>& rho);
template <>
Int parse_value(const std::string& text, const Presentation<Int>&) {
  return parse_int(trim(text));
}
template <>
Rational parse_value(const std::string& text, const Presentation<Rational>&) {
  return parse_rational(trim(text));
}
template <>
FpRatFun parse_value(const std::string& text, const Presentation<FpRatFun>& rho) {
  return ff::parse_ratfun(trim(text), rho.decode(0).prime());
}

using AnyInterp = std::variant<pe::Interpretation<Int, Int>, pe::Interpretation<Int, Rational>,
                               pe::Interpretation<Rational, Int>, pe::Interpretation<Rational, Rational>>;

struct InterpEntry {
  AnyInterp theta;
  AnyPres source;
};

InterpEntry lookup_interpretation(const std::string& name, const std::string& rho_name) {
  if (name == "nz") return {pe::nat_to_int(), pres::nat_id()};
  if (name == "zn") return {pe::int_to_nat(), pres::int_zigzag()};
  if (name == "kappa-zq") return {pe::int_to_rat(), pres::int_zigzag()};
  if (name == "z-in-q") return {pe::rat_to_int_inclusion(), pres::rat_tau()};
  if (name == "id") {
    AnyPres rho = lookup_presentation(rho_name);
    if (auto* pi = std::get_if<Presentation<Int>>(&rho)) {
      return {pe::identity_interpretation(pi->structure), rho};
    }
    if (auto* pq = std::get_if<Presentation<Rational>>(&rho)) {
      return {pe::identity_interpretation(pq->structure), rho};
    }
    throw ConfigError("interpretation 'id' supports integer and rational presentations only");
  }
  std::string known;
  for (const auto& n : pe::interpretation_names()) known += " " + n;
  throw ConfigError("unknown interpretation '" + name + "' (known:" + known + ")");
}

// ---- recursive functions ---------------------------------------------------

recfun::Expr program_from(const std::string& text, const std::string& code) {
  if (!code.empty()) return recfun::godel_decode(parse_int(code));
  if (text.empty()) throw ConfigError("--program or --code is required");
  try {
    return recfun::parse_sexpr(read_text(text));
  } catch (const recfun::ParseError& e) {
    throw ConfigError(std::string("--program: ") + e.what());
  }
}

int cmd_recfun_eval(Emitter& out, const std::string& program, const std::string& code, const std::string& args,
                    std::uint64_t fuel, bool universal) {
  recfun::Expr f = program_from(program, code);
  std::vector<Nat> xs;
  for (const auto& a : split(args, ',')) xs.push_back(parse_int(trim(a)));
  if (xs.size() != f.arity()) {
    throw ConfigError("program has arity " + std::to_string(f.arity()) + " but " + std::to_string(xs.size()) +
                      " arguments were given");
  }
  Budget b(fuel);
  auto r = universal ? recfun::eval_universal(recfun::godel_encode(f), xs, b) : recfun::eval(f, xs, b);
  json row;
  row["program"] = recfun::to_sexpr(f);
  row["godel"] = recfun::godel_encode(f).get_str();
  row["args"] = args;
  if (recfun::halted(r)) {
    row["status"] = "halted";
    row["value"] = recfun::value_of(r).get_str();
    out.known();
  } else {
    row["status"] = "unknown";
    out.unknown();
  }
  row["steps"] = b.used();
  out.row("result", row);
  return out.exit_code();
}

int cmd_halting(Emitter& out, std::uint64_t fuel) {
  auto e = recfun::halting_prefix(fuel);
  std::size_t i = 0;
  while (auto x = e.next()) {
    out.row("member", {{"index", i++}, {"code", *x}, {"program", recfun::to_sexpr(recfun::godel_decode(from_u64(*x), 1))}});
  }
  out.row("summary", {{"emitted", e.emitted()}, {"fuel_used", e.fuel_used()}});
  return 0;
}

// ---- rational listing -----------------------------------------------------

int cmd_tau(Emitter& out, std::uint64_t upto) {
  for (std::uint64_t n = 0; n <= upto; ++n) out.row("tau", {{"n", n}, {"tau", show(pres::tau(from_u64(n)))}});
  return 0;
}

int cmd_tau_inv(Emitter& out, const std::string& qs) {
  for (const auto& s : split(qs, ',')) {
    Rational q = parse_rational(trim(s));
    Nat n = pres::tau_inverse(q);
    out.row("tau_inverse", {{"q", show(q)}, {"n", n.get_str()}, {"check", pres::tau(n) == q ? "ok" : "mismatch"}});
  }
  return 0;
}

int cmd_cf_encode(Emitter& out, const std::string& qs) {
  for (const auto& s : split(qs, ',')) {
    Rational q = parse_rational(trim(s));
    if (q <= 0) throw ConfigError("cf-encode: '" + trim(s) + "' is not a positive rational");
    auto terms = pres::cf_terms(q);
    json t = json::array();
    for (const auto& a : terms) t.push_back(a.get_str());
    Nat code = pres::cf_encode(terms);
    out.row("cf", {{"q", show(q)}, {"terms", t}, {"code", code.get_str()},
                   {"check", pres::q_pos(code) == q ? "ok" : "mismatch"}});
  }
  return 0;
}

// ---- presentations --------------------------------------------------------

int cmd_bijectivize(Emitter& out, const std::string& rho_name, std::uint64_t count, std::uint64_t fuel) {
  AnyPres any = lookup_presentation(rho_name);
  return std::visit(
      [&](const auto& rho) {
        auto h = pres::bijectivize(rho, count, fuel);
        for (std::size_t x = 0; x < h.size(); ++x) {
          out.row("h", {{"x", x}, {"h", h[x]}, {"value", show(rho.decode(h[x]))}});
        }
        out.row("summary", {{"requested", count}, {"found", h.size()}});
        if (h.size() < count) {
          out.unknown();
        } else {
          out.known();
        }
        return out.exit_code();
      },
      any);
}

int cmd_equiv(Emitter& out, const std::string& gamma_name, const std::string& rho_name, std::uint64_t upto,
              std::uint64_t fuel, bool sigma) {
  AnyPres g_any = lookup_presentation(gamma_name);
  AnyPres r_any = lookup_presentation(rho_name);
  if (g_any.index() != r_any.index()) throw ConfigError("equiv: presentations of different structures");
  return std::visit(
      [&](const auto& gamma0) {
        using P = std::decay_t<decltype(gamma0)>;
        const P& rho = std::get<P>(r_any);
        P gamma = sigma ? pres::permuted(gamma0, pres::sigma_swap, pres::sigma_swap, gamma0.name + ".swap") : gamma0;
        auto phi = pres::find_translation(gamma, rho, upto, fuel);
        for (Code n = 0; n <= upto; ++n) {
          json row{{"n", n}, {"gamma", show(gamma.decode(n))}};
          if (phi[n]) {
            bool ok = rho.decode(*phi[n]) == gamma.decode(n);
            row["phi"] = *phi[n];
            row["rho_phi"] = show(rho.decode(*phi[n]));
            row["check"] = ok ? "ok" : "mismatch";
            if (!ok) throw std::logic_error("equiv: translation fails verification");
            out.known();
          } else {
            row["phi"] = nullptr;
            row["rho_phi"] = nullptr;
            row["check"] = "unknown";
            out.unknown();
          }
          out.row("translation", row);
        }
        return out.exit_code();
      },
      g_any);
}

int cmd_universal_listing(Emitter& out, const std::string& rho_name, std::uint64_t upto, std::uint64_t fuel) {
  AnyPres any = lookup_presentation(rho_name);
  auto run = [&](const auto& rho, const auto& data) {
    using T = std::decay_t<decltype(data.seeds[0])>;
    pres::AlphaSolver<T> solver(data, rho, fuel);
    std::map<Code, T> memo;
    for (Code n = 0; n <= upto; ++n) {
      auto a = solver.alpha(n);
      T expected = pres::listing_value(data, n, &memo);
      if (!pres::is_yes(a)) {
        out.row("alpha", {{"n", n}, {"alpha", nullptr}, {"listing", show(expected)}, {"check", "unknown"}});
        out.unknown();
        continue;
      }
      Code c = pres::witness(a);
      bool ok = rho.decode(c) == expected;
      if (!ok) throw std::logic_error("universal-listing: rho(alpha(n)) differs from the listing");
      out.row("alpha", {{"n", n}, {"alpha", c}, {"rho_alpha", show(rho.decode(c))}, {"listing", show(expected)},
                        {"check", "ok"}});
      out.known();
    }
    out.row("summary", {{"listing", data.name}, {"fuel_used", solver.fuel_used()}});
    return out.exit_code();
  };
  if (auto* pq = std::get_if<Presentation<Rational>>(&any)) return run(*pq, pres::rational_listing_data());
  if (auto* pi = std::get_if<Presentation<Int>>(&any)) return run(*pi, pres::natural_listing_data());
  throw ConfigError("universal-listing: no listing data for '" + rho_name + "'");
}

// ---- formulas -------------------------------------------------------------

template <class T>
std::set<std::string> constants_of(const Presentation<T>& rho) {
  const auto& c = rho.structure->signature.constants;
  return std::set<std::string>(c.begin(), c.end());
}

pe::Formula parse_formula_arg(const std::string& text, const std::set<std::string>& constants) {
  if (text.empty()) throw ConfigError("--formula is required");
  try {
    return pe::parse_formula(read_text(text), constants);
  } catch (const pe::SyntaxError& e) {
    throw ConfigError(std::string("--formula: ") + e.what());
  }
}

int cmd_pe_eval(Emitter& out, const std::string& rho_name, const std::string& formula, const std::string& assign,
                std::uint64_t fuel) {
  AnyPres any = lookup_presentation(rho_name);
  return std::visit(
      [&](const auto& rho) {
        using T = std::decay_t<decltype(rho.decode(0))>;
        pe::Formula phi = parse_formula_arg(formula, constants_of(rho));
        pe::Assignment<T> env;
        for (const auto& item : split(assign, ',')) {
          auto eq = item.find('=');
          if (eq == std::string::npos) throw ConfigError("--assign entries must look like name=value");
          env.insert_or_assign(trim(item.substr(0, eq)), parse_value<T>(item.substr(eq + 1), rho));
        }
        auto d = pe::satisfy_search(phi, rho, env, fuel);
        json row{{"formula", pe::print(phi)}};
        if (pres::is_yes(d)) {
          const auto& w = pres::witness(d);
          json wit = json::object();
          for (std::size_t i = 0; i < w.vars.size(); ++i) wit[w.vars[i]] = show(rho.decode(w.codes[i]));
          row["status"] = "yes";
          row["witness"] = wit;
          row["verified"] = pe::verify_witness(phi, rho, env, w);
          out.known();
        } else {
          row["status"] = "unknown";
          row["fuel_used"] = std::get<pres::Unknown>(d).fuel_used;
          out.unknown();
        }
        out.row("result", row);
        return out.exit_code();
      },
      any);
}

int cmd_pe_enumerate(Emitter& out, const std::string& rho_name, const std::string& formula, const std::string& vars,
                     std::uint64_t fuel, std::uint64_t limit) {
  AnyPres any = lookup_presentation(rho_name);
  return std::visit(
      [&](const auto& rho) {
        pe::Formula phi = parse_formula_arg(formula, constants_of(rho));
        std::vector<std::string> vs;
        for (const auto& v : split(vars, ',')) vs.push_back(trim(v));
        if (vs.empty()) vs = pe::free_vars(phi);
        auto e = pe::definable_prefix(phi, vs, rho, fuel);
        auto items = e.take(limit);
        for (const auto& tuple : items) out.row("tuple", {{"values", show_all(tuple)}});
        out.row("summary", {{"vars", vs}, {"emitted", items.size()}, {"fuel_used", e.fuel_used()}});
        return 0;
      },
      any);
}

json formulas_json(const pe::InterpretationFormulas& f) {
  json j;
  j["rank"] = f.rank;
  if (f.domain) {
    j["domain"] = {{"vars", f.domain->vars}, {"formula", pe::print(f.domain->formula)}};
  } else {
    j["domain"] = nullptr;
  }
  return j;
}

int cmd_compose(Emitter& out, const std::string& n1, const std::string& n2, const std::string& rho_name,
                const std::string& formula, const std::string& vars, std::uint64_t limit) {
  InterpEntry e1 = lookup_interpretation(n1, rho_name);
  InterpEntry e2 = lookup_interpretation(n2, rho_name);
  int rc = -1;
  std::visit(
      [&](const auto& t1, const auto& t2) {
        using S = typename std::decay_t<decltype(t1)>::source_type;
        using T1 = typename std::decay_t<decltype(t1)>::target_type;
        using T2 = typename std::decay_t<decltype(t2)>::source_type;
        if constexpr (!std::is_same_v<T1, T2>) {
          throw ConfigError("compose: target of '" + n1 + "' is not the source of '" + n2 + "'");
        } else {
          auto z = pe::compose_interpretations(t1, t2);
          out.row("interpretation", {{"name", z.name}, {"rank", z.rank}});
          if (z.formulas) {
            out.row("domain", formulas_json(*z.formulas));
            for (const auto& [sym, def] : z.formulas->symbols) {
              out.row("symbol", {{"symbol", sym}, {"vars", def.vars}, {"formula", pe::print(def.formula)}});
            }
            if (!formula.empty()) {
              std::set<std::string> cs{"0", "1"};
              pe::Formula phi = parse_formula_arg(formula, cs);
              std::vector<std::string> vs;
              for (const auto& v : split(vars, ',')) vs.push_back(trim(v));
              if (vs.empty()) vs = pe::free_vars(phi);
              auto pulled = pe::pullback(pe::FormulaDef{phi, vs}, *z.formulas);
              out.row("pullback", {{"vars", pulled.vars}, {"formula", pe::print(pulled.formula)}});
            }
          } else {
            out.row("domain", {{"rank", z.rank}, {"formulas", nullptr}});
          }
          const auto& rho = std::get<Presentation<S>>(e1.source);
          auto g = pe::graph_prefix(z, rho, limit * 64);
          for (const auto& [v, xs] : g.take(limit)) out.row("graph", {{"value", show(v)}, {"args", show_all(xs)}});
          rc = 0;
        }
      },
      e1.theta, e2.theta);
  return rc;
}

int cmd_graph(Emitter& out, const std::string& name, const std::string& rho_name, std::uint64_t fuel,
              std::uint64_t limit) {
  InterpEntry e = lookup_interpretation(name, rho_name);
  return std::visit(
      [&](const auto& theta) {
        using S = typename std::decay_t<decltype(theta)>::source_type;
        const auto& rho = std::get<Presentation<S>>(e.source);
        auto g = pe::graph_prefix(theta, rho, fuel);
        auto items = g.take(limit);
        for (const auto& [v, xs] : items) out.row("graph", {{"value", show(v)}, {"args", show_all(xs)}});
        out.row("summary", {{"interpretation", theta.name}, {"emitted", items.size()}, {"fuel_used", g.fuel_used()}});
        return 0;
      },
      e.theta);
}

int cmd_homotopy(Emitter& out, const std::string& n1, const std::string& n2, const std::string& rho_name,
                 std::uint64_t fuel, std::uint64_t limit) {
  InterpEntry e1 = lookup_interpretation(n1, rho_name);
  InterpEntry e2 = lookup_interpretation(n2, rho_name);
  int rc = -1;
  std::visit(
      [&](const auto& t1, const auto& t2) {
        using S1 = typename std::decay_t<decltype(t1)>::source_type;
        using S2 = typename std::decay_t<decltype(t2)>::source_type;
        using U1 = typename std::decay_t<decltype(t1)>::target_type;
        using U2 = typename std::decay_t<decltype(t2)>::target_type;
        if constexpr (!std::is_same_v<U1, U2>) {
          throw ConfigError("homotopy: '" + n1 + "' and '" + n2 + "' have different targets");
        } else {
          const auto& r1 = std::get<Presentation<S1>>(e1.source);
          const auto& r2 = std::get<Presentation<S2>>(e2.source);
          auto k = pe::homotopy_prefix(t1, r1, t2, r2, fuel);
          auto items = k.take(limit);
          for (const auto& [u, v] : items) out.row("pair", {{"u", show_all(u)}, {"v", show_all(v)}});
          out.row("summary", {{"emitted", items.size()}, {"fuel_used", k.fuel_used()}});
          rc = 0;
        }
      },
      e1.theta, e2.theta);
  return rc;
}

int cmd_foursquares(Emitter& out, std::uint64_t from, std::uint64_t upto) {
  for (std::uint64_t n = from; n <= upto; ++n) {
    auto q = pe::four_squares(from_u64(n));
    if (!q) throw std::logic_error("foursquares: no representation found");
    out.row("squares", {{"n", n}, {"a", (*q)[0].get_str()}, {"b", (*q)[1].get_str()}, {"c", (*q)[2].get_str()},
                        {"d", (*q)[3].get_str()}});
  }
  return 0;
}

// ---- function fields ------------------------------------------------------

std::uint32_t checked_prime(std::uint64_t p) {
  if (p > 1000 || !ff::is_small_prime(static_cast<std::uint32_t>(p))) throw ConfigError("--p must be a small prime");
  return static_cast<std::uint32_t>(p);
}

int cmd_pheidas(Emitter& out, std::uint64_t p64, std::uint64_t deg) {
  std::uint32_t p = checked_prime(p64);
  if (p == 2) throw ConfigError("pheidas: p must be odd");
  auto sols = ff::pheidas_solutions(p, static_cast<int>(deg));
  auto fam = ff::pheidas_family(p, static_cast<int>(deg));
  for (const auto& s : sols) {
    if (!ff::on_pheidas_curve(s)) throw std::logic_error("pheidas: solution fails verification");
    out.row("solution", {{"x", s.x.to_string()}, {"y", s.y.to_string()}, {"z", s.z.to_string()}});
  }
  std::set<FpRatFun> xs, ys;
  for (const auto& s : sols) {
    xs.insert(s.x);
    ys.insert(s.y);
  }
  json xa = json::array(), ya = json::array();
  for (const auto& x : xs) xa.push_back(x.pretty());
  for (const auto& y : ys) ya.push_back(y.pretty());
  out.row("projection", {{"axis", "x"}, {"values", xa}});
  out.row("projection", {{"axis", "y"}, {"values", ya}});
  out.row("summary", {{"solutions", sols.size()}, {"family", fam.size()}, {"family_match", sols == fam}});
  return 0;
}

int cmd_frobenius(Emitter& out, std::uint64_t p64, const std::string& xs, const std::string& ys, std::uint64_t smax) {
  std::uint32_t p = checked_prime(p64);
  FpRatFun x = ff::parse_ratfun(xs, p), y = ff::parse_ratfun(ys, p);
  auto s = ff::frobenius_leq(x, y, static_cast<unsigned>(smax));
  json row{{"x", x.to_string()}, {"y", y.to_string()}};
  if (s) {
    row["status"] = "yes";
    row["s"] = *s;
  } else {
    row["status"] = "no";
  }
  out.row("result", row);
  return 0;
}

int cmd_automaton(Emitter& out, const std::string& kind, std::uint64_t k, std::uint64_t base, std::uint64_t upto) {
  if (base < 2 || base > 1000) throw ConfigError("--base must be between 2 and 1000");
  ff::DigitAutomaton m = kind == "powers" ? ff::DigitAutomaton::powers_of_base(static_cast<std::uint32_t>(base))
                         : kind == "multiples"
                             ? ff::DigitAutomaton::multiples_of(static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(base))
                             : throw ConfigError("--kind must be 'multiples' or 'powers'");
  auto e = m.members(upto + 1);
  json members = json::array();
  while (auto n = e.next()) members.push_back(n->get_str());
  out.row("members", {{"automaton", m.name()}, {"values", members}});
  out.row("summary", {{"states", m.states()}, {"counting", ff::counting(m, from_u64(upto)).get_str()},
                      {"zero_padding_invariant", m.zero_padding_invariant()}});
  return 0;
}

int cmd_christol(Emitter& out, std::uint64_t p64, std::uint64_t n) {
  std::uint32_t p = checked_prime(p64);
  auto N = static_cast<std::int64_t>(n);
  // f_b = b + sum t^(p^i), against T^p - T + t.
  std::vector<ff::FpPoly> rel(p + 1, ff::FpPoly(p));
  rel[0] = ff::FpPoly::t(p);
  rel[1] = ff::FpPoly::constant(p, p - 1);
  rel[p] = rel[p] + ff::FpPoly::constant(p, 1);
  for (std::uint32_t b = 0; b < p; ++b) {
    auto members = ff::DigitAutomaton::powers_of_base(p).members(n + 1);
    ff::PowerSeries f = ff::genseries(members, p, N);
    f.set_coeff(0, (f.coeff(0) + b) % p);
    auto ord = ff::verify_algebraic(f, rel);
    out.row("residual", {{"series", "f_" + std::to_string(b)}, {"relation", "T^p - T + t"}, {"ord", ord},
                         {"passes", ord >= N}});
  }
  // f_N = sum_{n>=0} t^n, against (1 - t) T - 1.
  auto all = ff::DigitAutomaton::multiples_of(1, p).members(n + 1);
  ff::PowerSeries g = ff::genseries(all, p, N);
  std::vector<ff::FpPoly> rel2{ff::FpPoly::constant(p, p - 1), ff::FpPoly(p, {1, p - 1})};
  auto ord = ff::verify_algebraic(g, rel2);
  out.row("residual", {{"series", "f_N"}, {"relation", "(1 - t) T - 1"}, {"ord", ord}, {"passes", ord >= N}});
  return 0;
}

unsigned long self_power(unsigned j) {
  unsigned long v = 1;
  for (unsigned i = 0; i < j; ++i) v *= j;
  return v;
}

int cmd_bigA(Emitter& out, std::uint64_t p64, std::uint64_t jmax) {
  std::uint32_t p = checked_prime(p64);
  if (jmax < 1 || jmax > 5) throw ConfigError("--j must be between 1 and 5");
  auto members = ff::bigA_members(p, static_cast<unsigned>(std::min<std::uint64_t>(jmax, 3)));
  json ms = json::array();
  for (const auto& m : members) ms.push_back(m.get_str());
  out.row("members", {{"j_max", std::min<std::uint64_t>(jmax, 3)}, {"values", ms}});
  for (unsigned j = 1; j <= jmax; ++j) {
    Nat c = ff::bigA_counting(p, j);
    Nat expected = Nat(1) + (Nat(1) << (j - 1));
    out.row("counting", {{"j", j}, {"x", std::to_string(p) + "^" + std::to_string(self_power(j))},
                         {"count", c.get_str()}, {"expected", expected.get_str()}, {"check", c == expected ? "ok" : "mismatch"}});
  }
  return 0;
}

int cmd_product_identity(Emitter& out, std::uint64_t p64, std::uint64_t r, std::uint64_t n) {
  std::uint32_t p = checked_prime(p64);
  if (r < 1 || r > 4) throw ConfigError("--r must be between 1 and 4");
  auto N = static_cast<std::int64_t>(n);
  bool ok = ff::product_identity_check(p, static_cast<unsigned>(r), N);
  out.row("identity", {{"n_r", ff::bigA_partial_sum(p, static_cast<unsigned>(r)).get_str()}, {"holds", ok}});
  out.row("convergence", {{"ord", ff::fA_convergence_ord(p, static_cast<unsigned>(r), N)}, {"precision", N}});
  return 0;
}

int cmd_leftdio(Emitter& out, const std::string& poly, const std::string& q2s, std::uint64_t fuel) {
  ff::LeftDiophantine ld(ff::parse_qpoly(poly), parse_rational(q2s));
  auto e = ld.enumerate(fuel);
  std::optional<Rational> best;
  std::size_t count = 0;
  while (auto u = e.next()) {
    bool member = ff::l_alpha_member(*u, ld.alpha());
    if (!member) throw std::logic_error("leftdio: emitted element is not below alpha");
    out.row("element", {{"index", count++}, {"u", show(*u)}, {"below_alpha", member}});
    if (!best || *u > *best) best = *u;
  }
  out.row("summary", {{"emitted", count}, {"fuel_used", e.fuel_used()}, {"max", best ? show(*best) : ""},
                      {"alpha_lo", show(ld.alpha().lo)}, {"alpha_hi", show(ld.alpha().hi)}});
  return 0;
}

json config_of(const CLI::App* sub) {
  json c;
  c["subcommand"] = sub->get_name();
  for (const CLI::Option* opt : sub->get_options()) {
    std::string name = opt->get_lnames().empty() ? opt->get_name() : opt->get_lnames().front();
    if (name == "help" || name == "plain") continue;
    if (opt->get_expected_min() == 0) {
      c[name] = opt->count() > 0;
    } else if (opt->count() > 0) {
      std::string v;
      for (const auto& r : opt->results()) v += (v.empty() ? "" : ",") + r;
      c[name] = v;
    } else {
      c[name] = opt->get_default_str();
    }
  }
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Computability and definability experiments"};
  app.require_subcommand(1);
  app.fallthrough();
  bool plain = false;
  app.add_flag("--plain", plain, "Tab-separated output instead of JSON lines");

  std::string program, code, args, rho = "rat-pairs", gamma = "rat-tau", formula, assign, vars, theta = "nz",
                                   theta2 = "nz", kind = "powers", xs = "[0,1]", ys = "[0,0,0,1]", poly = "2,0,-1",
                                   q2 = "2", qs = "1/2";
  std::uint64_t fuel = 100000, upto = 10, count = 20, limit = 20, p = 3, deg = 27, smax = 8, k = 3, base = 2, n = 81,
                j = 5, r = 2, from = 0;
  bool universal = false, sigma = false;
  auto positive = CLI::PositiveNumber;

  auto* s_eval = app.add_subcommand("recfun-eval", "Evaluate a mu-recursive program");
  s_eval->add_option("--program", program, "s-expression, library name, or @file");
  s_eval->add_option("--code", code, "Goedel number instead of --program");
  s_eval->add_option("--args", args, "comma-separated arguments")->capture_default_str();
  s_eval->add_option("--fuel", fuel, "step budget")->check(positive)->capture_default_str();
  s_eval->add_flag("--universal", universal, "evaluate through the universal evaluator");

  auto* s_halt = app.add_subcommand("halting", "Enumerate a prefix of the halting set");
  s_halt->add_option("--fuel", fuel)->check(positive)->capture_default_str();

  auto* s_tau = app.add_subcommand("tau", "List tau(0..upto)");
  s_tau->add_option("--upto", upto)->capture_default_str();

  auto* s_tinv = app.add_subcommand("tau-inv", "Invert tau");
  s_tinv->add_option("--q", qs, "comma-separated rationals")->capture_default_str();

  auto* s_cf = app.add_subcommand("cf-encode", "Continued-fraction code of positive rationals");
  s_cf->add_option("--q", qs, "comma-separated positive rationals")->capture_default_str();

  auto* s_bij = app.add_subcommand("bijectivize", "Least codes of distinct values of a presentation");
  s_bij->add_option("--rho", rho)->capture_default_str();
  s_bij->add_option("--count", count)->check(positive)->capture_default_str();
  s_bij->add_option("--fuel", fuel)->check(positive)->capture_default_str();

  auto* s_eq = app.add_subcommand("equiv", "Translation table between two presentations");
  s_eq->add_option("--gamma", gamma)->capture_default_str();
  s_eq->add_option("--rho", rho)->capture_default_str();
  s_eq->add_option("--upto", upto)->capture_default_str();
  s_eq->add_option("--fuel", fuel)->check(positive)->capture_default_str();
  s_eq->add_flag("--sigma", sigma, "precompose gamma with the swap 2k <-> 2k+1");

  auto* s_ul = app.add_subcommand("universal-listing", "alpha with rho(alpha(n)) equal to the canonical listing");
  s_ul->add_option("--rho", rho)->capture_default_str();
  s_ul->add_option("--upto", upto)->capture_default_str();
  s_ul->add_option("--fuel", fuel)->check(positive)->capture_default_str();

  auto* s_pe = app.add_subcommand("pe-eval", "Search for witnesses of a positive existential formula");
  s_pe->add_option("--rho", rho)->capture_default_str();
  s_pe->add_option("--formula", formula, "formula text or @file");
  s_pe->add_option("--assign", assign, "name=value,...");
  s_pe->add_option("--fuel", fuel)->check(positive)->capture_default_str();

  auto* s_pen = app.add_subcommand("pe-enumerate", "Enumerate the set defined by a formula");
  s_pen->add_option("--rho", rho)->capture_default_str();
  s_pen->add_option("--formula", formula, "formula text or @file");
  s_pen->add_option("--vars", vars, "output variables, comma-separated");
  s_pen->add_option("--fuel", fuel)->check(positive)->capture_default_str();
  s_pen->add_option("--limit", limit)->check(positive)->capture_default_str();

  auto* s_comp = app.add_subcommand("compose", "Compose two interpretations");
  s_comp->add_option("--theta1", theta)->capture_default_str();
  s_comp->add_option("--theta2", theta2)->capture_default_str();
  s_comp->add_option("--rho", rho, "presentation for 'id'")->capture_default_str();
  s_comp->add_option("--formula", formula, "target formula to pull back");
  s_comp->add_option("--vars", vars, "its free variables in order");
  s_comp->add_option("--limit", limit)->check(positive)->capture_default_str();

  auto* s_graph = app.add_subcommand("graph", "Prefix of the graph of an interpretation");
  s_graph->add_option("--theta", theta)->capture_default_str();
  s_graph->add_option("--rho", rho, "presentation for 'id'")->capture_default_str();
  s_graph->add_option("--fuel", fuel)->check(positive)->capture_default_str();
  s_graph->add_option("--limit", limit)->check(positive)->capture_default_str();

  auto* s_hom = app.add_subcommand("homotopy", "Prefix of {(u, v) : theta(u) = theta2(v)}");
  s_hom->add_option("--theta", theta)->capture_default_str();
  s_hom->add_option("--theta2", theta2)->capture_default_str();
  s_hom->add_option("--rho", rho, "presentation for 'id'")->capture_default_str();
  s_hom->add_option("--fuel", fuel)->check(positive)->capture_default_str();
  s_hom->add_option("--limit", limit)->check(positive)->capture_default_str();

  auto* s_fs = app.add_subcommand("foursquares", "Least four-square representations");
  s_fs->add_option("--from", from)->capture_default_str();
  s_fs->add_option("--upto", upto)->capture_default_str();

  auto* s_ph = app.add_subcommand("pheidas", "Solutions of the Pheidas system within a degree bound");
  s_ph->add_option("--p", p)->capture_default_str();
  s_ph->add_option("--deg", deg)->check(positive)->capture_default_str();

  auto* s_fr = app.add_subcommand("frobenius", "Decide y = x^(p^s) for some s <= smax");
  s_fr->add_option("--p", p)->capture_default_str();
  s_fr->add_option("--x", xs)->capture_default_str();
  s_fr->add_option("--y", ys)->capture_default_str();
  s_fr->add_option("--smax", smax)->capture_default_str();

  auto* s_aut = app.add_subcommand("automaton", "Run a digit automaton");
  s_aut->add_option("--kind", kind, "multiples or powers")->capture_default_str();
  s_aut->add_option("--k", k)->check(positive)->capture_default_str();
  s_aut->add_option("--base", base)->capture_default_str();
  s_aut->add_option("--upto", upto)->capture_default_str();

  auto* s_chr = app.add_subcommand("christol", "Residuals of algebraic relations for automatic series");
  s_chr->add_option("--p", p)->capture_default_str();
  s_chr->add_option("--N", n, "precision")->check(positive)->capture_default_str();

  auto* s_big = app.add_subcommand("bigA", "Members and counting function of the lacunary set");
  s_big->add_option("--p", p)->capture_default_str();
  s_big->add_option("--j", j)->capture_default_str();

  auto* s_prod = app.add_subcommand("product-identity", "(1+t)^(n_r) against the product of 1 + t^(p^(j^j))");
  s_prod->add_option("--p", p)->capture_default_str();
  s_prod->add_option("--r", r)->capture_default_str();
  s_prod->add_option("--N", n, "precision")->check(positive)->capture_default_str();

  auto* s_ld = app.add_subcommand("leftdio", "Enumerate {u : p(u) > 0, u < q2} in tau order");
  s_ld->add_option("--poly", poly, "coefficients low to high")->capture_default_str();
  s_ld->add_option("--q2", q2)->capture_default_str();
  s_ld->add_option("--fuel", fuel)->check(positive)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitConfig;
  }

  // Subcommand-specific defaults that differ from the shared variables.
  CLI::App* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  auto unset = [&](const char* opt) { return sub->count(opt) == 0; };
  if (name == "halting" && unset("--fuel")) fuel = 2000;
  if (name == "bijectivize" && unset("--fuel")) fuel = 1000000;
  if (name == "equiv" && unset("--fuel")) fuel = 10000000;
  if (name == "universal-listing" && unset("--fuel")) fuel = 100000000;
  if (name == "pe-eval" && unset("--fuel")) fuel = 100000;
  if ((name == "graph" || name == "homotopy") && unset("--fuel")) fuel = 10000;
  if (name == "leftdio" && unset("--fuel")) fuel = ff::kLeftDioDefaultFuel;
  if ((name == "graph" || name == "compose" || name == "homotopy") && unset("--rho")) rho = "int-zigzag";
  if (name == "pe-eval" || name == "pe-enumerate") {
    if (unset("--rho")) rho = "nat-id";
  }
  if (name == "compose" && unset("--theta2")) theta2 = "kappa-zq";
  if (name == "christol" && unset("--p")) p = 2;

  Emitter out(plain);
  try {
    json cfg = config_of(sub);
    if (cfg.contains("fuel")) cfg["fuel"] = std::to_string(fuel);
    if (cfg.contains("rho")) cfg["rho"] = rho;
    if (cfg.contains("theta2")) cfg["theta2"] = theta2;
    if (cfg.contains("p")) cfg["p"] = std::to_string(p);
    out.header(cfg);
    if (name == "recfun-eval") return cmd_recfun_eval(out, program, code, args, fuel, universal);
    if (name == "halting") return cmd_halting(out, fuel);
    if (name == "tau") return cmd_tau(out, upto);
    if (name == "tau-inv") return cmd_tau_inv(out, qs);
    if (name == "cf-encode") return cmd_cf_encode(out, qs);
    if (name == "bijectivize") return cmd_bijectivize(out, rho, count, fuel);
    if (name == "equiv") return cmd_equiv(out, gamma, rho, upto, fuel, sigma);
    if (name == "universal-listing") return cmd_universal_listing(out, rho, upto, fuel);
    if (name == "pe-eval") return cmd_pe_eval(out, rho, formula, assign, fuel);
    if (name == "pe-enumerate") return cmd_pe_enumerate(out, rho, formula, vars, fuel, limit);
    if (name == "compose") return cmd_compose(out, theta, theta2, rho, formula, vars, limit);
    if (name == "graph") return cmd_graph(out, theta, rho, fuel, limit);
    if (name == "homotopy") return cmd_homotopy(out, theta, theta2, rho, fuel, limit);
    if (name == "foursquares") return cmd_foursquares(out, from, upto);
    if (name == "pheidas") return cmd_pheidas(out, p, deg);
    if (name == "frobenius") return cmd_frobenius(out, p, xs, ys, smax);
    if (name == "automaton") return cmd_automaton(out, kind, k, base, upto);
    if (name == "christol") return cmd_christol(out, p, n);
    if (name == "bigA") return cmd_bigA(out, p, j);
    if (name == "product-identity") return cmd_product_identity(out, p, r, n);
    if (name == "leftdio") return cmd_leftdio(out, poly, q2, fuel);
    throw std::logic_error("unhandled subcommand " + name);
  } catch (const ConfigError& e) {
    std::cerr << "dprm " << name << ": " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    // Malformed values and structural violations in the inputs.
    std::cerr << "dprm " << name << ": " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::domain_error& e) {
    std::cerr << "dprm " << name << ": " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "dprm " << name << ": internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}
