#include "dprm/ffdio/qpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace dprm::ff {

QPoly::QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  for (auto& c : c_) c.canonicalize();
  trim();
}

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational QPoly::operator()(const Rational& x) const {
  Rational r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
  return r;
}

int QPoly::sign_at(const Rational& x) const { return sgn((*this)(x)); }

QPoly QPoly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Rational(static_cast<long>(i)));
  return QPoly(std::move(d));
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& d) const {
  if (d.is_zero()) throw std::domain_error("QPoly: division by zero");
  std::vector<Rational> rem = c_;
  std::vector<Rational> quo(c_.size() >= d.c_.size() ? c_.size() - d.c_.size() + 1 : 0);
  for (std::size_t i = quo.size(); i-- > 0;) {
    Rational q = rem[i + d.c_.size() - 1] / d.lead();
    quo[i] = q;
    for (std::size_t j = 0; j < d.c_.size(); ++j) rem[i + j] -= q * d.c_[j];
  }
  return {QPoly(std::move(quo)), QPoly(std::move(rem))};
}

std::string QPoly::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << dprm::to_string(c_[i]);
  os << ']';
  return os.str();
}

QPoly gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  std::vector<Rational> c = a.coeffs();
  Rational l = a.lead();
  for (auto& x : c) x /= l;
  return QPoly(std::move(c));
}

QPoly parse_qpoly(std::string_view text) {
  std::vector<Rational> c;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    c.push_back(parse_rational(std::string(text.substr(start, end - start))));
    start = end + 1;
  }
  QPoly p(std::move(c));
  if (p.is_zero()) throw std::invalid_argument("parse_qpoly: zero polynomial");
  return p;
}

std::vector<QPoly> sturm_chain(const QPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("sturm_chain: zero polynomial");
  QPoly g = gcd(f, f.derivative());
  QPoly sq = g.degree() > 0 ? f.divmod(g).first : f;
  std::vector<QPoly> chain{sq, sq.derivative()};
  while (!chain.back().is_zero()) {
    QPoly r = chain[chain.size() - 2].divmod(chain.back()).second;
    chain.push_back(-r);
  }
  chain.pop_back();
  return chain;
}

namespace {

std::size_t sign_changes(const std::vector<QPoly>& chain, const Rational& x) {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& p : chain) {
    int s = p.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

std::size_t count_roots(const std::vector<QPoly>& chain, const Rational& lo, const Rational& hi) {
  if (hi <= lo) return 0;
  return sign_changes(chain, lo) - sign_changes(chain, hi);
}

Rational cauchy_bound(const QPoly& f) {
  Rational m = 0;
  for (int i = 0; i < f.degree(); ++i) m = std::max(m, Rational(abs(f.coeffs()[i] / f.lead())));
  return m + 1;
}

bool less_than(const Rational& q, const AlgebraicReal& alpha) {
  if (q <= alpha.lo) return true;
  if (q >= alpha.hi) return false;
  if (alpha.poly(q) == 0) return false;  // q is the only root in the interval
  return count_roots(sturm_chain(alpha.poly), q, alpha.hi) == 1;
}

AlgebraicReal refine(AlgebraicReal alpha, unsigned steps) {
  auto chain = sturm_chain(alpha.poly);
  for (unsigned i = 0; i < steps; ++i) {
    Rational mid = (alpha.lo + alpha.hi) / 2;
    if (count_roots(chain, alpha.lo, mid) == 1) {
      alpha.hi = mid;
    } else {
      alpha.lo = mid;
    }
  }
  return alpha;
}

}  // namespace dprm::ff
