#include "dprm/ffdio/fp_poly.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace dprm::ff {

bool is_small_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::uint32_t pow_mod(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
  std::uint64_t r = 1 % p, b = a % p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw std::domain_error("inverse of zero in F_p");
  return pow_mod(a, p - 2, p);
}

FpPoly::FpPoly(std::uint32_t p) : p_(p) {
  if (!is_small_prime(p)) throw std::invalid_argument("FpPoly: p must be prime, got " + std::to_string(p));
}

FpPoly::FpPoly(std::uint32_t p, std::vector<std::uint32_t> coeffs) : FpPoly(p) {
  c_ = std::move(coeffs);
  for (auto& x : c_) x %= p_;
  trim();
}

FpPoly FpPoly::constant(std::uint32_t p, std::uint64_t c) {
  return FpPoly(p, {static_cast<std::uint32_t>(c % p)});
}

FpPoly FpPoly::monomial(std::uint32_t p, std::uint64_t c, std::size_t degree) {
  std::vector<std::uint32_t> v(degree + 1, 0);
  v[degree] = static_cast<std::uint32_t>(c % p);
  return FpPoly(p, std::move(v));
}

void FpPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void FpPoly::check_same(const FpPoly& o) const {
  if (p_ != o.p_) throw std::invalid_argument("FpPoly: mixing characteristics");
}

int FpPoly::ord_t() const {
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i]) return static_cast<int>(i);
  }
  return -1;
}

FpPoly FpPoly::operator+(const FpPoly& o) const {
  check_same(o);
  std::vector<std::uint32_t> v(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = (coeff(i) + o.coeff(i)) % p_;
  return FpPoly(p_, std::move(v));
}

FpPoly FpPoly::operator-() const {
  std::vector<std::uint32_t> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = (p_ - c_[i]) % p_;
  return FpPoly(p_, std::move(v));
}

FpPoly FpPoly::operator-(const FpPoly& o) const { return *this + (-o); }

FpPoly FpPoly::operator*(const FpPoly& o) const {
  check_same(o);
  if (is_zero() || o.is_zero()) return FpPoly(p_);
  std::vector<std::uint64_t> acc(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!c_[i]) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      acc[i + j] = (acc[i + j] + static_cast<std::uint64_t>(c_[i]) * o.c_[j]) % p_;
    }
  }
  std::vector<std::uint32_t> v(acc.begin(), acc.end());
  return FpPoly(p_, std::move(v));
}

FpPoly FpPoly::scaled(std::uint32_t c) const {
  std::vector<std::uint32_t> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c_[i]) * c % p_);
  return FpPoly(p_, std::move(v));
}

FpPoly FpPoly::shifted(std::size_t k) const {
  if (is_zero()) return *this;
  std::vector<std::uint32_t> v(k, 0);
  v.insert(v.end(), c_.begin(), c_.end());
  return FpPoly(p_, std::move(v));
}

FpPoly FpPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(inv_mod(lead(), p_));
}

FpPoly FpPoly::pow(std::uint64_t e) const {
  FpPoly r = constant(p_, 1), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

FpPoly FpPoly::pow(const Nat& e) const {
  if (e < 0) throw std::invalid_argument("FpPoly::pow with negative exponent");
  FpPoly r = constant(p_, 1);
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    r = r * r;
    if (mpz_tstbit(e.get_mpz_t(), i)) r = r * *this;
  }
  return r;
}

std::pair<FpPoly, FpPoly> FpPoly::divmod(const FpPoly& d) const {
  check_same(d);
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<std::uint32_t> r = c_;
  if (degree() < d.degree()) return {FpPoly(p_), *this};
  std::vector<std::uint32_t> q(c_.size() - d.c_.size() + 1, 0);
  std::uint32_t inv = inv_mod(d.lead(), p_);
  for (std::size_t k = q.size(); k-- > 0;) {
    std::uint32_t top = r[k + d.c_.size() - 1];
    if (!top) continue;
    std::uint32_t f = static_cast<std::uint32_t>(static_cast<std::uint64_t>(top) * inv % p_);
    q[k] = f;
    for (std::size_t j = 0; j < d.c_.size(); ++j) {
      std::uint64_t sub = static_cast<std::uint64_t>(f) * d.c_[j] % p_;
      r[k + j] = static_cast<std::uint32_t>((r[k + j] + p_ - sub) % p_);
    }
  }
  return {FpPoly(p_, std::move(q)), FpPoly(p_, std::move(r))};
}

FpPoly FpPoly::frobenius() const {
  if (is_zero()) return *this;
  std::vector<std::uint32_t> v((c_.size() - 1) * p_ + 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) v[i * p_] = c_[i];
  return FpPoly(p_, std::move(v));
}

bool FpPoly::is_pth_power() const {
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] && i % p_) return false;
  }
  return true;
}

FpPoly FpPoly::pth_root() const {
  if (!is_pth_power()) throw std::domain_error("polynomial is not a p-th power");
  if (is_zero()) return *this;
  std::vector<std::uint32_t> v(degree() / p_ + 1, 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = c_[i * p_];
  return FpPoly(p_, std::move(v));
}

std::string FpPoly::to_string() const {
  std::ostringstream os;
  os << "poly p=" << p_ << " [";
  if (c_.empty()) os << "0";
  for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
  os << "]";
  return os.str();
}

std::string FpPoly::pretty() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!c_[i]) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += std::to_string(c_[i]);
      continue;
    }
    if (c_[i] != 1) out += std::to_string(c_[i]);
    out += "t";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

bool operator<(const FpPoly& a, const FpPoly& b) {
  if (a.p_ != b.p_) return a.p_ < b.p_;
  if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
  for (std::size_t i = a.c_.size(); i-- > 0;) {
    if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
  }
  return false;
}

FpPoly gcd(FpPoly a, FpPoly b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

FpPoly parse_poly(std::string_view text, std::uint32_t default_p) {
  std::string s(text);
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  };
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("bad polynomial '" + s + "': " + what + " at offset " + std::to_string(pos));
  };
  auto read_uint = [&]() -> std::uint64_t {
    skip();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail("expected digits");
    if (pos - start > 18) fail("number too large");
    return std::stoull(s.substr(start, pos - start));
  };
  std::uint32_t p = default_p;
  skip();
  if (s.compare(pos, 4, "poly") == 0) {
    pos += 4;
    skip();
    if (s.compare(pos, 2, "p=") != 0) fail("expected 'p='");
    pos += 2;
    auto v = read_uint();
    if (v > 65521) fail("prime too large");
    p = static_cast<std::uint32_t>(v);
  }
  if (p == 0) fail("no characteristic given");
  skip();
  if (pos >= s.size() || s[pos] != '[') fail("expected '['");
  ++pos;
  std::vector<std::uint32_t> coeffs;
  skip();
  if (pos < s.size() && s[pos] == ']') {
    ++pos;
  } else {
    for (;;) {
      coeffs.push_back(static_cast<std::uint32_t>(read_uint() % p));
      skip();
      if (pos < s.size() && s[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < s.size() && s[pos] == ']') {
        ++pos;
        break;
      }
      fail("expected ',' or ']'");
    }
  }
  skip();
  if (pos != s.size()) fail("trailing input");
  return FpPoly(p, std::move(coeffs));
}

FpPoly poly_from_digits(std::uint32_t p, const Nat& n) {
  std::vector<std::uint32_t> v;
  Nat m = n;
  while (m > 0) {
    v.push_back(static_cast<std::uint32_t>(mpz_fdiv_ui(m.get_mpz_t(), p)));
    mpz_fdiv_q_ui(m.get_mpz_t(), m.get_mpz_t(), p);
  }
  return FpPoly(p, std::move(v));
}

Nat poly_to_digits(const FpPoly& f) {
  Nat n = 0;
  for (std::size_t i = f.coeffs().size(); i-- > 0;) n = n * f.prime() + f.coeffs()[i];
  return n;
}

Nat monic_index(const FpPoly& f) {
  if (f.is_zero() || f.lead() != 1) throw std::invalid_argument("monic_index needs a monic polynomial");
  std::uint32_t p = f.prime();
  int d = f.degree();
  // Blocks of sizes p^0, ..., p^{d-1} come first: (p^d - 1)/(p - 1) entries.
  Nat pd;
  mpz_ui_pow_ui(pd.get_mpz_t(), p, static_cast<unsigned long>(d));
  Nat before = (pd - 1) / (p - 1);
  std::vector<std::uint32_t> low(f.coeffs().begin(), f.coeffs().end() - 1);
  return before + poly_to_digits(FpPoly(p, std::move(low)));
}

FpPoly monic_from_index(std::uint32_t p, const Nat& index) {
  Nat rest = index;
  std::size_t d = 0;
  Nat block = 1;
  while (rest >= block) {
    rest -= block;
    block *= p;
    ++d;
  }
  FpPoly low = poly_from_digits(p, rest);
  return low + FpPoly::monomial(p, 1, d);
}

}  // namespace dprm::ff
