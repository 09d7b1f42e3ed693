#include "dprm/ffdio/power_series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dprm::ff {

PowerSeries::PowerSeries(std::uint32_t p, std::int64_t precision, std::int64_t offset)
    : p_(p), n_(precision), v_(std::min(offset, precision)), c_(static_cast<std::size_t>(n_ - v_), 0) {
  if (!is_small_prime(p)) throw std::invalid_argument("PowerSeries: p must be a small prime");
}

PowerSeries PowerSeries::from_poly(const FpPoly& f, std::int64_t precision) {
  PowerSeries s(f.prime(), precision, 0);
  for (std::int64_t i = 0; i < precision && i <= f.degree(); ++i) s.set_coeff(i, f.coeff(static_cast<std::size_t>(i)));
  return s;
}

PowerSeries PowerSeries::from_ratfun(const FpRatFun& f, std::int64_t precision) {
  std::uint32_t p = f.prime();
  int k = f.den().ord_t();
  FpPoly den = f.den();
  if (k > 0) den = den.divmod(FpPoly::monomial(p, 1, static_cast<std::size_t>(k))).first;
  // num / (t^k den) with den(0) != 0: expand num/den to precision + k, shift.
  std::uint32_t inv0 = inv_mod(den.coeff(0), p);
  std::int64_t m = precision + k;
  PowerSeries q(p, precision, -k);
  std::vector<std::uint32_t> a(static_cast<std::size_t>(std::max<std::int64_t>(m, 0)), 0);
  for (std::int64_t i = 0; i < m; ++i) {
    std::uint64_t s = f.num().coeff(static_cast<std::size_t>(i));
    for (std::int64_t j = 1; j <= i && j <= den.degree(); ++j) {
      s += std::uint64_t(p - den.coeff(static_cast<std::size_t>(j))) * a[static_cast<std::size_t>(i - j)];
    }
    a[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(s % p * inv0 % p);
    q.set_coeff(i - k, a[static_cast<std::size_t>(i)]);
  }
  return q;
}

std::uint32_t PowerSeries::coeff(std::int64_t i) const {
  if (i >= n_) throw std::out_of_range("PowerSeries: coefficient beyond precision");
  if (i < v_) return 0;
  return c_[static_cast<std::size_t>(i - v_)];
}

void PowerSeries::set_coeff(std::int64_t i, std::uint32_t c) {
  if (i >= n_) throw std::out_of_range("PowerSeries: coefficient beyond precision");
  c %= p_;
  if (i < v_) {
    if (c == 0) return;
    c_.insert(c_.begin(), static_cast<std::size_t>(v_ - i), 0);
    v_ = i;
  }
  c_[static_cast<std::size_t>(i - v_)] = c;
}

std::int64_t PowerSeries::ord() const {
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] != 0) return v_ + static_cast<std::int64_t>(i);
  }
  return n_;
}

PowerSeries PowerSeries::operator+(const PowerSeries& o) const {
  if (p_ != o.p_) throw std::invalid_argument("PowerSeries: mixing characteristics");
  std::int64_t n = std::min(n_, o.n_);
  PowerSeries r(p_, n, std::min(v_, o.v_));
  for (std::int64_t i = r.v_; i < n; ++i) r.c_[static_cast<std::size_t>(i - r.v_)] = (coeff(i) + o.coeff(i)) % p_;
  return r;
}

PowerSeries PowerSeries::operator-() const {
  PowerSeries r = *this;
  for (auto& c : r.c_) c = (p_ - c) % p_;
  return r;
}

PowerSeries PowerSeries::operator-(const PowerSeries& o) const { return *this + (-o); }

PowerSeries PowerSeries::operator*(const PowerSeries& o) const {
  if (p_ != o.p_) throw std::invalid_argument("PowerSeries: mixing characteristics");
  // (a + O(t^N1)) (b + O(t^N2)) is known up to min(N1 + ord b, N2 + ord a).
  std::int64_t va = ord(), vb = o.ord();
  std::int64_t n = std::min(n_ + std::min(vb, o.n_), o.n_ + std::min(va, n_));
  std::int64_t v = std::min(va + vb, n);
  PowerSeries r(p_, n, v);
  if (va >= n_ || vb >= o.n_) return r;
  std::vector<std::uint64_t> acc(r.c_.size(), 0);
  for (std::int64_t i = va; i < n_; ++i) {
    std::uint64_t a = coeff(i);
    if (a == 0) continue;
    for (std::int64_t j = vb; j < o.n_ && i + j < n; ++j) {
      std::uint64_t b = o.coeff(j);
      if (b == 0) continue;
      auto& slot = acc[static_cast<std::size_t>(i + j - v)];
      slot = (slot + a * b) % p_;
    }
  }
  for (std::size_t i = 0; i < acc.size(); ++i) r.c_[i] = static_cast<std::uint32_t>(acc[i]);
  return r;
}

PowerSeries PowerSeries::pow(const Nat& e) const {
  if (e < 0) throw std::invalid_argument("PowerSeries::pow with negative exponent");
  PowerSeries result(p_, n_, 0);
  result.set_coeff(0, 1);
  if (e == 0) return result;
  PowerSeries base = *this;
  bool first = true;
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t b = 0; b < bits; ++b) {
    if (mpz_tstbit(e.get_mpz_t(), b)) {
      result = first ? base : result * base;
      first = false;
    }
    if (b + 1 < bits) base = base * base;
  }
  return result;
}

PowerSeries PowerSeries::frobenius() const {
  std::int64_t p = p_;
  PowerSeries r(p_, n_ * p, v_ * p);
  for (std::int64_t i = v_; i < n_; ++i) r.set_coeff(i * p, coeff(i));
  return r;
}

PowerSeries PowerSeries::truncated(std::int64_t precision) const {
  std::int64_t n = std::min(precision, n_);
  PowerSeries r(p_, n, std::min(v_, n));
  for (std::int64_t i = r.v_; i < n; ++i) r.c_[static_cast<std::size_t>(i - r.v_)] = coeff(i);
  return r;
}

std::string PowerSeries::to_string() const {
  std::ostringstream os;
  bool any = false;
  for (std::int64_t i = v_; i < n_; ++i) {
    std::uint32_t c = coeff(i);
    if (c == 0) continue;
    if (any) os << ' ';
    os << i << ':' << c;
    any = true;
  }
  if (!any) os << '0';
  os << " + O(t^" << n_ << ')';
  return os.str();
}

bool PowerSeries::agrees_with(const PowerSeries& o) const {
  if (p_ != o.p_) return false;
  std::int64_t n = std::min(n_, o.n_);
  for (std::int64_t i = std::min(v_, o.v_); i < n; ++i) {
    if (coeff(i) != o.coeff(i)) return false;
  }
  return true;
}

PowerSeries genseries(Enumerator<Nat>& members, std::uint32_t p, std::int64_t n) {
  PowerSeries s(p, n, 0);
  Nat last = -1;
  for (;;) {
    auto m = members.next();
    if (!m) {
      if (members.finished()) return s;
      Nat gap = last + 1;
      if (gap < n) {
        throw std::runtime_error("genseries: member prefix ends before exponent " + gap.get_str() + " is decided");
      }
      return s;
    }
    if (*m <= last) throw std::invalid_argument("genseries: members must be strictly increasing");
    last = *m;
    if (last >= n) return s;
    s.set_coeff(last.get_si(), 1);
  }
}

PowerSeries genseries(const std::vector<Nat>& members, std::uint32_t p, std::int64_t n) {
  auto e = from_vector(members);
  return genseries(e, p, n);
}

std::int64_t verify_algebraic(const PowerSeries& f, const std::vector<FpPoly>& coeffs) {
  std::uint32_t p = f.prime();
  PowerSeries acc(p, f.precision(), 0);
  PowerSeries fk(p, f.precision(), 0);
  fk.set_coeff(0, 1);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (k > 0) fk = fk * f;
    if (coeffs[k].prime() != p) throw std::invalid_argument("verify_algebraic: mixing characteristics");
    if (coeffs[k].is_zero()) continue;
    acc = acc + PowerSeries::from_poly(coeffs[k], f.precision()) * fk;
  }
  return std::min(acc.ord(), f.precision());
}

}  // namespace dprm::ff
