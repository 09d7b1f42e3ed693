#include "dprm/ffdio/fp_ratfun.hpp"

#include <stdexcept>

namespace dprm::ff {

FpRatFun::FpRatFun(std::uint32_t p) : num_(p), den_(FpPoly::constant(p, 1)) {}

FpRatFun::FpRatFun(FpPoly num) : num_(std::move(num)), den_(FpPoly::constant(num_.prime(), 1)) {}

FpRatFun::FpRatFun(FpPoly num, FpPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (num_.prime() != den_.prime()) throw std::invalid_argument("FpRatFun: mixing characteristics");
  if (den_.is_zero()) throw std::domain_error("FpRatFun: zero denominator");
  normalize();
}

void FpRatFun::normalize() {
  std::uint32_t p = num_.prime();
  if (num_.is_zero()) {
    den_ = FpPoly::constant(p, 1);
    return;
  }
  FpPoly g = gcd(num_, den_);
  if (!g.is_one()) {
    num_ = num_.divmod(g).first;
    den_ = den_.divmod(g).first;
  }
  std::uint32_t inv = inv_mod(den_.lead(), p);
  num_ = num_.scaled(inv);
  den_ = den_.scaled(inv);
}

FpRatFun FpRatFun::constant(std::uint32_t p, std::uint64_t c) { return FpRatFun(FpPoly::constant(p, c)); }

FpRatFun FpRatFun::t_power(std::uint32_t p, std::int64_t k) {
  if (k >= 0) return FpRatFun(FpPoly::monomial(p, 1, static_cast<std::size_t>(k)));
  return FpRatFun(FpPoly::constant(p, 1), FpPoly::monomial(p, 1, static_cast<std::size_t>(-k)));
}

FpRatFun FpRatFun::operator+(const FpRatFun& o) const {
  if (den_ == o.den_) return FpRatFun(num_ + o.num_, den_);
  return FpRatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

FpRatFun FpRatFun::operator-() const {
  FpRatFun r = *this;
  r.num_ = -r.num_;
  return r;
}

FpRatFun FpRatFun::operator-(const FpRatFun& o) const { return *this + (-o); }

FpRatFun FpRatFun::operator*(const FpRatFun& o) const {
  return FpRatFun(num_ * o.num_, den_ * o.den_);
}

FpRatFun FpRatFun::inverse() const {
  if (is_zero()) throw std::domain_error("FpRatFun: inverse of zero");
  return FpRatFun(den_, num_);
}

FpRatFun FpRatFun::operator/(const FpRatFun& o) const { return *this * o.inverse(); }

FpRatFun FpRatFun::pow(const Int& e) const {
  if (e < 0) return inverse().pow(-e);
  // Numerator and denominator stay coprime under powers.
  FpRatFun r(prime());
  r.num_ = num_.pow(e);
  r.den_ = den_.pow(e);
  if (r.num_.is_zero()) r.den_ = FpPoly::constant(prime(), 1);
  return r;
}

FpRatFun FpRatFun::frobenius() const {
  FpRatFun r(prime());
  r.num_ = num_.frobenius();
  r.den_ = den_.frobenius();
  return r;
}

std::int64_t FpRatFun::t_adic_ord() const {
  if (is_zero()) return kInfiniteOrder;
  return static_cast<std::int64_t>(num_.ord_t()) - den_.ord_t();
}

std::string FpRatFun::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return num_.to_string() + " / " + den_.to_string();
}

std::string FpRatFun::pretty() const {
  if (den_.is_one()) return num_.pretty();
  auto wrap = [](const FpPoly& f) {
    std::string s = f.pretty();
    return s.find(' ') == std::string::npos ? s : "(" + s + ")";
  };
  return wrap(num_) + "/" + wrap(den_);
}

FpRatFun parse_ratfun(std::string_view text, std::uint32_t default_p) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return FpRatFun(parse_poly(text, default_p));
  FpPoly num = parse_poly(text.substr(0, slash), default_p);
  FpPoly den = parse_poly(text.substr(slash + 1), num.prime());
  return FpRatFun(num, den);
}

}  // namespace dprm::ff
