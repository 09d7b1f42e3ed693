#include "dprm/presentations/rational_listing.hpp"

#include <stdexcept>

namespace dprm::pres {

Rational q_pos(const Nat& n) {
  if (n < 1) throw std::invalid_argument("q_pos needs n >= 1");
  // Record the path down to 1, then replay it upwards.
  std::vector<bool> reciprocal;  // true: 1/q(n-1), false: q(n/2) + 1
  Nat m = n;
  while (m != 1) {
    if (mpz_even_p(m.get_mpz_t())) {
      reciprocal.push_back(false);
      m /= 2;
    } else {
      reciprocal.push_back(true);
      m -= 1;
    }
  }
  Rational v(1);
  for (auto it = reciprocal.rbegin(); it != reciprocal.rend(); ++it) {
    if (*it) {
      v = 1 / v;
    } else {
      v += 1;
    }
  }
  return v;
}

Rational tau(const Nat& n) {
  if (n < 0) throw std::invalid_argument("tau needs n >= 0");
  enum class Op { Inc, Dec, Inv };
  std::vector<Op> ops;
  Nat m = n;
  while (m > 2) {
    unsigned long r = mpz_fdiv_ui(m.get_mpz_t(), 4);
    if (r == 3) {
      ops.push_back(Op::Inc);
      m = (m - 1) / 2;
    } else if (r == 0) {
      ops.push_back(Op::Dec);
      m /= 2;
    } else {
      ops.push_back(Op::Inv);
      m -= 2;
    }
  }
  Rational v = m == 0 ? Rational(0) : (m == 1 ? Rational(1) : Rational(-1));
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
    switch (*it) {
      case Op::Inc:
        v += 1;
        break;
      case Op::Dec:
        v -= 1;
        break;
      case Op::Inv:
        if (v == 0) throw std::logic_error("tau recurrence divided by zero");
        v = 1 / v;
        break;
    }
  }
  return v;
}

std::vector<Nat> cf_terms(const Rational& r) {
  if (r <= 0) throw std::invalid_argument("cf_terms needs a positive rational");
  std::vector<Nat> out;
  Int num = r.get_num();
  Int den = r.get_den();
  while (den != 0) {
    Int a, rem;
    mpz_fdiv_qr(a.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    out.push_back(a);
    num = den;
    den = rem;
  }
  // Standard expansion ends in a term >= 2 (or is a single term); rewrite
  // the tail a as (a - 1), 1.
  out.back() -= 1;
  out.push_back(1);
  return out;
}

Nat cf_encode(const std::vector<Nat>& terms) {
  if (terms.size() < 2) throw std::invalid_argument("cf_encode needs at least two terms");
  if (terms.front() < 0) throw std::invalid_argument("cf_encode: a_0 must be >= 0");
  for (std::size_t j = 1; j < terms.size(); ++j) {
    if (terms[j] < 1) throw std::invalid_argument("cf_encode: a_j must be >= 1 for j >= 1");
  }
  if (terms.back() != 1) throw std::invalid_argument("cf_encode: last term must be 1");
  std::size_t d = terms.size() - 1;
  Nat e;
  mpz_ui_pow_ui(e.get_mpz_t(), 2, 0);
  mpz_mul_2exp(e.get_mpz_t(), e.get_mpz_t(), terms[d - 1].get_ui());
  for (std::size_t k = d - 1; k-- > 0;) {
    e += 1;
    mpz_mul_2exp(e.get_mpz_t(), e.get_mpz_t(), terms[k].get_ui());
  }
  return e;
}

Rational cf_value(const std::vector<Nat>& terms) {
  if (terms.empty()) throw std::invalid_argument("cf_value needs at least one term");
  Rational v(terms.back());
  for (std::size_t k = terms.size() - 1; k-- > 0;) v = Rational(terms[k]) + 1 / v;
  return v;
}

Nat q_pos_inverse(const Rational& r) { return cf_encode(cf_terms(r)); }

Nat tau_inverse(const Rational& r) {
  if (r == 0) return 0;
  if (r > 0) return 2 * q_pos_inverse(r) - 1;
  return 2 * q_pos_inverse(-r);
}

Int zigzag(const Nat& n) {
  Int half = (n + 1) / 2;
  return mpz_odd_p(n.get_mpz_t()) ? Int(-half) : half;
}

Nat zigzag_inverse(const Int& v) {
  if (v > 0) return 2 * v;
  if (v < 0) return -2 * v - 1;
  return 0;
}

}  // namespace dprm::pres
