#include "wlab/dyadic.hpp"

#include <stdexcept>

namespace wlab {

void Dyadic::normalize() {
  if (man == 0) {
    exp = 0;
    return;
  }
  unsigned long tz = mpz_scan1(man.get_mpz_t(), 0);
  if (tz > 0) {
    mpz_fdiv_q_2exp(man.get_mpz_t(), man.get_mpz_t(), tz);
    exp += static_cast<long>(tz);
  }
}

mpq_class Dyadic::to_mpq() const {
  mpq_class q(man);
  if (exp >= 0) {
    mpz_class sc;
    mpz_ui_pow_ui(sc.get_mpz_t(), 2, static_cast<unsigned long>(exp));
    q *= mpq_class(sc);
  } else {
    mpz_class sc;
    mpz_ui_pow_ui(sc.get_mpz_t(), 2, static_cast<unsigned long>(-exp));
    q /= mpq_class(sc);
  }
  q.canonicalize();
  return q;
}

double Dyadic::to_double() const {
  return mpq_get_d(to_mpq().get_mpq_t());
}

std::string Dyadic::to_decimal() const {
  if (man == 0) return "0";
  bool neg = man < 0;
  mpz_class m = abs(man);
  std::string out;
  if (exp >= 0) {
    mpz_class v = m << static_cast<unsigned long>(exp);
    out = v.get_str();
  } else {
    unsigned long k = static_cast<unsigned long>(-exp);
    mpz_class five;
    mpz_ui_pow_ui(five.get_mpz_t(), 5, k);
    mpz_class digits = m * five;  // value = digits / 10^k
    std::string s = digits.get_str();
    if (s.size() <= k) s.insert(0, k + 1 - s.size(), '0');
    out = s.substr(0, s.size() - k) + "." + s.substr(s.size() - k);
    // trim trailing zeros after the point, keep at least one digit
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  return neg ? "-" + out : out;
}

Dyadic dy_neg(const Dyadic& a) {
  Dyadic r;
  r.man = -a.man;
  r.exp = a.exp;
  return r;
}

Dyadic dy_abs(const Dyadic& a) { return a.man < 0 ? dy_neg(a) : a; }

Dyadic dy_add(const Dyadic& a, const Dyadic& b) {
  if (a.man == 0) return b;
  if (b.man == 0) return a;
  long e = a.exp < b.exp ? a.exp : b.exp;
  mpz_class ma = a.man << static_cast<unsigned long>(a.exp - e);
  mpz_class mb = b.man << static_cast<unsigned long>(b.exp - e);
  return Dyadic(ma + mb, e);
}

Dyadic dy_sub(const Dyadic& a, const Dyadic& b) { return dy_add(a, dy_neg(b)); }

Dyadic dy_mul(const Dyadic& a, const Dyadic& b) {
  if (a.man == 0 || b.man == 0) return Dyadic();
  Dyadic r;
  r.man = a.man * b.man;
  r.exp = a.exp + b.exp;
  return r;  // odd * odd stays odd; already normalized
}

Dyadic dy_shift(const Dyadic& a, long k) {
  if (a.man == 0) return a;
  Dyadic r = a;
  r.exp += k;
  return r;
}

int dy_cmp(const Dyadic& a, const Dyadic& b) {
  int sa = a.sgn(), sb = b.sgn();
  if (sa != sb) return sa < sb ? -1 : 1;
  if (sa == 0) return 0;
  Dyadic d = dy_sub(a, b);
  return d.sgn();
}

Dyadic dy_min(const Dyadic& a, const Dyadic& b) { return dy_cmp(a, b) <= 0 ? a : b; }
Dyadic dy_max(const Dyadic& a, const Dyadic& b) { return dy_cmp(a, b) >= 0 ? a : b; }

static Dyadic round_dir(const Dyadic& a, long prec, bool up) {
  // Round to a multiple of 2^-prec. If a already is one, keep it exact.
  long shift = a.exp + prec;
  if (a.man == 0 || shift >= 0) return a;
  mpz_class q;
  if (up) {
    mpz_cdiv_q_2exp(q.get_mpz_t(), a.man.get_mpz_t(),
                    static_cast<unsigned long>(-shift));
  } else {
    mpz_fdiv_q_2exp(q.get_mpz_t(), a.man.get_mpz_t(),
                    static_cast<unsigned long>(-shift));
  }
  return Dyadic(q, -prec);
}

Dyadic dy_floor(const Dyadic& a, long prec) { return round_dir(a, prec, false); }
Dyadic dy_ceil(const Dyadic& a, long prec) { return round_dir(a, prec, true); }

static Dyadic from_mpq_dir(const mpq_class& q, long prec, bool up) {
  // floor/ceil(q * 2^prec) / 2^prec
  mpz_class num = q.get_num(), den = q.get_den();
  if (prec >= 0) {
    num <<= static_cast<unsigned long>(prec);
  } else {
    den <<= static_cast<unsigned long>(-prec);
  }
  mpz_class i;
  if (up) {
    mpz_cdiv_q(i.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  } else {
    mpz_fdiv_q(i.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  }
  return Dyadic(i, -prec);
}

Dyadic dy_from_mpq_floor(const mpq_class& q, long prec) { return from_mpq_dir(q, prec, false); }
Dyadic dy_from_mpq_ceil(const mpq_class& q, long prec) { return from_mpq_dir(q, prec, true); }

Dyadic dy_from_double(double v) {
  if (v == 0.0) return Dyadic();
  mpq_class q(v);  // exact: doubles are dyadic
  mpz_class num = q.get_num(), den = q.get_den();
  unsigned long tz = mpz_scan1(den.get_mpz_t(), 0);
  return Dyadic(num, -static_cast<long>(tz));
}

Dyadic dy_sqrt_floor(const Dyadic& a, long prec) {
  if (a.sgn() < 0) throw std::domain_error("dy_sqrt_floor: negative input");
  if (a.man == 0) return Dyadic();
  // floor(sqrt(a) * 2^prec) via integer sqrt of floor(a * 2^{2 prec}).
  long shift = a.exp + 2 * prec;
  mpz_class n = a.man;
  if (shift >= 0) {
    n <<= static_cast<unsigned long>(shift);
  } else {
    mpz_fdiv_q_2exp(n.get_mpz_t(), n.get_mpz_t(),
                    static_cast<unsigned long>(-shift));
  }
  mpz_class s;
  mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
  return Dyadic(s, -prec);
}

Dyadic dy_sqrt_ceil(const Dyadic& a, long prec) {
  if (a.sgn() < 0) throw std::domain_error("dy_sqrt_ceil: negative input");
  if (a.man == 0) return Dyadic();
  long shift = a.exp + 2 * prec;
  mpz_class n = a.man;
  if (shift >= 0) {
    n <<= static_cast<unsigned long>(shift);
  } else {
    mpz_cdiv_q_2exp(n.get_mpz_t(), n.get_mpz_t(),
                    static_cast<unsigned long>(-shift));
  }
  mpz_class s;
  mpz_sqrtrem(s.get_mpz_t(), n.get_mpz_t(), n.get_mpz_t());
  if (n != 0) s += 1;  // remainder nonzero: round up
  return Dyadic(s, -prec);
}

std::string dy_to_string(const Dyadic& a) { return a.to_decimal(); }

}  // namespace wlab
