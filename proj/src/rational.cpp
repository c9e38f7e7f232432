#include "wlab/rational.hpp"

namespace wlab {

RationalComplex rc_add(const RationalComplex& a, const RationalComplex& b) {
  return {a.re + b.re, a.im + b.im};
}

RationalComplex rc_sub(const RationalComplex& a, const RationalComplex& b) {
  return {a.re - b.re, a.im - b.im};
}

RationalComplex rc_mul(const RationalComplex& a, const RationalComplex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

RationalComplex rc_neg(const RationalComplex& a) { return {-a.re, -a.im}; }

RationalComplex rc_scale(const RationalComplex& a, const mpq_class& s) {
  return {a.re * s, a.im * s};
}

RationalComplex rc_mul_ipow(const RationalComplex& a, long k) {
  long m = ((k % 4) + 4) % 4;
  switch (m) {
    case 0: return a;
    case 1: return {-a.im, a.re};
    case 2: return {-a.re, -a.im};
    default: return {a.im, -a.re};
  }
}

mpq_class rc_abs_sq(const RationalComplex& a) {
  return a.re * a.re + a.im * a.im;
}

RationalComplex rc_from_dyadic(const Dyadic& re, const Dyadic& im) {
  return {re.to_mpq(), im.to_mpq()};
}

std::string rc_to_string(const RationalComplex& a) {
  std::string s = a.re.get_str();
  if (a.im != 0) {
    s += (a.im > 0 ? "+" : "") + a.im.get_str() + "i";
  }
  return s;
}

mpq_class mpq_of(long num, long den) {
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace wlab
