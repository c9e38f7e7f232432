#pragma once

#include <string>

#include "wlab/dyadic.hpp"
#include "wlab/nat.hpp"

namespace wlab {

// Gaussian rational in canonical form: mpq_class keeps fractions reduced
// with positive denominator, which is what the encoding layer relies on.
struct RationalComplex {
  mpq_class re, im;

  RationalComplex() = default;
  RationalComplex(const mpq_class& r, const mpq_class& i) : re(r), im(i) {}
  explicit RationalComplex(long r) : re(r), im(0) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }
};

inline bool operator==(const RationalComplex& a, const RationalComplex& b) {
  return a.re == b.re && a.im == b.im;
}
inline bool operator!=(const RationalComplex& a, const RationalComplex& b) {
  return !(a == b);
}

RationalComplex rc_add(const RationalComplex& a, const RationalComplex& b);
RationalComplex rc_sub(const RationalComplex& a, const RationalComplex& b);
RationalComplex rc_mul(const RationalComplex& a, const RationalComplex& b);
RationalComplex rc_neg(const RationalComplex& a);
RationalComplex rc_scale(const RationalComplex& a, const mpq_class& s);
// Multiply by i^k (k mod 4); exact unit rotation.
RationalComplex rc_mul_ipow(const RationalComplex& a, long k);
mpq_class rc_abs_sq(const RationalComplex& a);

RationalComplex rc_from_dyadic(const Dyadic& re, const Dyadic& im);

std::string rc_to_string(const RationalComplex& a);

mpq_class mpq_of(long num, long den);

}  // namespace wlab
