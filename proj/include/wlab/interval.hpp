#pragma once

#include <optional>
#include <string>

#include "wlab/dyadic.hpp"
#include "wlab/rational.hpp"

namespace wlab {

// Closed real interval with exact dyadic endpoints. Additions and
// multiplications are exact (mantissas grow); long evaluation chains call
// ir_round to re-round outward at a working precision.
struct IntervalR {
  Dyadic lo, hi;

  IntervalR() = default;
  IntervalR(const Dyadic& l, const Dyadic& h) : lo(l), hi(h) {}
  static IntervalR point(const Dyadic& d) { return {d, d}; }

  Dyadic width() const { return dy_sub(hi, lo); }
  Dyadic mid() const { return dy_shift(dy_add(lo, hi), -1); }
  bool contains_zero() const { return lo.sgn() <= 0 && hi.sgn() >= 0; }
};

IntervalR ir_add(const IntervalR& a, const IntervalR& b);
IntervalR ir_sub(const IntervalR& a, const IntervalR& b);
IntervalR ir_neg(const IntervalR& a);
IntervalR ir_mul(const IntervalR& a, const IntervalR& b);
IntervalR ir_abs(const IntervalR& a);
IntervalR ir_pow_ui(const IntervalR& a, unsigned long k);
IntervalR ir_hull(const IntervalR& a, const IntervalR& b);
std::optional<IntervalR> ir_intersect(const IntervalR& a, const IntervalR& b);
// Outward rounding to granularity 2^-prec.
IntervalR ir_round(const IntervalR& a, long prec);
// Reciprocal / quotient; the denominator interval must exclude zero.
IntervalR ir_recip(const IntervalR& a, long prec);
IntervalR ir_div(const IntervalR& a, const IntervalR& b, long prec);
IntervalR ir_scale(const IntervalR& a, const Dyadic& s);

bool ir_contains(const IntervalR& a, const mpq_class& q);
// Enclosure of a single rational point, outward at 2^-prec.
IntervalR ir_from_mpq(const mpq_class& q, long prec);
IntervalR ir_from_mpq_pair(const mpq_class& lo, const mpq_class& hi, long prec);

Dyadic ir_abs_upper(const IntervalR& a);
Dyadic ir_abs_lower(const IntervalR& a);

// Complex rectangle.
struct IntervalC {
  IntervalR re, im;

  IntervalC() = default;
  IntervalC(const IntervalR& r, const IntervalR& i) : re(r), im(i) {}
  static IntervalC point(const Dyadic& r, const Dyadic& i) {
    return {IntervalR::point(r), IntervalR::point(i)};
  }

  Dyadic width() const { return dy_max(re.width(), im.width()); }
  bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
};

IntervalC ic_add(const IntervalC& a, const IntervalC& b);
IntervalC ic_sub(const IntervalC& a, const IntervalC& b);
IntervalC ic_neg(const IntervalC& a);
IntervalC ic_mul(const IntervalC& a, const IntervalC& b);
IntervalC ic_scale_real(const IntervalC& a, const IntervalR& s);
IntervalC ic_round(const IntervalC& a, long prec);
IntervalC ic_hull(const IntervalC& a, const IntervalC& b);
// |z|^2 as a real interval; exact, avoids square roots in comparisons.
IntervalR ic_abs_sq(const IntervalC& a);
Dyadic ic_abs_upper(const IntervalC& a, long prec);
Dyadic ic_abs_lower(const IntervalC& a, long prec);
// z / w via conj(w)/|w|^2; |w|^2 must exclude zero.
IntervalC ic_div(const IntervalC& a, const IntervalC& b, long prec);

bool ic_contains(const IntervalC& a, const RationalComplex& q);
IntervalC ic_from_rc(const RationalComplex& q, long prec);

// Enclosure of 2^{p/q} (q >= 1) at granularity 2^-prec.
IntervalR pow2_frac(long p, unsigned long q, long prec);

// Enclosure of exp over an interval; uses exact Taylor partial sums in
// rationals plus argument halving, then outward rounding.
IntervalR exp_enclosure(const IntervalR& x, long prec);
Dyadic exp_lower(const Dyadic& x, long prec);
Dyadic exp_upper(const Dyadic& x, long prec);

std::string ir_to_string(const IntervalR& a);
std::string ic_to_string(const IntervalC& a);

}  // namespace wlab
