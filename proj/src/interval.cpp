#include "wlab/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace wlab {

IntervalR ir_add(const IntervalR& a, const IntervalR& b) {
  return {dy_add(a.lo, b.lo), dy_add(a.hi, b.hi)};
}

IntervalR ir_sub(const IntervalR& a, const IntervalR& b) {
  return {dy_sub(a.lo, b.hi), dy_sub(a.hi, b.lo)};
}

IntervalR ir_neg(const IntervalR& a) { return {dy_neg(a.hi), dy_neg(a.lo)}; }

IntervalR ir_mul(const IntervalR& a, const IntervalR& b) {
  Dyadic p1 = dy_mul(a.lo, b.lo);
  Dyadic p2 = dy_mul(a.lo, b.hi);
  Dyadic p3 = dy_mul(a.hi, b.lo);
  Dyadic p4 = dy_mul(a.hi, b.hi);
  return {dy_min(dy_min(p1, p2), dy_min(p3, p4)),
          dy_max(dy_max(p1, p2), dy_max(p3, p4))};
}

IntervalR ir_abs(const IntervalR& a) {
  if (a.lo.sgn() >= 0) return a;
  if (a.hi.sgn() <= 0) return ir_neg(a);
  return {Dyadic(), dy_max(dy_abs(a.lo), a.hi)};
}

IntervalR ir_pow_ui(const IntervalR& a, unsigned long k) {
  if (k == 0) return IntervalR::point(Dyadic(1));
  IntervalR base = (k % 2 == 0) ? ir_abs(a) : a;
  // Monotone on the (possibly folded) interval: endpoint powers suffice.
  Dyadic lo = base.lo, hi = base.hi;
  Dyadic plo = lo, phi = hi;
  for (unsigned long i = 1; i < k; ++i) {
    plo = dy_mul(plo, lo);
    phi = dy_mul(phi, hi);
  }
  return {plo, phi};
}

IntervalR ir_hull(const IntervalR& a, const IntervalR& b) {
  return {dy_min(a.lo, b.lo), dy_max(a.hi, b.hi)};
}

std::optional<IntervalR> ir_intersect(const IntervalR& a, const IntervalR& b) {
  Dyadic lo = dy_max(a.lo, b.lo);
  Dyadic hi = dy_min(a.hi, b.hi);
  if (dy_cmp(lo, hi) > 0) return std::nullopt;
  return IntervalR{lo, hi};
}

IntervalR ir_round(const IntervalR& a, long prec) {
  return {dy_floor(a.lo, prec), dy_ceil(a.hi, prec)};
}

IntervalR ir_recip(const IntervalR& a, long prec) {
  if (a.contains_zero()) throw std::domain_error("ir_recip: interval contains zero");
  mpq_class ql = a.lo.to_mpq(), qh = a.hi.to_mpq();
  return {dy_from_mpq_floor(1 / qh, prec), dy_from_mpq_ceil(1 / ql, prec)};
}

IntervalR ir_div(const IntervalR& a, const IntervalR& b, long prec) {
  if (b.contains_zero()) throw std::domain_error("ir_div: divisor contains zero");
  mpq_class al = a.lo.to_mpq(), ah = a.hi.to_mpq();
  mpq_class bl = b.lo.to_mpq(), bh = b.hi.to_mpq();
  mpq_class q1 = al / bl, q2 = al / bh, q3 = ah / bl, q4 = ah / bh;
  mpq_class lo = std::min(std::min(q1, q2), std::min(q3, q4));
  mpq_class hi = std::max(std::max(q1, q2), std::max(q3, q4));
  return {dy_from_mpq_floor(lo, prec), dy_from_mpq_ceil(hi, prec)};
}

IntervalR ir_scale(const IntervalR& a, const Dyadic& s) {
  Dyadic p1 = dy_mul(a.lo, s), p2 = dy_mul(a.hi, s);
  return {dy_min(p1, p2), dy_max(p1, p2)};
}

bool ir_contains(const IntervalR& a, const mpq_class& q) {
  return a.lo.to_mpq() <= q && q <= a.hi.to_mpq();
}

IntervalR ir_from_mpq(const mpq_class& q, long prec) {
  return {dy_from_mpq_floor(q, prec), dy_from_mpq_ceil(q, prec)};
}

IntervalR ir_from_mpq_pair(const mpq_class& lo, const mpq_class& hi, long prec) {
  return {dy_from_mpq_floor(lo, prec), dy_from_mpq_ceil(hi, prec)};
}

Dyadic ir_abs_upper(const IntervalR& a) { return dy_max(dy_abs(a.lo), dy_abs(a.hi)); }

Dyadic ir_abs_lower(const IntervalR& a) {
  if (a.contains_zero()) return Dyadic();
  return dy_min(dy_abs(a.lo), dy_abs(a.hi));
}

IntervalC ic_add(const IntervalC& a, const IntervalC& b) {
  return {ir_add(a.re, b.re), ir_add(a.im, b.im)};
}

IntervalC ic_sub(const IntervalC& a, const IntervalC& b) {
  return {ir_sub(a.re, b.re), ir_sub(a.im, b.im)};
}

IntervalC ic_neg(const IntervalC& a) { return {ir_neg(a.re), ir_neg(a.im)}; }

IntervalC ic_mul(const IntervalC& a, const IntervalC& b) {
  return {ir_sub(ir_mul(a.re, b.re), ir_mul(a.im, b.im)),
          ir_add(ir_mul(a.re, b.im), ir_mul(a.im, b.re))};
}

IntervalC ic_scale_real(const IntervalC& a, const IntervalR& s) {
  return {ir_mul(a.re, s), ir_mul(a.im, s)};
}

IntervalC ic_round(const IntervalC& a, long prec) {
  return {ir_round(a.re, prec), ir_round(a.im, prec)};
}

IntervalC ic_hull(const IntervalC& a, const IntervalC& b) {
  return {ir_hull(a.re, b.re), ir_hull(a.im, b.im)};
}

IntervalR ic_abs_sq(const IntervalC& a) {
  return ir_add(ir_pow_ui(a.re, 2), ir_pow_ui(a.im, 2));
}

Dyadic ic_abs_upper(const IntervalC& a, long prec) {
  return dy_sqrt_ceil(ic_abs_sq(a).hi, prec);
}

Dyadic ic_abs_lower(const IntervalC& a, long prec) {
  IntervalR sq = ic_abs_sq(a);
  if (sq.lo.sgn() <= 0) return Dyadic();
  return dy_sqrt_floor(sq.lo, prec);
}

IntervalC ic_div(const IntervalC& a, const IntervalC& b, long prec) {
  IntervalR den = ic_abs_sq(b);
  if (den.contains_zero()) throw std::domain_error("ic_div: divisor may contain zero");
  IntervalC conj{b.re, ir_neg(b.im)};
  IntervalC num = ic_mul(a, conj);
  return {ir_div(num.re, den, prec), ir_div(num.im, den, prec)};
}

bool ic_contains(const IntervalC& a, const RationalComplex& q) {
  return ir_contains(a.re, q.re) && ir_contains(a.im, q.im);
}

IntervalC ic_from_rc(const RationalComplex& q, long prec) {
  return {ir_from_mpq(q.re, prec), ir_from_mpq(q.im, prec)};
}

IntervalR pow2_frac(long p, unsigned long q, long prec) {
  if (q == 0) throw std::domain_error("pow2_frac: zero root index");
  if (q == 1) {
    Dyadic v(mpz_class(1), p);
    return IntervalR::point(v);
  }
  // floor(2^{p/q} * 2^s) = floor((2^{p + q s})^{1/q}); raise s until exponent
  // is nonnegative.
  long s = prec;
  while (p + static_cast<long>(q) * s < 0) ++s;
  unsigned long e = static_cast<unsigned long>(p + static_cast<long>(q) * s);
  mpz_class n;
  mpz_ui_pow_ui(n.get_mpz_t(), 2, e);
  mpz_class r;
  int exact = mpz_root(r.get_mpz_t(), n.get_mpz_t(), q);
  Dyadic lo(r, -s);
  if (exact) return IntervalR::point(lo);
  return {lo, Dyadic(r + 1, -s)};
}

namespace {

// Enclosure of exp(d) for dyadic d: argument halving to |y| <= 1/2, a
// fixed-point Taylor sum with a certified remainder, then repeated interval
// squaring with outward rounding.
IntervalR exp_point(const Dyadic& d, long prec) {
  if (d.is_zero()) return IntervalR::point(Dyadic(1));
  Dyadic a = dy_abs(d);
  long s = 0;
  // Smallest s with |d| * 2^-s <= 1/2.
  Dyadic half = dy_pow2(-1);
  while (dy_cmp(dy_shift(a, -s), half) > 0) ++s;
  long guard = prec + 2 * s + 8;
  long terms = guard + 2;
  // All Taylor arithmetic at scale 2^-fix with floor-directed integer ops;
  // each step drifts by at most one unit, and |y| <= 1/2 keeps the
  // accumulated term drift under 4 units.
  long fix = guard + 16;
  mpq_class yq = dy_shift(d, -s).to_mpq();
  yq <<= static_cast<unsigned long>(fix);
  mpz_class yfix = yq.get_num() / yq.get_den();  // truncation adds one unit
  mpz_class one = 1;
  one <<= static_cast<unsigned long>(fix);
  mpz_class sum = one, term = one;
  for (long j = 1; j <= terms; ++j) {
    term *= yfix;
    mpz_fdiv_q_2exp(term.get_mpz_t(), term.get_mpz_t(),
                    static_cast<unsigned long>(fix));
    mpz_fdiv_q_ui(term.get_mpz_t(), term.get_mpz_t(),
                  static_cast<unsigned long>(j));
    sum += term;
    if (term == 0 && j > 1) break;
  }
  // |remainder| <= 2 |y|^{terms+1} <= 2^-terms, plus 8 terms + 8 units of
  // directed rounding drift.
  mpz_class slop = 8 * terms + 8;
  slop += mpz_class(1) << static_cast<unsigned long>(fix - terms);
  mpz_class vlo = sum - slop, vhi = sum + slop;
  IntervalR v(Dyadic(vlo, -fix), Dyadic(vhi, -fix));
  for (long i = 0; i < s; ++i) {
    v = ir_round(ir_mul(v, v), guard + 4);
  }
  return ir_round(v, prec);
}

}  // namespace

IntervalR exp_enclosure(const IntervalR& x, long prec) {
  if (dy_cmp(x.lo, x.hi) == 0) return exp_point(x.lo, prec);
  return {exp_point(x.lo, prec).lo, exp_point(x.hi, prec).hi};
}

Dyadic exp_lower(const Dyadic& x, long prec) { return exp_point(x, prec).lo; }
Dyadic exp_upper(const Dyadic& x, long prec) { return exp_point(x, prec).hi; }

std::string ir_to_string(const IntervalR& a) {
  return "[" + a.lo.to_decimal() + ", " + a.hi.to_decimal() + "]";
}

std::string ic_to_string(const IntervalC& a) {
  return "re " + ir_to_string(a.re) + " im " + ir_to_string(a.im);
}

}  // namespace wlab
