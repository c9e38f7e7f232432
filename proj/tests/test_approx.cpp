#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "wlab/approx.hpp"

using namespace wlab;

namespace {

IntervalR point_q(const mpq_class& q, long prec) { return ir_from_mpq(q, prec); }

// Enclosure width as a dyadic upper bound check.
bool width_below(const IntervalR& v, long k) {
  return dy_cmp(v.width(), dy_pow2(-k)) <= 0;
}

bool intersects(const IntervalR& a, const IntervalR& b) {
  return ir_intersect(a, b).has_value();
}

}  // namespace

TEST_CASE("derivative polynomial recursion produces the expected data") {
  const std::vector<mpz_class>& p0 = bump_poly(0);
  REQUIRE(p0.size() == 1);
  CHECK(p0[0] == 1);

  // One recursion step: p_1 = -2x.
  const std::vector<mpz_class>& p1 = bump_poly(1);
  REQUIRE(p1.size() == 2);
  CHECK(p1[0] == 0);
  CHECK(p1[1] == -2);

  // Second step: p_2 = 6x^4 - 2.
  const std::vector<mpz_class>& p2 = bump_poly(2);
  REQUIRE(p2.size() == 5);
  CHECK(p2[0] == -2);
  CHECK(p2[1] == 0);
  CHECK(p2[2] == 0);
  CHECK(p2[3] == 0);
  CHECK(p2[4] == 6);

  // The degree lands at 3n-2 for n >= 1 (the head claim of 3n overshoots);
  // coefficients stay within (17n-7)^n.
  for (unsigned long n = 1; n <= 6; ++n) {
    const std::vector<mpz_class>& pn = bump_poly(n);
    CHECK(pn.size() == 3 * n - 1);
    CHECK(pn.back() != 0);
    mpz_class bound = 1, base = 17 * static_cast<long>(n) - 7;
    for (unsigned long t = 0; t < n; ++t) bound *= base;
    for (const mpz_class& c : pn) CHECK(abs(c) <= bound);
  }
}

TEST_CASE("bump enclosures match the closed-form values") {
  // f(0) = 1 exactly.
  IntervalR at0 = bump_deriv_on(IntervalR::point(Dyadic()), 0, 30);
  CHECK(ir_contains(at0, mpq_class(1)));
  CHECK(width_below(at0, 28));

  // f(1/2) = e^{-1/3}: (1/4)/((1/4)-1) = -1/3. Independent value via the
  // generic exp enclosure on the exact argument.
  IntervalR athalf = bump_deriv_on(IntervalR::point(dy_pow2(-1)), 0, 30);
  IntervalR ref = exp_enclosure(ir_from_mpq(mpq_of(-1, 3), 40), 36);
  CHECK(intersects(athalf, ref));
  CHECK(width_below(athalf, 28));

  // Boundary and beyond: exactly zero outside the open support.
  IntervalR at1 = bump_deriv_on(IntervalR::point(Dyadic(1)), 0, 30);
  CHECK(ir_contains(at1, mpq_class(0)));
  IntervalR at2 = bump_deriv_on(IntervalR::point(Dyadic(2)), 0, 30);
  CHECK(at2.lo.is_zero());
  CHECK(at2.hi.is_zero());
  IntervalR far = bump_deriv_on(IntervalR(Dyadic(3), Dyadic(9)), 4, 20);
  CHECK(far.lo.is_zero());
  CHECK(far.hi.is_zero());

  // First derivative vanishes at 0 (p_1 = -2x) and is negative at 1/2.
  IntervalR d1 = bump_deriv_on(IntervalR::point(Dyadic()), 1, 30);
  CHECK(ir_contains(d1, mpq_class(0)));
  CHECK(width_below(d1, 28));
  IntervalR d1h = bump_deriv_on(IntervalR::point(dy_pow2(-1)), 1, 30);
  CHECK(d1h.hi.sgn() < 0);
}

TEST_CASE("boxes straddling the support boundary stay sound") {
  IntervalR box(dy_sub(Dyadic(1), dy_pow2(-6)), dy_add(Dyadic(1), dy_pow2(-6)));
  for (unsigned long m = 0; m <= 3; ++m) {
    IntervalR enc = bump_deriv_on(box, m, 24);
    CHECK(ir_contains(enc, mpq_class(0)));
    // An interior point of the box must land inside the box enclosure.
    IntervalR pt = bump_deriv_on(
        IntervalR::point(dy_sub(Dyadic(1), dy_pow2(-7))), m, 40);
    CHECK(intersects(enc, pt));
  }
}

TEST_CASE("difference quotients validate the derivative chain") {
  // (f^{(m-1)}(x+h) - f^{(m-1)}(x-h)) / 2h lies in f^{(m)}([x-h, x+h]) by
  // the mean value theorem; this ties each derivative order to the previous
  // one without reusing the recursion that produced it.
  std::vector<mpq_class> xs = {mpq_class(0), mpq_of(1, 3), mpq_of(-1, 2),
                               mpq_of(3, 5), mpq_of(-7, 9)};
  long hbits = 12;
  Dyadic h = dy_pow2(-hbits);
  for (unsigned long m = 1; m <= 4; ++m) {
    for (const mpq_class& xq : xs) {
      IntervalR x = point_q(xq, 60);
      IntervalR hi_pt(dy_add(x.lo, h), dy_add(x.hi, h));
      IntervalR lo_pt(dy_sub(x.lo, h), dy_sub(x.hi, h));
      IntervalR num = ir_sub(bump_deriv_on(hi_pt, m - 1, 60),
                             bump_deriv_on(lo_pt, m - 1, 60));
      IntervalR quot = ir_scale(num, dy_pow2(hbits - 1));
      IntervalR wide = bump_deriv_on(IntervalR(lo_pt.lo, hi_pt.hi), m, 30);
      CHECK(intersects(quot, wide));
    }
  }
}

TEST_CASE("shifted and weighted terms follow the Leibniz rule") {
  // T(x) = x^{-2} f(x - 7/2), supported on [5/2, 9/2].
  TermFamily fam{{mpq_class(1), mpq_of(7, 2), 2}};
  IntervalR at_c = family_deriv_on(fam, 0, point_q(mpq_of(7, 2), 50), 30);
  // T(7/2) = (7/2)^{-2} = 4/49.
  CHECK(ir_contains(at_c, mpq_of(4, 49)));
  CHECK(width_below(at_c, 27));

  // Exactly zero off the support.
  IntervalR off = family_deriv_on(fam, 1, IntervalR(Dyadic(5), Dyadic(7)), 30);
  CHECK(off.lo.is_zero());
  CHECK(off.hi.is_zero());

  // Difference-quotient containment for the composite term.
  Dyadic h = dy_pow2(-12);
  for (unsigned long m = 1; m <= 3; ++m) {
    for (const mpq_class& xq : {mpq_of(7, 2), mpq_class(3), mpq_of(15, 4)}) {
      IntervalR x = point_q(xq, 60);
      IntervalR hi_pt(dy_add(x.lo, h), dy_add(x.hi, h));
      IntervalR lo_pt(dy_sub(x.lo, h), dy_sub(x.hi, h));
      IntervalR num = ir_sub(family_deriv_on(fam, m - 1, hi_pt, 60),
                             family_deriv_on(fam, m - 1, lo_pt, 60));
      IntervalR quot = ir_scale(num, dy_pow2(11));
      IntervalR wide = family_deriv_on(fam, m, IntervalR(lo_pt.lo, hi_pt.hi), 30);
      CHECK(intersects(quot, wide));
    }
  }

  // A term whose x^{-k} support promise is violated must be rejected.
  TermFamily bad{{mpq_class(1), mpq_class(1), 3}};
  CHECK_THROWS_AS(family_deriv_on(bad, 0, IntervalR(Dyadic(0), Dyadic(2)), 10),
                  std::logic_error);
}

TEST_CASE("supremum search matches known maxima") {
  TermFamily fam{{mpq_class(1), mpq_class(0), 0}};
  // sup |f| = f(0) = 1.
  IntervalR s00 = family_sup_abs(fam, 0, 0, 12);
  CHECK(ir_contains(s00, mpq_class(1)));
  CHECK(width_below(s00, 12));

  // sup |x f(x)|: sampled lower bounds must stay below the upper enclosure,
  // and the enclosure is tight to 2^-10.
  IntervalR s10 = family_sup_abs(fam, 1, 0, 10);
  CHECK(width_below(s10, 10));
  Dyadic best;
  for (long i = -63; i <= 63; ++i) {
    Dyadic x(i, -6);
    IntervalR v = ir_abs(ir_mul(IntervalR::point(x),
                                bump_deriv_on(IntervalR::point(x), 0, 40)));
    best = dy_max(best, v.lo);
  }
  CHECK(dy_cmp(s10.hi, best) >= 0);
  bool lower_near_samples = dy_cmp(s10.lo, dy_sub(best, dy_pow2(-9))) >= 0;
  CHECK(lower_near_samples);
  // Weighted sup never exceeds sup |x| * sup |f| = 1 on the support.
  CHECK(dy_cmp(s10.hi, dy_add(Dyadic(1), dy_pow2(-8))) <= 0);

  // A shifted copy doubles the reach: sup |x f(x-3)| is near 3.
  TermFamily shifted{{mpq_class(1), mpq_class(3), 0}};
  IntervalR s3 = family_sup_abs(shifted, 1, 0, 8);
  CHECK(dy_cmp(s3.hi, Dyadic(2)) >= 0);
  CHECK(dy_cmp(s3.hi, Dyadic(4)) <= 0);
}

TEST_CASE("threshold certification accepts true bounds and rejects breaches") {
  TermFamily fam{{mpq_class(1), mpq_class(0), 0}};
  BoxFn1 e = [&fam](const IntervalR& b, long p) {
    return family_deriv_on(fam, 0, b, p);
  };
  BoxFn1 de = [&fam](const IntervalR& b, long p) {
    return family_deriv_on(fam, 1, b, p);
  };
  IntervalR dom(Dyadic(-1), Dyadic(1));
  // sup f = 1: strictly below 9/8, certainly not below 1/2.
  CHECK(certify_below(e, de, dom, mpq_of(9, 8), 20));
  CHECK_FALSE(certify_below(e, de, dom, mpq_of(1, 2), 20));
}

TEST_CASE("certified slice approximants meet their budget") {
  TermFamily fam{{mpq_class(1), mpq_class(0), 0}};
  struct Slice {
    unsigned long n, m, j;
  };
  for (Slice s : {Slice{1, 0, 10}, Slice{1, 1, 8}, Slice{2, 0, 8}}) {
    ZPoly p = certified_slice_poly(fam, s.n, s.m, s.j);
    // Independent audit: exact polynomial values against tight closed-form
    // enclosures on a rational grid.
    mpq_class tol(mpz_class(1), pow2(s.j));
    long nn = static_cast<long>(s.n);
    for (long i = -20; i <= 20; ++i) {
      mpq_class x = mpq_class(i * nn) / 20;
      RationalComplex pv = zpoly_eval(p, RationalComplex(x, mpq_class(0)));
      CHECK(pv.im == 0);
      IntervalR fv = bump_deriv_on(point_q(x, 60), s.m, 40);
      IntervalR err = ir_sub(ir_from_mpq(pv.re, 60), fv);
      CHECK(dy_cmp(ir_abs(err).hi, dy_from_mpq_ceil(tol, 40)) <= 0);
    }
  }

  // Multi-term family over a wider window.
  TermFamily two{{mpq_of(2, 3), mpq_class(0), 0}, {mpq_of(1, 2), mpq_of(3, 2), 0}};
  ZPoly p = certified_slice_poly(two, 3, 0, 8);
  for (long i = -30; i <= 30; ++i) {
    mpq_class x = mpq_class(i) / 10;
    RationalComplex pv = zpoly_eval(p, RationalComplex(x, mpq_class(0)));
    IntervalR fv = family_deriv_on(two, 0, point_q(x, 60), 40);
    IntervalR err = ir_sub(ir_from_mpq(pv.re, 60), fv);
    CHECK(dy_cmp(ir_abs(err).hi, dy_pow2(-8)) <= 0);
  }

  // Degenerate window [0,0]: constant approximant at the midpoint value.
  ZPoly c0 = certified_slice_poly(fam, 0, 0, 12);
  REQUIRE(c0.size() == 1);
  IntervalR at0 = bump_deriv_on(IntervalR::point(Dyadic()), 0, 40);
  IntervalR err = ir_sub(ir_from_mpq(c0[0].re, 60), at0);
  CHECK(dy_cmp(ir_abs(err).hi, dy_pow2(-12)) <= 0);

  // Empty family: the zero polynomial.
  CHECK(certified_slice_poly({}, 2, 1, 10).empty());
}
