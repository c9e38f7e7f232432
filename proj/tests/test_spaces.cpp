#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <vector>

#include "wlab/spaces.hpp"

using namespace wlab;

namespace {

// First 128 fractional bits of pi; one rational below 2^-128 from the truth
// serves as the approximation at every tested position.
mpq_class pi_reference() {
  mpz_class frac("243F6A8885A308D313198A2E03707344", 16);
  mpz_class den = mpz_class(1) << 128;
  mpq_class q(3 * den + frac, den);
  q.canonicalize();
  return q;
}

RationalComplex rc(long re_num, long re_den, long im_num, long im_den) {
  return RationalComplex(mpq_class(re_num, re_den), mpq_class(im_num, im_den));
}

}  // namespace

TEST_CASE("natural and enumeration names follow the stream conventions") {
  CHECK(nat_value(nat_name(Nat(7))) == 7);
  // 0 skips, k+1 lists k; repeats collapse, order of first listing is kept.
  Name p = enum_name({3, 1, 3});
  auto pre = enum_prefix(p, 10);
  REQUIRE(pre.size() == 2);
  CHECK(pre[0] == 3);
  CHECK(pre[1] == 1);
  // The stream is eventually 0, so its finite prefix decides membership.
  // Reading it as an open set lists {1, 3}; reading the same stream as a
  // closed set (complement enumeration) must yield exactly the other
  // naturals.
  std::set<Nat> open(pre.begin(), pre.end());
  for (unsigned long k = 0; k <= 8; ++k) {
    bool in_open = open.count(Nat(k)) > 0;
    CHECK(in_open == (k == 1 || k == 3));
  }
}

TEST_CASE("real names: exact rationals, a reference constant, enclosures") {
  Name half = real_name(mpq_class(1, 2));
  IntervalR e = real_enclosure(half, 10);
  CHECK(ir_contains(e, mpq_class(1, 2)));
  CHECK(e.width().to_mpq() < mpq_class(mpz_class(1), pow2(10)));

  mpq_class pi = pi_reference();
  Name piname = real_name_fn([pi](unsigned long) { return pi; });
  IntervalR pe = real_enclosure(piname, 20);
  // Independent decimal reference.
  CHECK(ir_contains(pe, mpq_class(mpz_class("3141592653589793"),
                                  mpz_class("1000000000000000"))));
  CHECK(pe.width().to_mpq() < mpq_class(mpz_class(1), pow2(20)));

  // Successive enclosures intersect: they all contain the point.
  for (unsigned long n = 0; n < 20; ++n) {
    CHECK(ir_intersect(real_enclosure(piname, n), real_enclosure(piname, n + 1))
              .has_value());
  }

  // Enclosure-driven construction: sqrt(2) from dyadic bracketing.
  Name rt2 = real_name_from_enclosures([](long prec) {
    Dyadic lo = dy_sqrt_floor(Dyadic(2), prec + 2);
    Dyadic hi = dy_sqrt_ceil(Dyadic(2), prec + 2);
    return IntervalR{lo, hi};
  });
  IntervalR re = real_enclosure(rt2, 24);
  IntervalR ref = pow2_frac(1, 2, 30);
  CHECK(ir_intersect(re, ref).has_value());
  CHECK(re.width().to_mpq() < mpq_class(mpz_class(1), pow2(24)));
}

TEST_CASE("complex names carry rational complex codes") {
  RationalComplex z = rc(3, 1, -4, 1);
  Name p = complex_name(z);
  IntervalC e = complex_enclosure(p, 12);
  CHECK(ic_contains(e, z));
  CHECK(e.width().to_mpq() < mpq_class(mpz_class(1), pow2(12)));
  for (unsigned long n = 0; n < 12; ++n) {
    IntervalC a = complex_enclosure(p, n), b = complex_enclosure(p, n + 1);
    CHECK(ir_intersect(a.re, b.re).has_value());
    CHECK(ir_intersect(a.im, b.im).has_value());
  }
}

TEST_CASE("constant-polynomial function names return their polynomial") {
  RationalPoly2 q;
  q.set(2, 0, rc(1, 1, 0, 1));
  q.set(0, 1, rc(0, 1, 1, 2));
  Name f = cfun_name_const_poly(q);
  for (unsigned long n : {0ul, 3ul, 9ul}) {
    CHECK(cfun_poly(f, n) == q);
  }
}

TEST_CASE("pointwise evaluation of function names stays within tolerance") {
  // Constant 1.
  RationalPoly2 one;
  one.set(0, 0, rc(1, 1, 0, 1));
  Name fone = cfun_name_const_poly(one);
  Name z = complex_name(rc(3, 10, 2, 5));
  for (unsigned long n : {4ul, 10ul, 16ul}) {
    IntervalC e = cont_eval(fone, z, n);
    CHECK(ic_contains(e, rc(1, 1, 0, 1)));
    CHECK(e.width().to_mpq() < mpq_class(mpz_class(1), pow2(n)));
  }

  // z^2 at exact and named arguments.
  ZPoly zsq = {RationalComplex(), RationalComplex(),
               RationalComplex(mpq_class(1), mpq_class(0))};
  Name fsq = cfun_name_z([zsq](unsigned long) { return zsq; });
  IntervalC at1 = cont_eval(fsq, rc(1, 1, 0, 1), 14);
  CHECK(ic_contains(at1, rc(1, 1, 0, 1)));
  // ((1+i)/2)^2 = i/2.
  IntervalC ati = cont_eval(fsq, complex_name(rc(1, 2, 1, 2)), 14);
  CHECK(ic_contains(ati, rc(0, 1, 1, 2)));
  CHECK(ati.width().to_mpq() < mpq_class(mpz_class(1), pow2(14)));
}

TEST_CASE("tupling: pairwise and countable projections recover members") {
  Name a = nat_name(Nat(5)), b = enum_name({2, 4});
  Name t = tuple2(a, b);
  CHECK(project2(t, 0).at(3ul) == 5);
  CHECK(project2(t, 1).at(0ul) == 3);  // 2 listed as 3

  Name fam = tuple_family([](const Nat& i) { return name_const(i * i); });
  for (unsigned long i : {0ul, 1ul, 7ul}) {
    CHECK(project_family(fam, Nat(i)).at(2ul) == Nat(i * i));
  }
  // cons/tail shift by one position.
  Name c = name_cons(Nat(9), a);
  CHECK(c.at(0ul) == 9);
  CHECK(c.at(4ul) == 5);
  CHECK(name_tail(c).at(0ul) == 5);
}
