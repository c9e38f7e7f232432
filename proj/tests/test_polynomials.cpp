#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "wlab/polynomials.hpp"

using namespace wlab;

namespace {

RationalComplex rcq(long num, long den) {
  return RationalComplex(mpq_of(num, den), mpq_class(0));
}

// Exact expansion of prod (X - r): the independent oracle for every
// root-based instance below.
std::vector<RationalComplex> expand(const std::vector<RationalComplex>& roots) {
  std::vector<RationalComplex> c{RationalComplex(1)};
  for (const RationalComplex& r : roots) {
    std::vector<RationalComplex> n(c.size() + 1);
    for (size_t t = 0; t < c.size(); ++t) {
      n[t + 1] = rc_add(n[t + 1], c[t]);
      n[t] = rc_sub(n[t], rc_mul(r, c[t]));
    }
    c = std::move(n);
  }
  return c;
}

Poly poly_of_roots(const std::vector<RationalComplex>& roots) {
  std::vector<RationalComplex> cs = expand(roots);
  return poly_exact(roots.size(), cs);
}

// Multiset matching: every emitted root consumes one true root within
// 2^-n. Root separations in the corpus dwarf the tolerance, so greedy
// assignment is exact.
bool roots_match(const std::vector<RationalComplex>& emitted,
                 const std::vector<RationalComplex>& truth, long n) {
  if (emitted.size() != truth.size()) return false;
  mpq_class tol2(mpz_class(1), pow2(static_cast<unsigned long>(2 * n)));
  std::vector<char> used(truth.size(), 0);
  for (const RationalComplex& e : emitted) {
    bool hit = false;
    for (size_t i = 0; i < truth.size(); ++i) {
      if (used[i]) continue;
      if (rc_abs_sq(rc_sub(e, truth[i])) <= tol2) {
        used[i] = 1;
        hit = true;
        break;
      }
    }
    if (!hit) return false;
  }
  return true;
}

// Rational roots on a coarse grid, so distinct values are >= 1/4 apart;
// occasional repeats exercise multiplicities.
std::vector<RationalComplex> random_roots(std::mt19937& rng, unsigned d) {
  std::uniform_int_distribution<int> num(-8, 8);
  std::uniform_int_distribution<int> den(0, 2);
  const long dens[3] = {1, 2, 4};
  std::vector<RationalComplex> roots;
  while (roots.size() < d) {
    if (!roots.empty() && (rng() & 7u) == 0) {
      roots.push_back(roots[rng() % roots.size()]);
      continue;
    }
    mpq_class re = mpq_of(num(rng), dens[den(rng)]);
    mpq_class im = (rng() & 1u) ? mpq_of(num(rng), dens[den(rng)]) : mpq_class(0);
    roots.push_back(RationalComplex(re, im));
  }
  return roots;
}

}  // namespace

TEST_CASE("degree bound is the stated head value") {
  CHECK(dbnd(poly_exact(5, {rcq(1, 1), RationalComplex(), rcq(1, 1),
                            RationalComplex(), RationalComplex(),
                            RationalComplex()})) == 5);
  CHECK(dbnd(poly_exact(0, {RationalComplex()})) == 0);
}

TEST_CASE("monic degree detection through half-rule scans") {
  Poly x_minus_1 = poly_exact(
      3, {rcq(-1, 1), rcq(1, 1), RationalComplex(), RationalComplex()});
  CHECK(deg_monic(x_minus_1) == 1);

  Poly quad = poly_exact(2, {rcq(2, 1), rcq(-3, 1), rcq(1, 1)});
  CHECK(deg_monic(quad) == 2);

  // X^3 + (2/5) X with generous padding: the sub-half coefficient at index
  // 1 must not distract the top-down scan.
  std::vector<RationalComplex> cs(8);
  cs[1] = rcq(2, 5);
  cs[3] = rcq(1, 1);
  CHECK(deg_monic(poly_exact(7, cs)) == 3);

  // The zero polynomial never reaches modulus 1/2 anywhere.
  CHECK_THROWS_AS(
      deg_monic(poly_exact(2, {RationalComplex(), RationalComplex(),
                               RationalComplex()})),
      std::domain_error);
}

TEST_CASE("certified isolation on small exact instances") {
  // X - 1: single simple root.
  {
    Poly p = poly_of_roots({rcq(1, 1)});
    RootCertification rc = zeros_monic_certified(p, 16);
    REQUIRE(rc.roots.size() == 1);
    CHECK(roots_match(rc.roots, {rcq(1, 1)}, 16));
    REQUIRE(rc.boxes.size() == 1);
    CHECK(rc.boxes[0].count == 1);
    CHECK(rc.boxes[0].segments >= 4);
    CHECK(rc.boxes[0].radius <= mpq_class(mpz_class(1), pow2(17)));
  }
  // X^2 - 3X + 2: distinct roots 1 and 2.
  {
    Poly p = poly_of_roots({rcq(1, 1), rcq(2, 1)});
    RootCertification rc = zeros_monic_certified(p, 16);
    CHECK(roots_match(rc.roots, {rcq(1, 1), rcq(2, 1)}, 16));
    CHECK(rc.boxes.size() == 2);
  }
  // X^2: a double root certified by one winding-2 box.
  {
    Poly p = poly_of_roots({RationalComplex(), RationalComplex()});
    RootCertification rc = zeros_monic_certified(p, 16);
    REQUIRE(rc.roots.size() == 2);
    CHECK(roots_match(rc.roots, {RationalComplex(), RationalComplex()}, 16));
    REQUIRE(rc.boxes.size() == 1);
    CHECK(rc.boxes[0].count == 2);
  }
}

TEST_CASE("random rational-rooted corpus is matched within tolerance") {
  std::mt19937 rng(20260816u);
  std::uniform_int_distribution<unsigned> deg(1, 5);
  for (int it = 0; it < 20; ++it) {
    std::vector<RationalComplex> roots = random_roots(rng, deg(rng));
    Poly p = poly_of_roots(roots);
    CHECK(dbnd(p) >= roots.size());
    RootCertification rc = zeros_monic_certified(p, 20);
    CHECK(roots_match(rc.roots, roots, 20));
    unsigned long total = 0;
    for (const RootBox& b : rc.boxes) {
      total += b.count;
      CHECK(b.radius <= mpq_class(mpz_class(1), pow2(21)));
    }
    CHECK(total == roots.size());
    // Presentation order is (Re, Im) on the emitted midpoints.
    for (size_t i = 0; i + 1 < rc.roots.size(); ++i) {
      bool ordered = rc.roots[i].re < rc.roots[i + 1].re ||
                     (rc.roots[i].re == rc.roots[i + 1].re &&
                      rc.roots[i].im <= rc.roots[i + 1].im);
      CHECK(ordered);
    }
  }
}

TEST_CASE("parallel scheduling leaves the certification unchanged") {
  std::vector<RationalComplex> roots = {rcq(1, 2), rcq(1, 2), rcq(-3, 1),
                                        RationalComplex(mpq_of(1, 4), mpq_of(1, 1))};
  Poly p = poly_of_roots(roots);
  RootCertification serial = zeros_monic_certified(p, 18, false);
  RootCertification parallel = zeros_monic_certified(p, 18, true);
  REQUIRE(serial.roots.size() == parallel.roots.size());
  for (size_t i = 0; i < serial.roots.size(); ++i) {
    CHECK(serial.roots[i] == parallel.roots[i]);
  }
  REQUIRE(serial.boxes.size() == parallel.boxes.size());
  for (size_t i = 0; i < serial.boxes.size(); ++i) {
    CHECK(serial.boxes[i].center == parallel.boxes[i].center);
    CHECK(serial.boxes[i].count == parallel.boxes[i].count);
  }
}

TEST_CASE("root-coefficient duality on a random monic corpus") {
  std::mt19937 rng(777001u);
  std::uniform_int_distribution<unsigned> deg(1, 6);
  // Tolerance budget: root error 2^-26 inflated through the expansion by at
  // most deg * (1 + cauchy)^deg * binomials, far below 2^-4 on this grid.
  mpq_class tol2(mpz_class(1), pow2(8));
  for (int it = 0; it < 20; ++it) {
    std::vector<RationalComplex> roots = random_roots(rng, deg(rng));
    std::vector<RationalComplex> truth = expand(roots);
    Poly p = poly_of_roots(roots);
    Tuple zs = zeros_monic(p, 26);
    REQUIRE(zs.length() == roots.size());
    Poly back = monic_via_zeros(zs);
    for (unsigned long k = 0; k <= back.bound(); ++k) {
      IntervalC e = back.coeff_enclosure(k, 12);
      RationalComplex mid = rc_from_dyadic(e.re.mid(), e.im.mid());
      CHECK(rc_abs_sq(rc_sub(mid, truth[k])) <= tol2);
    }
  }
}

TEST_CASE("degree recovery through the minimum stream") {
  // X^2 + 2^-9 X^3: the tiny leading coefficient resolves once the stream
  // precision passes 9 bits.
  std::vector<RationalComplex> cs(4);
  cs[2] = rcq(1, 1);
  cs[3] = rcq(1, 512);
  CHECK(deg_via_min(poly_exact(3, cs)) == 3);

  CHECK(deg_via_min(poly_exact(4, {rcq(5, 1), RationalComplex(),
                                   RationalComplex(), RationalComplex(),
                                   RationalComplex()})) == 0);
  CHECK(deg_via_min(poly_exact(1, {rcq(-1, 1), rcq(1, 1)})) == 1);
}

TEST_CASE("minimum-stream degree agrees with normalized monic detection") {
  std::mt19937 rng(424242u);
  std::uniform_int_distribution<unsigned> deg(1, 5);
  std::uniform_int_distribution<int> padding(0, 3);
  const RationalComplex scales[4] = {rcq(2, 3), rcq(-3, 1),
                                     RationalComplex(mpq_of(1, 2), mpq_of(1, 2)),
                                     rcq(7, 4)};
  for (int it = 0; it < 20; ++it) {
    std::vector<RationalComplex> roots = random_roots(rng, deg(rng));
    std::vector<RationalComplex> cs = expand(roots);
    RationalComplex lambda = scales[rng() % 4];
    for (RationalComplex& c : cs) c = rc_mul(lambda, c);
    unsigned long d = roots.size();
    for (int pad = padding(rng); pad-- > 0;) cs.push_back(RationalComplex());
    Poly p = poly_exact(cs.size() - 1, cs);
    CHECK(deg_via_min(p) == d);
    CHECK(deg_monic(monic_of(p, d)) == d);
  }
}

TEST_CASE("stream minimum through the degree oracle") {
  // p = 5, 2, 7, 7, ...: hits pin a_0 = 1 at i = 0 and a_3 = 1/2 at i = 1,
  // so the built polynomial is 1 + X^3/2 and min p = 5 - 3 = 2.
  Name p = name_from_prefix({nat(5), nat(2), nat(7)}, nat(7));
  Poly built = min_to_poly(p);
  CHECK(built.bound() == 5);
  CHECK(ic_contains(built.coeff_enclosure(0, 12), rcq(1, 1)));
  CHECK(ic_contains(built.coeff_enclosure(3, 12), rcq(1, 2)));
  CHECK(ic_contains(built.coeff_enclosure(1, 12), RationalComplex()));
  unsigned long brute = 7;
  for (unsigned long i = 0; i < 10000; ++i) brute = std::min(brute, to_ulong(p.at(i)));
  unsigned long d = deg_via_min(built);
  CHECK(d == 3);
  CHECK(min_via_deg(p, d) == brute);

  // Constant stream: only a_0 is ever hit, the degree is 0, min = head.
  Name q = name_const(nat(3));
  CHECK(deg_via_min(min_to_poly(q)) == 0);
  CHECK(min_via_deg(q, 0) == 3);

  // Head zero pins the minimum immediately.
  Name z = name_from_prefix({nat(0), nat(9)}, nat(9));
  CHECK(min_via_deg(z, deg_via_min(min_to_poly(z))) == 0);
}

TEST_CASE("zeros of general polynomials through normalization") {
  // 2X - 2.
  {
    Poly p = poly_exact(1, {rcq(-2, 1), rcq(2, 1)});
    Tuple zs = zeros_general(p, 14);
    REQUIRE(zs.length() == 1);
    CHECK(ic_contains(zs.entry_enclosure(0, 13), rcq(1, 1)));
  }
  // 3X^2 - 9X + 6 = 3 (X - 1)(X - 2).
  {
    Poly p = poly_exact(2, {rcq(6, 1), rcq(-9, 1), rcq(3, 1)});
    Tuple zs = zeros_general(p, 14);
    REQUIRE(zs.length() == 2);
    std::vector<RationalComplex> got = {complex_approx(zs.entry(0), 16),
                                        complex_approx(zs.entry(1), 16)};
    CHECK(roots_match(got, {rcq(1, 1), rcq(2, 1)}, 13));
  }
  // -X^2 with slack in the bound.
  {
    std::vector<RationalComplex> cs(4);
    cs[2] = rcq(-1, 1);
    Poly p = poly_exact(3, cs);
    Tuple zs = zeros_general(p, 14);
    REQUIRE(zs.length() == 2);
    CHECK(ic_contains(zs.entry_enclosure(0, 13), RationalComplex()));
    CHECK(ic_contains(zs.entry_enclosure(1, 13), RationalComplex()));
  }
}

TEST_CASE("prescribed zeros expand to the expected monic polynomial") {
  // Roots 1 and 2 give X^2 - 3X + 2.
  {
    Poly p = monic_via_zeros(tuple_exact({rcq(1, 1), rcq(2, 1)}));
    CHECK(p.bound() == 2);
    CHECK(ic_contains(p.coeff_enclosure(0, 14), rcq(2, 1)));
    CHECK(ic_contains(p.coeff_enclosure(1, 14), rcq(-3, 1)));
    CHECK(ic_contains(p.coeff_enclosure(2, 14), rcq(1, 1)));
  }
  // No roots: the empty product is the constant 1.
  {
    Poly p = monic_via_zeros(tuple_exact({}));
    CHECK(p.bound() == 0);
    CHECK(ic_contains(p.coeff_enclosure(0, 14), rcq(1, 1)));
  }
  // Double root at 0 gives X^2.
  {
    Poly p = monic_via_zeros(tuple_exact({RationalComplex(), RationalComplex()}));
    CHECK(p.bound() == 2);
    CHECK(ic_contains(p.coeff_enclosure(0, 14), RationalComplex()));
    CHECK(ic_contains(p.coeff_enclosure(1, 14), RationalComplex()));
    CHECK(ic_contains(p.coeff_enclosure(2, 14), rcq(1, 1)));
  }
}

TEST_CASE("enumerated sets pass through the analytic degree round trip") {
  // Members listed directly; value v at position t contributes 2^-(t+v) X^v.
  // Stream 1, 3, 3, ...: the built function is X/2 + X^3/8 + tail weights
  // on X^3, well within the advice-2 budget.
  Name s13 = name_from_prefix({nat(1)}, nat(3));
  Analytic f = enum_to_analytic(s13);
  CHECK(f.advice() == 2);
  // P(1) = 1/2 + sum_{n>=1} 2^-(n+3) = 1/2 + 1/8.
  IntervalC at1 = eval_analytic(f, rcq(1, 1), 12);
  CHECK(ic_contains(at1, rcq(5, 8)));
  CHECK(deg_analytic_via_max(f, 128) == 3);

  // The all-zero stream is the constant sum 2 of weight-only terms.
  Analytic g = enum_to_analytic(name_const(nat(0)));
  CHECK(ic_contains(eval_analytic(g, rcq(1, 1), 10), rcq(2, 1)));
  CHECK(deg_analytic_via_max(g, 64) == 0);

  // Constant member 2: the function is X^2 / 2.
  Analytic h = enum_to_analytic(name_const(nat(2)));
  CHECK(ic_contains(eval_analytic(h, rcq(1, 1), 12), rcq(1, 2)));
  CHECK(deg_analytic_via_max(h, 128) == 2);
}

TEST_CASE("analytic polynomials report their exact degree") {
  Analytic sq = analytic_pack(
      2, cfun_name_z([](unsigned long) {
        return ZPoly{RationalComplex(), RationalComplex(), rcq(1, 1)};
      }));
  CHECK(deg_analytic_via_max(sq, 128) == 2);

  Analytic c5 = analytic_pack(
      5, cfun_name_z([](unsigned long) { return ZPoly{rcq(5, 1)}; }));
  CHECK(deg_analytic_via_max(c5, 64) == 0);
}
