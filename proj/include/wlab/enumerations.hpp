#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "wlab/interval.hpp"
#include "wlab/nat.hpp"
#include "wlab/pairing.hpp"
#include "wlab/rational.hpp"

namespace wlab {

// Rational codec: pair(zigzag(num), den - 1) on canonical fractions. Decoding
// is total; non-canonical codes decode to the value of their reduced form.
Nat rat_index(const mpq_class& q);
mpq_class rat_enum(const Nat& n);
bool rat_is_canonical(const Nat& n);

// Rational complex codec, left-folded:
//   pair(pair(pair(zigzag(re_num), re_den - 1), zigzag(im_num)), im_den - 1).
// Code 0 is 0, code 42 is -(1/7)i.
Nat rc_index(const RationalComplex& v);
RationalComplex rc_enum(const Nat& n);
bool rc_is_canonical(const Nat& n);

// Polynomial in two real variables with rational complex coefficients. Only
// nonzero terms are stored, keyed by (deg x, deg y).
struct RationalPoly2 {
  std::map<std::pair<unsigned long, unsigned long>, RationalComplex> terms;

  bool is_zero() const { return terms.empty(); }
  unsigned long total_degree() const;  // 0 for the zero polynomial
  RationalComplex coeff(unsigned long a, unsigned long b) const;
  void set(unsigned long a, unsigned long b, const RationalComplex& c);

  bool operator==(const RationalPoly2& o) const { return terms == o.terms; }
  bool operator!=(const RationalPoly2& o) const { return !(*this == o); }
};

RationalPoly2 poly2_add(const RationalPoly2& p, const RationalPoly2& q);
RationalPoly2 poly2_sub(const RationalPoly2& p, const RationalPoly2& q);
RationalPoly2 poly2_neg(const RationalPoly2& p);
RationalPoly2 poly2_scale(const RationalPoly2& p, const RationalComplex& c);
RationalPoly2 poly2_mul(const RationalPoly2& p, const RationalPoly2& q);
RationalComplex poly2_eval(const RationalPoly2& p, const RationalComplex& x,
                           const RationalComplex& y);
IntervalC poly2_eval_box(const RationalPoly2& p, const IntervalR& x,
                         const IntervalR& y, long prec);
std::string poly2_to_string(const RationalPoly2& p);

// Codec: pair(D, list of coefficient codes in graded lex order, x before y).
// Degree-d block position of x^a y^b is d(d+1)/2 + (d - a). The zero
// polynomial is code 0; encoding always uses the minimal degree bound.
Nat poly2_index(const RationalPoly2& p);
RationalPoly2 poly2_enum(const Nat& n);
bool poly2_is_canonical(const Nat& n);

// Univariate polynomial in the complex coordinate z = x + iy. Coefficient j
// multiplies z^j; trailing zeros are kept trimmed.
using ZPoly = std::vector<RationalComplex>;

void zpoly_trim(ZPoly& p);
ZPoly zpoly_add(const ZPoly& p, const ZPoly& q);
ZPoly zpoly_sub(const ZPoly& p, const ZPoly& q);
ZPoly zpoly_scale(const ZPoly& p, const RationalComplex& c);
ZPoly zpoly_mul(const ZPoly& p, const ZPoly& q);
ZPoly zpoly_derivative(const ZPoly& p);
RationalComplex zpoly_eval(const ZPoly& p, const RationalComplex& z);
IntervalC zpoly_eval_box(const ZPoly& p, const IntervalC& z, long prec);

// Expands sum c_j (x + iy)^j into real coordinates, and recognises exactly
// the polynomials of that shape.
RationalPoly2 zpoly_expand(const ZPoly& p);
std::optional<ZPoly> poly2_as_zpoly(const RationalPoly2& p);

// Codec: list of coefficient codes, constant term first. Code 0 is the zero
// polynomial; non-canonical codes decode through trimming.
Nat zpoly_index(const ZPoly& p);
ZPoly zpoly_enum(const Nat& n);
bool zpoly_is_canonical(const Nat& n);

// Restriction of p to the unit circle as a Laurent polynomial in z, via
// x = (z + 1/z)/2, y = (z - 1/z)/(2i). fourier_coeff(p, k) is the k-th
// circle Fourier coefficient, an exact rational complex number.
std::map<long, RationalComplex> laurent_on_circle(const RationalPoly2& p);
RationalComplex fourier_coeff(const RationalPoly2& p, long k);

// Function-approximant code on the disk: a rational polynomial in either
// general two-variable form or holomorphic coefficient-list form. The union
// keeps codes compact for both producer kinds (a z-polynomial of degree d
// has d+1 list entries but ~d^2/2 two-variable terms); consumers that need
// the two-variable view expand explicitly. Code layout: pair(0, two-variable
// code) or pair(1, coefficient-list code).
struct DiskPoly {
  std::variant<RationalPoly2, ZPoly> form;

  DiskPoly() : form(RationalPoly2{}) {}
  explicit DiskPoly(RationalPoly2 p) : form(std::move(p)) {}
  explicit DiskPoly(ZPoly p) : form(std::move(p)) {}

  const ZPoly* holo() const { return std::get_if<ZPoly>(&form); }
  const RationalPoly2* xy() const { return std::get_if<RationalPoly2>(&form); }
};

Nat diskpoly_index(const DiskPoly& p);
DiskPoly diskpoly_enum(const Nat& n);
RationalPoly2 diskpoly_expand(const DiskPoly& p);
// Evaluation at z = x + iy with exact rational x, y.
RationalComplex diskpoly_eval(const DiskPoly& p, const RationalComplex& z);
IntervalC diskpoly_eval_box(const DiskPoly& p, const IntervalR& x,
                            const IntervalR& y, long prec);
RationalComplex diskpoly_fourier(const DiskPoly& p, long k);
// Coefficient-magnitude sums: abs_sum bounds sup |P| on the closed unit disk,
// grad_sum (degree-weighted) bounds both partial derivatives there.
mpq_class diskpoly_abs_sum(const DiskPoly& p);
mpq_class diskpoly_grad_sum(const DiskPoly& p);
unsigned long diskpoly_degree(const DiskPoly& p);
// Enclosure of sup of the modulus over the closed unit disk (holomorphic
// codes use the maximum principle and reduce to the circle).
IntervalR diskpoly_sup(const DiskPoly& p, long prec);

// sup norms: enclosures [lower, upper] of the exact supremum, with
// upper - lower <= 2^-prec. circle: |x + iy| = 1; disk: |x + iy| <= 1.
IntervalR circle_sup(const RationalPoly2& p, long prec);
IntervalR disk_sup(const RationalPoly2& p, long prec);
IntervalR circle_sup(const ZPoly& p, long prec);

}  // namespace wlab
