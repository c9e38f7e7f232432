#pragma once

#include <functional>
#include <vector>

#include "wlab/enumerations.hpp"
#include "wlab/name.hpp"

namespace wlab {

// Conventions tying names to the objects they describe.
//
//   natural    constant stream; the value sits at position 0.
//   set        enumeration stream: value 0 is a skip, value k+1 lists k.
//   real       position n carries a rational code q with |x - q| < 2^-n.
//   complex    same with rational complex codes.
//   function   position n carries a disk-polynomial code P (either a
//              two-variable polynomial in x, y or a coefficient list in
//              z = x + iy) with sup_K |f - P| < 2^-n on the domain K.

Name nat_name(const Nat& v);
Nat nat_value(const Name& p);

Name enum_name(std::vector<Nat> elems);
Name enum_name_fn(std::function<Nat(const Nat&)> f);
// Values listed among the first `count` positions, in first-listing order,
// without repeats.
std::vector<Nat> enum_prefix(const Name& p, unsigned long count);

Name real_name(const mpq_class& x);
Name real_name_fn(std::function<mpq_class(unsigned long)> approx);
// Builds a name from an enclosure routine with width(f(prec)) <= 2^-prec.
Name real_name_from_enclosures(std::function<IntervalR(long)> f);
mpq_class real_approx(const Name& p, unsigned long n);
// Certified enclosure of the represented point, width strictly below 2^-n.
IntervalR real_enclosure(const Name& p, unsigned long n);

Name complex_name(const RationalComplex& z);
Name complex_name_fn(std::function<RationalComplex(unsigned long)> approx);
Name complex_name_from_enclosures(std::function<IntervalC(long)> f);
RationalComplex complex_approx(const Name& p, unsigned long n);
IntervalC complex_enclosure(const Name& p, unsigned long n);

Name cfun_name(std::function<RationalPoly2(unsigned long)> approx);
// Same contract with holomorphic coefficient-list approximants; the compact
// z-form keeps high-degree approximants tractable as codes.
Name cfun_name_z(std::function<ZPoly(unsigned long)> approx);
Name cfun_name_const_poly(const RationalPoly2& poly);
DiskPoly cfun_code(const Name& p, unsigned long n);
// Stage-n approximant in expanded two-variable form.
RationalPoly2 cfun_poly(const Name& p, unsigned long n);
// Enclosure of f over (box intersect K), padded by the stage-n tolerance.
// The box must meet K for the result to mean anything.
IntervalC cfun_eval(const Name& p, const IntervalR& x, const IntervalR& y,
                    unsigned long n, long prec);
// Enclosure of f(z), width strictly below 2^-n; z must lie in the domain
// (a promise, unchecked). The point overload is exact in the argument.
IntervalC cont_eval(const Name& f, const Name& z, unsigned long n);
IntervalC cont_eval(const Name& f, const RationalComplex& z, unsigned long n);

}  // namespace wlab
