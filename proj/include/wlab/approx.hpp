#pragma once

#include <vector>

#include "wlab/enumerations.hpp"
#include "wlab/interval.hpp"
#include "wlab/supbb.hpp"

namespace wlab {

// The standard bump f(x) = exp(x^2/(x^2-1)) on (-1,1), zero elsewhere.
// Derivatives factor as f^{(m)}(x) = p_m(x) f(x) (1-x^2)^{-2m} where p_0 = 1
// and p_{m+1} = (1-x^2)^2 p_m' + 2((2m-1)x - 2m x^3) p_m; the p_m have
// integer coefficients. Returns the coefficient vector of p_m (index =
// power); the reference stays valid for the process lifetime.
const std::vector<mpz_class>& bump_poly(unsigned long m);

// Sound enclosure of f^{(m)} over x, with f extended by zero outside (-1,1).
// Uses the closed form on the interior and a monotone decay bound of
// u^{2m} e^{1-u}, u = 1/(1-x^2), on thin strips at the support boundary.
IntervalR bump_deriv_on(const IntervalR& x, unsigned long m, long prec);

// One summand weight * x^{-inv_power} * f(x - center). When inv_power > 0
// the support [center-1, center+1] must lie in [2, inf) so the x^{-k}
// factor is smooth on a neighbourhood of the support.
struct BumpTerm {
  mpq_class weight;
  mpq_class center;
  unsigned long inv_power = 0;
};
using TermFamily = std::vector<BumpTerm>;

// Sound enclosure of the m-th derivative of the term sum over x.
IntervalR family_deriv_on(const TermFamily& fam, unsigned long m,
                          const IntervalR& x, long prec);

// Enclosure of sup_{x in R} |x^d F^{(m)}(x)| with width <= 2^-prec.
IntervalR family_sup_abs(const TermFamily& fam, unsigned long d,
                         unsigned long m, long prec);

// Verifies sup_domain |e| < tau by bisection with first-order centered
// forms: e is queried at box midpoints (zero-width boxes), de over whole
// boxes. Deterministic wave order; returns false on a certified breach, an
// unsplittable box, or budget exhaustion.
bool certify_below(const BoxFn1& e, const BoxFn1& de, const IntervalR& domain,
                   const mpq_class& tau, long wp,
                   unsigned long max_evals = 1ul << 21,
                   SupStats* stats = nullptr);

// Real polynomial P with sup_{[-N,N]} |F^{(m)} - P| < 2^-j, N =
// domain_bound. Candidate: discrete cosine transform over Chebyshev nodes,
// kept and certified in the Chebyshev basis; certification is independent
// of the candidate construction, and only a certified candidate is expanded
// to monomial coefficients. Throws std::length_error when the degree ladder
// fails.
ZPoly certified_slice_poly(const TermFamily& fam, unsigned long domain_bound,
                           unsigned long m, unsigned long j);

}  // namespace wlab
