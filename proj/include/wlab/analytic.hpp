#pragma once

#include <vector>

#include "wlab/spaces.hpp"

namespace wlab {

// Power-series germ at 0. Position 0 of the name carries the advice value n,
// certifying |a_k| <= 2^{-k/(n+1)} * n for every k; the tail packs the
// coefficient sequence along Cantor pairs, so position 1 + pair(k, j) carries
// a rational complex code within 2^-j of a_k.
class Germ {
 public:
  explicit Germ(Name raw);

  unsigned long advice() const { return advice_; }
  const Name& raw() const { return raw_; }
  Name coeffs() const;
  Name coeff(unsigned long k) const;
  IntervalC coeff_enclosure(unsigned long k, unsigned long prec) const;

 private:
  Name raw_;
  unsigned long advice_;
};

// Analytic function on the closed unit disk. Position 0 carries the advice
// value m, certifying analytic continuation to |z| <= r_m = 2^{1/(m+1)} with
// modulus at most m there; the tail is a C(D)-name of the restriction.
class Analytic {
 public:
  explicit Analytic(Name raw);

  unsigned long advice() const { return advice_; }
  const Name& raw() const { return raw_; }
  Name cfun() const;

 private:
  Name raw_;
  unsigned long advice_;
};

Germ germ_pack(unsigned long advice, const Name& coeffs);
Analytic analytic_pack(unsigned long advice, const Name& cfun);

// Coefficient-sequence builders.
Name cseq_exact(std::function<RationalComplex(unsigned long)> coeff);
Name cseq_finite(std::vector<RationalComplex> coeffs);
// f(k, prec) must enclose a_k with width at most 2^-prec.
Name cseq_from_enclosures(std::function<IntervalC(unsigned long, long)> f);

// Exact test of |a|^2 <= (n * 2^{-k/(n+1)})^2 for rational |a|^2.
bool within_germ_bound(const mpq_class& abs_sq, unsigned long advice,
                       unsigned long k);
// Smallest advice >= 1 valid for the whole finite list (zero tail).
unsigned long germ_advice_for(const std::vector<RationalComplex>& coeffs);
// Validated builder over an exact finite list; throws std::domain_error if
// some coefficient breaks the advice bound.
Germ germ_exact(std::vector<RationalComplex> coeffs, unsigned long advice);

// Interval spot check of the advice bound for k < kmax. Returns false only
// when an enclosure proves a violation.
bool germ_consistent(const Germ& g, unsigned long kmax, unsigned long prec);

// Smallest m' >= 2n+1 with a certified sum_k n 2^{-k/(n+1)} r_{m'}^k <= m'.
unsigned long sum_advice(unsigned long n);
// x |-> sum a_k x^k. Stages of the output C(D)-name truncate where the
// advice-certified tail drops below half the stage tolerance; a coefficient
// whose enclosure provably exceeds the advice bound raises std::domain_error.
Analytic sum_germ(const Germ& g);

// Coefficient sequence of an analytic function from its C(D)-name: a_k is
// read off as the k-th circle Fourier coefficient of a close approximant.
Name germ_of(const Name& cont);

// Advice for the derivative: max(m+1, ceil(m / (r_m - r_{m+1}))).
unsigned long diff_advice(unsigned long m);
// Differentiation via germ extraction, index shift, and resummation.
Analytic diff_analytic(const Analytic& f);

IntervalC eval_analytic(const Analytic& f, const Name& z, unsigned long n);
IntervalC eval_analytic(const Analytic& f, const RationalComplex& z,
                        unsigned long n);

// The unit-derivative pole family f_c(x) = (x_c - x)^{-2N}, N = 2^c,
// x_c = 1 + 2^{(c+1)/(2N+1)}: f_c'(1) = 1 exactly and sup_D |f_c| < 2^-c.
Germ gadget_germ(unsigned long c);
Analytic gadget_fn(unsigned long c);
// C(D)-name of the sum of f_j over the positions where sel is nonzero; each
// stage needs only finitely many sel values, so the sum is a stream
// transformer even though the selected set may be infinite.
Name gadget_sum_cfun(const Name& sel);

}  // namespace wlab
