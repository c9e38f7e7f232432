#pragma once

#include <vector>

#include "wlab/analytic.hpp"
#include "wlab/name.hpp"
#include "wlab/rootfind.hpp"
#include "wlab/spaces.hpp"

namespace wlab {

// Polynomial name: position 0 carries a degree bound, the tail interleaves
// the bound+1 coefficient names a_0..a_bound. Monic instances additionally
// promise that the represented leading coefficient is exactly 1.
class Poly {
 public:
  unsigned long bound() const;
  // Complex name of a_k for k <= bound.
  Name coeff(unsigned long k) const;
  // Box around a_k with width < 2^-n.
  IntervalC coeff_enclosure(unsigned long k, unsigned long n) const;
  const Name& raw() const { return raw_; }

 private:
  explicit Poly(Name raw) : raw_(std::move(raw)) {}
  friend Poly poly_pack(unsigned long bound, const std::vector<Name>& coeffs);
  friend Poly poly_wrap(const Name& raw);
  Name raw_;
};

Poly poly_pack(unsigned long bound, const std::vector<Name>& coeffs);
Poly poly_wrap(const Name& raw);
Poly poly_exact(unsigned long bound, const std::vector<RationalComplex>& cs);

// Finite complex vector: position 0 is the exact length (padded vectors are
// not identified with shorter ones), the tail interleaves the entries.
class Tuple {
 public:
  unsigned long length() const;
  Name entry(unsigned long k) const;
  IntervalC entry_enclosure(unsigned long k, unsigned long n) const;
  const Name& raw() const { return raw_; }

 private:
  explicit Tuple(Name raw) : raw_(std::move(raw)) {}
  friend Tuple tuple_pack(const std::vector<Name>& entries);
  friend Tuple tuple_wrap(const Name& raw);
  Name raw_;
};

Tuple tuple_pack(const std::vector<Name>& entries);
Tuple tuple_wrap(const Name& raw);
Tuple tuple_exact(const std::vector<RationalComplex>& vs);

// The stated degree bound; a single stream read.
unsigned long dbnd(const Poly& p);

// Exact degree of a monic polynomial. Coefficients are read at precision 3
// and scanned from the bound downward: a true zero stays below modulus 1/2,
// the leading 1 provably exceeds it, and the first index that does is the
// degree. Throws std::domain_error when no index qualifies.
unsigned long deg_monic(const Poly& p);

// All roots of a monic polynomial with multiplicity: certified winding
// boxes of half-side <= 2^-(n+1), midpoints sorted by (Re, Im).
RootCertification zeros_monic_certified(const Poly& p, long n,
                                        bool parallel = false);
Tuple zeros_monic(const Poly& p, long n);

// Scales by 1/a_d where d is the caller's degree claim. The output name
// only converges if a_d is really nonzero.
Poly monic_of(const Poly& p, unsigned long d);

// Stream feeding the minimum oracle for degree recovery: position j holds
// bound - t(j), where t(j) is the largest index whose coefficient enclosure
// at precision j excludes zero (bound when none does). Every entry is
// >= bound - deg, with equality once the precision resolves the leading
// coefficient, so the stream minimum is exactly bound - deg.
Name deg_min_stream(const Poly& p);

// Degree through the minimum oracle. The stand-in oracle takes the prefix
// minimum of deg_min_stream over `fuel` entries, which is exact as soon as
// some scanned precision certifies the leading coefficient nonzero.
unsigned long deg_via_min(const Poly& p, unsigned long fuel = 40);

// Polynomial whose degree encodes a stream minimum: coefficient a_m is
// 2^-i for the first i with p(0) - p(i) = m (and 0 when no i qualifies),
// so a_0 = 1 always and min p = p(0) - deg.
Poly min_to_poly(const Name& p);

// Minimum of a stream through the degree oracle; the caller passes the
// degree of min_to_poly(p).
unsigned long min_via_deg(const Name& p, unsigned long deg_of_built);

// Roots of an arbitrary nonzero polynomial: degree recovery through the
// minimum stream, monic normalization, certified isolation.
Tuple zeros_general(const Poly& p, long n, unsigned long fuel = 40);

// Monic polynomial with prescribed zeros: expands the product of (X - y_k)
// over the tuple entries by interval convolution at matching precision.
Poly monic_via_zeros(const Tuple& roots);

// Analytic encoding of an enumerated set of naturals: stream value v at
// position t contributes the term 2^-(t+v) X^v, so the built function is a
// polynomial whose degree is the largest enumerated stream value, and the
// coefficient sums certify advice 2.
Analytic enum_to_analytic(const Name& p);

// Enumeration of the provably nonzero power-series coefficient indices:
// position (m, j) emits m+1 once |a_m| certifies above 2^-j, else 0. For a
// polynomial the enumerated set is exactly the nonzero coefficient indices,
// whose maximum is the degree.
Name analytic_degree_stream(const Analytic& f);

// Degree of a polynomial given analytically, through the maximum oracle
// with a scan window of `fuel` stream positions.
unsigned long deg_analytic_via_max(const Analytic& f, unsigned long fuel);

}  // namespace wlab
