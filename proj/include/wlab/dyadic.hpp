#pragma once

#include <string>

#include "wlab/nat.hpp"

namespace wlab {

// Exact dyadic rational man * 2^exp. Normalized: man is odd, or man == 0 and
// exp == 0. All arithmetic here is exact; rounding happens only through the
// explicit floor_to/ceil_to directed-rounding calls.
struct Dyadic {
  mpz_class man;
  long exp = 0;

  Dyadic() : man(0) {}
  Dyadic(long v) : man(v) { normalize(); }
  Dyadic(const mpz_class& m, long e) : man(m), exp(e) { normalize(); }

  void normalize();
  bool is_zero() const { return man == 0; }
  int sgn() const { return mpz_sgn(man.get_mpz_t()); }

  mpq_class to_mpq() const;
  double to_double() const;
  // Exact finite decimal expansion (every dyadic has one).
  std::string to_decimal() const;
};

Dyadic dy_neg(const Dyadic& a);
Dyadic dy_abs(const Dyadic& a);
Dyadic dy_add(const Dyadic& a, const Dyadic& b);
Dyadic dy_sub(const Dyadic& a, const Dyadic& b);
Dyadic dy_mul(const Dyadic& a, const Dyadic& b);
Dyadic dy_shift(const Dyadic& a, long k);  // a * 2^k, exact

int dy_cmp(const Dyadic& a, const Dyadic& b);
inline bool operator<(const Dyadic& a, const Dyadic& b) { return dy_cmp(a, b) < 0; }
inline bool operator<=(const Dyadic& a, const Dyadic& b) { return dy_cmp(a, b) <= 0; }
inline bool operator==(const Dyadic& a, const Dyadic& b) { return dy_cmp(a, b) == 0; }
inline bool operator>(const Dyadic& a, const Dyadic& b) { return dy_cmp(a, b) > 0; }
inline bool operator>=(const Dyadic& a, const Dyadic& b) { return dy_cmp(a, b) >= 0; }

Dyadic dy_min(const Dyadic& a, const Dyadic& b);
Dyadic dy_max(const Dyadic& a, const Dyadic& b);

// Largest multiple of 2^-prec that is <= a (resp. smallest >= a).
Dyadic dy_floor(const Dyadic& a, long prec);
Dyadic dy_ceil(const Dyadic& a, long prec);

// Directed rounding of an arbitrary rational to granularity 2^-prec.
Dyadic dy_from_mpq_floor(const mpq_class& q, long prec);
Dyadic dy_from_mpq_ceil(const mpq_class& q, long prec);

// Exact conversion; every IEEE double is dyadic.
Dyadic dy_from_double(double v);

// 2^k as a dyadic.
inline Dyadic dy_pow2(long k) { return Dyadic(mpz_class(1), k); }

// sqrt enclosure at granularity 2^-prec, a >= 0: result_lo <= sqrt(a) <= result_hi.
Dyadic dy_sqrt_floor(const Dyadic& a, long prec);
Dyadic dy_sqrt_ceil(const Dyadic& a, long prec);

std::string dy_to_string(const Dyadic& a);

}  // namespace wlab
