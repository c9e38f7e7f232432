#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace wlab {

// Stream values and indices are unbounded naturals: encoded objects
// (rationals, polynomials) routinely exceed 64 bits.
using Nat = mpz_class;
using Int = mpz_class;

inline Nat nat(unsigned long v) { return Nat(v); }

// 2^k as an exact integer, k >= 0.
inline Nat pow2(unsigned long k) {
  Nat r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, k);
  return r;
}

// Zig-zag bijection Z -> N: 0,-1,1,-2,2,... -> 0,1,2,3,4,...
inline Nat zigzag(const Int& z) {
  if (z >= 0) return Nat(2 * z);
  return Nat(-2 * z - 1);
}

inline Int unzigzag(const Nat& n) {
  if (n % 2 == 0) return Int(n / 2);
  return Int(-((n + 1) / 2));
}

// Bit length of |n|; bitlen(0) == 0.
inline unsigned long bitlen(const Nat& n) {
  if (n == 0) return 0;
  return mpz_sizeinbase(n.get_mpz_t(), 2);
}

inline bool fits_ulong(const Nat& n) { return n.fits_ulong_p(); }

inline unsigned long to_ulong(const Nat& n) { return n.get_ui(); }

}  // namespace wlab
