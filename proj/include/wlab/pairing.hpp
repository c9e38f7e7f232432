#pragma once

#include <utility>
#include <vector>

#include "wlab/nat.hpp"

namespace wlab {

// Cantor pairing, fixed bit-exactly so encoded names are portable:
//   pair(m, n) = (m+n)(m+n+1)/2 + n.
inline Nat pair(const Nat& m, const Nat& n) {
  Nat s = m + n;
  return s * (s + 1) / 2 + n;
}

inline std::pair<Nat, Nat> unpair(const Nat& k) {
  // w = floor((sqrt(8k+1) - 1) / 2) is the diagonal index.
  Nat s;
  Nat t = 8 * k + 1;
  mpz_sqrt(s.get_mpz_t(), t.get_mpz_t());
  Nat w = (s - 1) / 2;
  Nat base = w * (w + 1) / 2;
  Nat n = k - base;
  Nat m = w - n;
  return {m, n};
}

// Left-nested triple: <a,b,c> = pair(pair(a,b),c).
inline Nat triple(const Nat& a, const Nat& b, const Nat& c) {
  return pair(pair(a, b), c);
}

inline void untriple(const Nat& k, Nat& a, Nat& b, Nat& c) {
  auto [ab, c0] = unpair(k);
  auto [a0, b0] = unpair(ab);
  a = a0;
  b = b0;
  c = c0;
}

// Balanced-tree code of a nonempty vector. The tree shape is a function of
// the length alone (left half gets the extra element), so decoding with the
// same length is exact. Balancing keeps the code linear-size in the total
// payload; a folded chain would double the bit length per element.
Nat tree_encode(const std::vector<Nat>& v, std::size_t lo, std::size_t hi);
void tree_decode(const Nat& code, std::size_t lo, std::size_t hi,
                 std::vector<Nat>& out);

// List code: pair(len, tree). The empty list encodes as pair(0,0) = 0.
Nat list_encode(const std::vector<Nat>& v);
std::vector<Nat> list_decode(const Nat& code);

}  // namespace wlab
