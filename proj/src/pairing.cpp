#include "wlab/pairing.hpp"

#include <stdexcept>

namespace wlab {

Nat tree_encode(const std::vector<Nat>& v, std::size_t lo, std::size_t hi) {
  if (hi - lo == 1) return v[lo];
  std::size_t mid = lo + (hi - lo + 1) / 2;
  return pair(tree_encode(v, lo, mid), tree_encode(v, mid, hi));
}

void tree_decode(const Nat& code, std::size_t lo, std::size_t hi,
                 std::vector<Nat>& out) {
  if (hi - lo == 1) {
    out[lo] = code;
    return;
  }
  std::size_t mid = lo + (hi - lo + 1) / 2;
  auto [l, r] = unpair(code);
  tree_decode(l, lo, mid, out);
  tree_decode(r, mid, hi, out);
}

Nat list_encode(const std::vector<Nat>& v) {
  if (v.empty()) return pair(0, 0);
  return pair(Nat(v.size()), tree_encode(v, 0, v.size()));
}

std::vector<Nat> list_decode(const Nat& code) {
  auto [len, tree] = unpair(code);
  if (len == 0) return {};
  // Resource guard against garbage codes claiming astronomical lengths.
  if (len > (1ul << 22)) throw std::length_error("list_decode: length");
  std::size_t n = to_ulong(len);
  std::vector<Nat> out(n);
  tree_decode(tree, 0, n, out);
  return out;
}

}  // namespace wlab
