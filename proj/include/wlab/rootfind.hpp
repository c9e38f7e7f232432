#pragma once

#include <functional>
#include <vector>

#include "wlab/interval.hpp"
#include "wlab/rational.hpp"

namespace wlab {

// Monic polynomial X^d + sum_{k<d} a_k X^k given through coefficient
// enclosures: coeff(k, prec) must contain a_k with per-coordinate
// half-width <= 2^-prec, for 0 <= k < d.
struct MonicInput {
  unsigned degree = 0;
  std::function<IntervalC(unsigned, long)> coeff;
};

// Certified square: the boundary contour of the axis-aligned square with
// the given dyadic center and half-side has winding number `count`, so the
// square holds exactly `count` roots with multiplicity. `segments` is the
// number of contour sub-arcs the winding computation needed.
struct RootBox {
  RationalComplex center;
  mpq_class radius = 0;
  unsigned count = 0;
  unsigned long segments = 0;
};

struct RootCertification {
  std::vector<RootBox> boxes;          // sorted by (Re, Im) of centers
  std::vector<RationalComplex> roots;  // degree entries, multiplicity expanded
};

// Isolates all roots into certified squares of half-side <= 2^-(n+1), so
// each emitted center is within 2^-n of every root it stands for. Winding
// counts over all boxes sum to the degree. The parallel flag only changes
// scheduling; the result is identical for any thread count.
//
// Throws std::length_error if clusters refuse to shrink (root separation
// far below the target scale combined with extreme coefficient size), and
// std::logic_error if an internal consistency check fails.
RootCertification isolate_roots(const MonicInput& in, long n,
                                bool parallel = false);

}  // namespace wlab
