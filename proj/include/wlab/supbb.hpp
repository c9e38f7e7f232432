#pragma once

#include <functional>

#include "wlab/interval.hpp"

namespace wlab {

// Branch and bound for suprema. The box function must return a sound
// enclosure of g over the whole box at the given working precision; point
// queries (zero-width boxes) feed the lower bound. Returns an interval
// containing sup g with width <= 2^-prec.
//
// The parallel variant processes the frontier in synchronous waves with
// positional writes, so its result is identical to the serial one for any
// thread count.

using BoxFn1 = std::function<IntervalR(const IntervalR&, long)>;

struct SupStats {
  unsigned long evals = 0;
  unsigned long waves = 0;
};

IntervalR sup1d(const BoxFn1& g, const IntervalR& domain, long prec,
                bool parallel = false, unsigned long max_evals = 1ul << 22,
                SupStats* stats = nullptr);

struct Box2 {
  IntervalR x, y;
};

using BoxFn2 = std::function<IntervalR(const Box2&, long)>;
// Restrict the search to a subdomain: overlaps decides whether a box meets
// it (sound to over-approximate), inside accepts exact midpoints for lower
// bounds. Pass empty functions to search the whole rectangle.
using OverlapFn = std::function<bool(const Box2&)>;
using InsideFn = std::function<bool(const mpq_class&, const mpq_class&)>;

IntervalR sup2d(const BoxFn2& g, const Box2& domain, long prec,
                const OverlapFn& overlaps = {}, const InsideFn& inside = {},
                bool parallel = false, unsigned long max_evals = 1ul << 22,
                SupStats* stats = nullptr);

}  // namespace wlab
