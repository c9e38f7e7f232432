#include "wlab/supbb.hpp"

#include <stdexcept>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wlab {

namespace {

Dyadic mid_of(const IntervalR& b) { return dy_shift(dy_add(b.lo, b.hi), -1); }

}  // namespace

IntervalR sup1d(const BoxFn1& g, const IntervalR& domain, long prec,
                bool parallel, unsigned long max_evals, SupStats* stats) {
  long wp = prec + 6;
  Dyadic tol = dy_pow2(-prec);
  std::vector<IntervalR> frontier{domain};
  Dyadic lo = g(IntervalR::point(mid_of(domain)), wp).lo;
  unsigned long evals = 1, waves = 0;
  Dyadic hi_max = lo;
  while (true) {
    ++waves;
    std::size_t n = frontier.size();
    std::vector<IntervalR> vals(n);
    std::vector<Dyadic> lows(n);
    evals += 2 * n;
    if (evals > max_evals) throw std::runtime_error("sup1d: budget exhausted");
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
    for (std::size_t i = 0; i < n; ++i) {
      vals[i] = g(frontier[i], wp);
      lows[i] = g(IntervalR::point(mid_of(frontier[i])), wp).lo;
    }
    for (std::size_t i = 0; i < n; ++i) lo = dy_max(lo, lows[i]);
    hi_max = vals[0].hi;
    for (std::size_t i = 1; i < n; ++i) hi_max = dy_max(hi_max, vals[i].hi);
    if (dy_cmp(dy_sub(hi_max, lo), tol) <= 0) break;
    std::vector<IntervalR> next;
    next.reserve(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      if (dy_cmp(vals[i].hi, lo) < 0) continue;
      Dyadic m = mid_of(frontier[i]);
      next.push_back({frontier[i].lo, m});
      next.push_back({m, frontier[i].hi});
    }
    if (next.empty()) break;
    frontier = std::move(next);
  }
  if (stats) {
    stats->evals = evals;
    stats->waves = waves;
  }
  return {lo, hi_max};
}

IntervalR sup2d(const BoxFn2& g, const Box2& domain, long prec,
                const OverlapFn& overlaps, const InsideFn& inside,
                bool parallel, unsigned long max_evals, SupStats* stats) {
  long wp = prec + 6;
  Dyadic tol = dy_pow2(-prec);
  std::vector<Box2> frontier{domain};
  auto mid_in = [&](const Box2& b, Dyadic& mx, Dyadic& my) {
    mx = mid_of(b.x);
    my = mid_of(b.y);
    return !inside || inside(mx.to_mpq(), my.to_mpq());
  };
  Dyadic lo;
  bool have_lo = false;
  {
    Dyadic mx, my;
    if (mid_in(domain, mx, my)) {
      lo = g({IntervalR::point(mx), IntervalR::point(my)}, wp).lo;
      have_lo = true;
    }
  }
  unsigned long evals = 1, waves = 0;
  Dyadic hi_max = lo;
  while (true) {
    ++waves;
    std::size_t n = frontier.size();
    std::vector<IntervalR> vals(n);
    std::vector<Dyadic> lows(n);
    std::vector<char> has_low(n, 0);
    evals += 2 * n;
    if (evals > max_evals) throw std::runtime_error("sup2d: budget exhausted");
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
    for (std::size_t i = 0; i < n; ++i) {
      vals[i] = g(frontier[i], wp);
      Dyadic mx, my;
      if (mid_in(frontier[i], mx, my)) {
        lows[i] = g({IntervalR::point(mx), IntervalR::point(my)}, wp).lo;
        has_low[i] = 1;
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (!has_low[i]) continue;
      lo = have_lo ? dy_max(lo, lows[i]) : lows[i];
      have_lo = true;
    }
    if (!have_lo) throw std::runtime_error("sup2d: no interior sample");
    hi_max = vals[0].hi;
    for (std::size_t i = 1; i < n; ++i) hi_max = dy_max(hi_max, vals[i].hi);
    if (dy_cmp(dy_sub(hi_max, lo), tol) <= 0) break;
    std::vector<Box2> next;
    next.reserve(4 * n);
    for (std::size_t i = 0; i < n; ++i) {
      if (dy_cmp(vals[i].hi, lo) < 0) continue;
      Dyadic mx = mid_of(frontier[i].x), my = mid_of(frontier[i].y);
      Box2 kids[4] = {{{frontier[i].x.lo, mx}, {frontier[i].y.lo, my}},
                      {{mx, frontier[i].x.hi}, {frontier[i].y.lo, my}},
                      {{frontier[i].x.lo, mx}, {my, frontier[i].y.hi}},
                      {{mx, frontier[i].x.hi}, {my, frontier[i].y.hi}}};
      for (const Box2& k : kids) {
        if (overlaps && !overlaps(k)) continue;
        next.push_back(k);
      }
    }
    if (next.empty()) break;
    frontier = std::move(next);
  }
  if (stats) {
    stats->evals = evals;
    stats->waves = waves;
  }
  return {lo, hi_max};
}

}  // namespace wlab
