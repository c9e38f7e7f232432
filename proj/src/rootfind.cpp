#include "wlab/rootfind.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>

#include "wlab/enumerations.hpp"

namespace wlab {
namespace {

// Cells live on dyadic grids: at level ell the cell (a, b) spans
// [2a, 2a+2] x [2b, 2b+2] times 2^ell, so its half-side is 2^ell and its
// center coordinates are the odd multiples (2a+1) 2^ell, (2b+1) 2^ell.
struct Cell {
  mpz_class a, b;
};

IntervalC cell_box(const Cell& c, long ell) {
  return {IntervalR(Dyadic(2 * c.a, ell), Dyadic(2 * c.a + 2, ell)),
          IntervalR(Dyadic(2 * c.b, ell), Dyadic(2 * c.b + 2, ell))};
}

// Sound enclosure of the monic polynomial over a box; Horner with outward
// re-rounding per step so mantissas stay near the working precision.
IntervalC horner_box(const std::vector<IntervalC>& cs, const IntervalC& z,
                     long wp) {
  IntervalC acc = cs.back();
  for (size_t k = cs.size() - 1; k-- > 0;) {
    acc = ic_round(ic_add(ic_mul(acc, z), cs[k]), wp);
  }
  return acc;
}

std::vector<IntervalC> coeff_encl(const MonicInput& in, long prec, long wp) {
  std::vector<IntervalC> cs(in.degree + 1);
  for (unsigned k = 0; k < in.degree; ++k) {
    cs[k] = ic_round(in.coeff(k, prec), wp);
  }
  cs[in.degree] = IntervalC::point(Dyadic(1), Dyadic(0));
  return cs;
}

std::vector<IntervalC> deriv_coeffs(const std::vector<IntervalC>& cs) {
  std::vector<IntervalC> dcs(cs.size() - 1);
  for (size_t k = 0; k + 1 < cs.size(); ++k) {
    dcs[k] = ic_scale_real(cs[k + 1],
                           IntervalR::point(Dyadic(static_cast<long>(k + 1))));
  }
  return dcs;
}

// Centered-form exclusion test. Plain interval Horner over a cell widens by
// the coefficient-magnitude derivative bound, which never shrinks near a
// multiple root and stalls the subdivision; the centered form
//   P(B) in P(c) + P'(B) (B - c)
// (sound because P(z) - P(c) = (z - c) int_0^1 P'(c + t(z - c)) dt and the
// rectangle P'(B) is convex) tightens with the local derivative instead.
bool cell_may_vanish(const Cell& c, long ell, const std::vector<IntervalC>& cs,
                     const std::vector<IntervalC>& dcs, long wp) {
  IntervalC ctr = IntervalC::point(Dyadic(2 * c.a + 1, ell),
                                   Dyadic(2 * c.b + 1, ell));
  IntervalC at_ctr = horner_box(cs, ctr, wp);
  if (!dcs.empty()) {
    IntervalC dv = horner_box(dcs, cell_box(c, ell), wp);
    Dyadic h = dy_pow2(ell);
    IntervalR spread(dy_neg(h), h);
    at_ctr = ic_add(at_ctr, ic_round(ic_mul(dv, IntervalC{spread, spread}), wp));
  }
  return at_ctr.contains_zero();
}

// Keeps exactly the cells whose enclosure still meets zero; positional
// writes keep the output order independent of the thread count.
std::vector<Cell> survivors(const std::vector<Cell>& cells, long ell,
                            const std::vector<IntervalC>& cs,
                            const std::vector<IntervalC>& dcs, long wp,
                            bool parallel) {
  std::vector<char> keep(cells.size(), 0);
  const long m = static_cast<long>(cells.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
  for (long i = 0; i < m; ++i) {
    keep[static_cast<size_t>(i)] =
        cell_may_vanish(cells[static_cast<size_t>(i)], ell, cs, dcs, wp) ? 1
                                                                         : 0;
  }
  (void)parallel;
  std::vector<Cell> out;
  for (long i = 0; i < m; ++i) {
    if (keep[static_cast<size_t>(i)]) out.push_back(cells[static_cast<size_t>(i)]);
  }
  return out;
}

std::vector<Cell> refine(std::vector<Cell> act, long from_ell, long to_ell,
                         const std::vector<IntervalC>& cs,
                         const std::vector<IntervalC>& dcs, long wp,
                         bool parallel) {
  for (long ell = from_ell; ell > to_ell; --ell) {
    std::vector<Cell> kids;
    kids.reserve(act.size() * 4);
    for (const Cell& c : act) {
      kids.push_back({2 * c.a, 2 * c.b});
      kids.push_back({2 * c.a + 1, 2 * c.b});
      kids.push_back({2 * c.a, 2 * c.b + 1});
      kids.push_back({2 * c.a + 1, 2 * c.b + 1});
    }
    act = survivors(kids, ell - 1, cs, dcs, wp, parallel);
  }
  return act;
}

// 8-connected components of the surviving cells, listed in first-seen
// order with members in input order.
std::vector<std::vector<size_t>> components(const std::vector<Cell>& cells) {
  std::map<std::pair<mpz_class, mpz_class>, size_t> at;
  for (size_t i = 0; i < cells.size(); ++i) at[{cells[i].a, cells[i].b}] = i;
  std::vector<size_t> parent(cells.size());
  for (size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  std::function<size_t(size_t)> find = [&](size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  auto unite = [&](size_t x, size_t y) {
    x = find(x);
    y = find(y);
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  };
  for (size_t i = 0; i < cells.size(); ++i) {
    for (int dx = -1; dx <= 1; ++dx) {
      for (int dy = -1; dy <= 1; ++dy) {
        if (dx == 0 && dy == 0) continue;
        auto it = at.find({cells[i].a + dx, cells[i].b + dy});
        if (it != at.end()) unite(i, it->second);
      }
    }
  }
  std::map<size_t, std::vector<size_t>> buckets;
  for (size_t i = 0; i < cells.size(); ++i) buckets[find(i)].push_back(i);
  std::vector<std::vector<size_t>> out;
  for (auto& kv : buckets) out.push_back(std::move(kv.second));
  return out;
}

// Axis-aligned square contour, dyadic center and half-side.
struct Contour {
  Dyadic cx, cy, half;
};

// Bounding square of a component, padded by one full cell so the contour
// runs through cells the exclusion sweep has certified root-free.
Contour comp_contour(const std::vector<Cell>& cells,
                     const std::vector<size_t>& comp, long ell) {
  mpz_class ax = cells[comp[0]].a, Ax = ax;
  mpz_class ay = cells[comp[0]].b, Ay = ay;
  for (size_t i : comp) {
    ax = std::min(ax, cells[i].a);
    Ax = std::max(Ax, cells[i].a);
    ay = std::min(ay, cells[i].b);
    Ay = std::max(Ay, cells[i].b);
  }
  mpz_class spread = std::max(mpz_class(Ax - ax), mpz_class(Ay - ay));
  return {Dyadic(ax + Ax + 1, ell), Dyadic(ay + Ay + 1, ell),
          Dyadic(spread + 2, ell)};
}

struct Pt {
  Dyadic x, y;
};

// Splits the axis-parallel edge a -> b until every leaf sub-segment's image
// box clears the Rouche margin and fits inside an open half-plane; the leaf
// endpoints after a (through b) are appended to the chain in order. The
// image box comes from the centered form pm(m) + pm'(seg) (seg - m), whose
// width tracks the local derivative; the plain interval evaluation widens
// with the global coefficient sizes and stalls near multiple roots.
bool refine_edge(const ZPoly& pm, const ZPoly& pd, const Pt& a, const Pt& b,
                 const Dyadic& margin, long wp, int cap,
                 std::vector<Pt>& chain, unsigned long& budget) {
  struct Frame {
    Pt a, b;
    int depth;
  };
  std::vector<Frame> st;
  st.push_back({a, b, 0});
  const Dyadic zero;
  while (!st.empty()) {
    Frame f = st.back();
    st.pop_back();
    IntervalC seg{IntervalR(dy_min(f.a.x, f.b.x), dy_max(f.a.x, f.b.x)),
                  IntervalR(dy_min(f.a.y, f.b.y), dy_max(f.a.y, f.b.y))};
    Pt m{dy_shift(dy_add(f.a.x, f.b.x), -1), dy_shift(dy_add(f.a.y, f.b.y), -1)};
    IntervalC img = ic_from_rc(zpoly_eval(pm, rc_from_dyadic(m.x, m.y)), wp);
    if (!pd.empty()) {
      IntervalC dv = zpoly_eval_box(pd, seg, wp);
      Dyadic hx = dy_shift(dy_abs(dy_sub(f.b.x, f.a.x)), -1);
      Dyadic hy = dy_shift(dy_abs(dy_sub(f.b.y, f.a.y)), -1);
      img = ic_add(img, ic_round(ic_mul(dv, IntervalC{IntervalR(dy_neg(hx), hx),
                                                      IntervalR(dy_neg(hy), hy)}),
                                 wp));
    }
    bool clear = dy_cmp(ic_abs_lower(img, wp), margin) > 0;
    bool halfplane = img.re.lo > zero || img.re.hi < zero ||
                     img.im.lo > zero || img.im.hi < zero;
    if (clear && halfplane) {
      chain.push_back(f.b);
      continue;
    }
    if (f.depth >= cap || budget == 0) return false;
    --budget;
    st.push_back({m, f.b, f.depth + 1});
    st.push_back({f.a, m, f.depth + 1});
  }
  return true;
}

// Half-open quadrant labels partition C minus the origin; the label equals
// floor(arg / (pi/2)) for the canonical argument in [0, 2pi).
int quadrant(const RationalComplex& v) {
  int sr = sgn(v.re), si = sgn(v.im);
  if (sr > 0 && si >= 0) return 0;
  if (sr <= 0 && si > 0) return 1;
  if (sr < 0 && si <= 0) return 2;
  if (sr >= 0 && si < 0) return 3;
  throw std::logic_error("quadrant of zero");
}

// Quadrant-crossing count along the closed chain. Each consecutive pair
// lies in a common open half-plane, so its true argument increment is in
// (-pi, pi) and the label step determines it up to the +-2 ambiguity, which
// the cross product resolves. The steps telescope to 4 * winding.
std::optional<int> chain_winding(const std::vector<RationalComplex>& vals) {
  long total = 0;
  for (size_t t = 0; t + 1 < vals.size(); ++t) {
    int step = ((quadrant(vals[t + 1]) - quadrant(vals[t]) + 5) % 4) - 1;
    if (step == 2) {
      mpq_class cross =
          vals[t].re * vals[t + 1].im - vals[t].im * vals[t + 1].re;
      int s = sgn(cross);
      if (s == 0) return std::nullopt;
      step = s > 0 ? 2 : -2;
    }
    total += step;
  }
  if (total % 4 != 0 || total < 0) return std::nullopt;
  return static_cast<int>(total / 4);
}

// One certification attempt at coefficient precision j: freeze the dyadic
// midpoint polynomial, bound the coefficient perturbation over the contour
// (Rouche budget), and count quadrant crossings of the midpoint values.
std::optional<std::pair<int, unsigned long>> winding_at(const Contour& ct,
                                                        long j,
                                                        const MonicInput& in) {
  ZPoly pm(in.degree + 1);
  for (unsigned k = 0; k < in.degree; ++k) {
    IntervalC e = in.coeff(k, j);
    pm[k] = rc_from_dyadic(e.re.mid(), e.im.mid());
  }
  pm[in.degree] = RationalComplex(1);

  // |a_k - mid_k| <= 2^-j per coordinate, so the polynomial perturbation on
  // the contour is below 2^(1-j) * sum_k rho^k once rho bounds |z| there.
  Dyadic rho = dy_shift(
      dy_max(Dyadic(1),
             dy_add(dy_max(dy_abs(ct.cx), dy_abs(ct.cy)), ct.half)),
      1);
  Dyadic esum, rpow(1);
  for (unsigned k = 0; k < in.degree; ++k) {
    esum = dy_add(esum, rpow);
    rpow = dy_mul(rpow, rho);
  }
  const Dyadic margin = dy_shift(esum, 1 - j);
  const long wp = j + 32;

  Pt c0{dy_sub(ct.cx, ct.half), dy_sub(ct.cy, ct.half)};
  Pt c1{dy_add(ct.cx, ct.half), dy_sub(ct.cy, ct.half)};
  Pt c2{dy_add(ct.cx, ct.half), dy_add(ct.cy, ct.half)};
  Pt c3{dy_sub(ct.cx, ct.half), dy_add(ct.cy, ct.half)};

  const ZPoly pd = zpoly_derivative(pm);
  std::vector<Pt> chain;
  chain.push_back(c0);
  unsigned long budget = 1ul << 18;
  if (!refine_edge(pm, pd, c0, c1, margin, wp, 48, chain, budget)) return {};
  if (!refine_edge(pm, pd, c1, c2, margin, wp, 48, chain, budget)) return {};
  if (!refine_edge(pm, pd, c2, c3, margin, wp, 48, chain, budget)) return {};
  if (!refine_edge(pm, pd, c3, c0, margin, wp, 48, chain, budget)) return {};

  std::vector<RationalComplex> vals;
  vals.reserve(chain.size());
  for (const Pt& p : chain) {
    RationalComplex v = zpoly_eval(pm, rc_from_dyadic(p.x, p.y));
    if (v.is_zero()) return {};
    vals.push_back(v);
  }
  auto w = chain_winding(vals);
  if (!w) return {};
  return std::make_pair(*w, static_cast<unsigned long>(chain.size() - 1));
}

std::optional<RootBox> certify_contour(const Contour& ct, long n,
                                       const MonicInput& in) {
  const long j1 = static_cast<long>(in.degree) * (n + 10) + 48;
  for (long j : {j1, j1 + 80, j1 + 240}) {
    auto r = winding_at(ct, j, in);
    if (r) {
      RootBox rb;
      rb.center = rc_from_dyadic(ct.cx, ct.cy);
      rb.radius = ct.half.to_mpq();
      rb.count = static_cast<unsigned>(r->first);
      rb.segments = r->second;
      return rb;
    }
  }
  return std::nullopt;
}

}  // namespace

RootCertification isolate_roots(const MonicInput& in, long n, bool parallel) {
  if (n < 0) throw std::invalid_argument("isolate_roots: negative precision");
  RootCertification out;
  const unsigned d = in.degree;
  if (d == 0) return out;

  // Cauchy bound: every root satisfies |z| < 1 + max_k |a_k|, so a start
  // square with half-side the next power of two contains them strictly.
  Dyadic maxa;
  for (unsigned k = 0; k < d; ++k) {
    maxa = dy_max(maxa, ic_abs_upper(in.coeff(k, 4), 8));
  }
  long e = 1;
  while (dy_cmp(dy_add(Dyadic(1), maxa), dy_pow2(e)) > 0) ++e;

  // Exclusion sweep down to the floor grid. The coefficient precision must
  // outrun multiplicity-d clustering, whose non-excludable radius scales
  // like the d-th root of the coefficient error.
  long ell = -(n + 6);
  long je = static_cast<long>(d) * (n + 6) + 16;
  long wp = je + 24;
  std::vector<IntervalC> cs = coeff_encl(in, je, wp);
  std::vector<IntervalC> dcs = deriv_coeffs(cs);
  std::vector<Cell> act = {{-1, -1}, {0, -1}, {-1, 0}, {0, 0}};
  act = survivors(act, e - 1, cs, dcs, wp, parallel);
  act = refine(std::move(act), e - 1, ell, cs, dcs, wp, parallel);

  // Cluster, certify, and where a cluster is still too wide re-refine just
  // that cluster at higher precision.
  const Dyadic target = dy_pow2(-(n + 1));
  std::vector<Contour> ready;
  for (int round = 0;; ++round) {
    std::vector<Cell> rest;
    for (const auto& comp : components(act)) {
      Contour ct = comp_contour(act, comp, ell);
      if (dy_cmp(ct.half, target) <= 0) {
        ready.push_back(ct);
      } else {
        for (size_t i : comp) rest.push_back(act[i]);
      }
    }
    if (rest.empty()) break;
    if (round >= 2) {
      throw std::length_error("isolate_roots: cluster does not shrink");
    }
    je = static_cast<long>(d) * (n + 6 + 2 * (round + 1)) + 16;
    wp = je + 24;
    cs = coeff_encl(in, je, wp);
    dcs = deriv_coeffs(cs);
    act = refine(std::move(rest), ell, ell - 2, cs, dcs, wp, parallel);
    ell -= 2;
  }

  std::vector<std::optional<RootBox>> certified(ready.size());
  const long m = static_cast<long>(ready.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
  for (long i = 0; i < m; ++i) {
    certified[static_cast<size_t>(i)] =
        certify_contour(ready[static_cast<size_t>(i)], n, in);
  }

  for (long i = 0; i < m; ++i) {
    const auto& rb = certified[static_cast<size_t>(i)];
    if (!rb) throw std::length_error("isolate_roots: contour not certifiable");
    if (rb->count > 0) out.boxes.push_back(*rb);
  }
  std::sort(out.boxes.begin(), out.boxes.end(),
            [](const RootBox& x, const RootBox& y) {
              if (x.center.re != y.center.re) return x.center.re < y.center.re;
              return x.center.im < y.center.im;
            });
  unsigned long found = 0;
  for (const RootBox& rb : out.boxes) {
    for (unsigned c = 0; c < rb.count; ++c) out.roots.push_back(rb.center);
    found += rb.count;
  }
  if (found != d) throw std::logic_error("isolate_roots: winding counts disagree with degree");
  return out;
}

}  // namespace wlab
