#include "wlab/approx.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <deque>
#include <mutex>
#include <stdexcept>

namespace wlab {

const std::vector<mpz_class>& bump_poly(unsigned long m) {
  static std::deque<std::vector<mpz_class>> cache{{mpz_class(1)}};
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  while (cache.size() <= m) {
    const std::vector<mpz_class>& p = cache.back();
    long n = static_cast<long>(cache.size()) - 1;
    // q = (1 - 2x^2 + x^4) p' + (2(2n-1) x - 4n x^3) p
    std::vector<mpz_class> q(p.size() + 4, mpz_class(0));
    for (std::size_t t = 1; t < p.size(); ++t) {
      mpz_class d = mpz_class(static_cast<long>(t)) * p[t];
      q[t - 1] += d;
      q[t + 1] -= 2 * d;
      q[t + 3] += d;
    }
    for (std::size_t t = 0; t < p.size(); ++t) {
      q[t + 1] += 2 * (2 * n - 1) * p[t];
      q[t + 3] -= 4 * n * p[t];
    }
    while (q.size() > 1 && q.back() == 0) q.pop_back();
    cache.push_back(std::move(q));
  }
  return cache[m];
}

namespace {

IntervalR ir_zero() { return IntervalR::point(Dyadic()); }

// Interval Horner for an integer-coefficient polynomial.
IntervalR zcoeff_eval(const std::vector<mpz_class>& c, const IntervalR& x,
                      long wp) {
  IntervalR acc = IntervalR::point(Dyadic(c.back(), 0));
  for (std::size_t t = c.size() - 1; t-- > 0;) {
    acc = ir_round(ir_add(ir_mul(acc, x), IntervalR::point(Dyadic(c[t], 0))),
                   wp);
  }
  return acc;
}

// Clenshaw evaluation of sum c[k] T_k(t) at a dyadic point |t| <= 1 + 2^-58,
// with one floor per recurrence step.  Signed fixed-point arithmetic is
// essential here: the rounding errors propagate through the same three-term
// recurrence as the true values, whose solutions are Chebyshev functions
// bounded by k+1, so the total error stays quadratic in the degree.  (Both
// interval Clenshaw and monomial interval Horner lose the sign structure and
// amplify widths exponentially in the degree.)
IntervalR cheb_eval_fix(const std::vector<Dyadic>& c, const Dyadic& t, long p) {
  if (c.empty()) return ir_zero();
  Dyadic u1, u2;
  Dyadic t2 = dy_shift(t, 1);
  for (std::size_t k = c.size(); k-- > 1;) {
    Dyadic u = dy_floor(dy_add(dy_sub(dy_mul(t2, u1), u2), c[k]), p);
    u2 = u1;
    u1 = u;
  }
  Dyadic v = dy_floor(dy_add(dy_sub(dy_mul(t, u1), u2), c[0]), p);
  unsigned long n = c.size() + 3;
  Dyadic err(mpz_class(n * n), -p);
  return IntervalR(dy_sub(v, err), dy_add(v, err));
}

// Closed-form evaluation on a core box staying 2^-g away from the support
// boundary; wp absorbs the u^{2m} magnification of the rounding errors.
IntervalR bump_core_eval(const IntervalR& c, unsigned long m, long g,
                         long prec) {
  long wp = prec + 2 * static_cast<long>(m) * g + 24;
  IntervalR den = ir_sub(IntervalR::point(Dyadic(1)), ir_pow_ui(c, 2));
  IntervalR u = ir_recip(den, wp);
  IntervalR arg = ir_sub(IntervalR::point(Dyadic(1)), u);
  IntervalR ev;
  if (dy_cmp(arg.hi, Dyadic(-(wp + 2))) <= 0) {
    // exp(t) <= 2^t for t <= 0; skip the Taylor machinery deep in the tail.
    ev = IntervalR(Dyadic(), dy_pow2(-(wp + 2)));
  } else {
    ev = exp_enclosure(arg, wp);
  }
  IntervalR val = ir_mul(zcoeff_eval(bump_poly(m), c, wp), ev);
  if (m > 0) val = ir_mul(val, ir_round(ir_pow_ui(u, 2 * m), wp));
  return ir_round(val, prec + 2);
}

}  // namespace

IntervalR bump_deriv_on(const IntervalR& x, unsigned long m, long prec) {
  Dyadic one(1), none(-1);
  bool outside = dy_cmp(x.lo, none) < 0 || dy_cmp(x.hi, one) > 0;
  Dyadic lo = dy_max(x.lo, none), hi = dy_min(x.hi, one);
  if (dy_cmp(lo, hi) > 0) return ir_zero();
  // Strip parameter: within 2^-g of the boundary, u = 1/(1-x^2) >= 2^{g-1}
  // =: U and |f^{(m)}| <= C_m U^{2m} e^{1-U} <= 3 C_m U^{2m} 2^-U, which the
  // choice of g pushes below 2^-(prec+2). Monotonicity needs U > 2m.
  mpz_class cm = 0;
  for (const mpz_class& c : bump_poly(m)) cm += abs(c);
  long cmbits = static_cast<long>(bitlen(3 * cm));
  long g = 3;
  while (true) {
    long u = 1L << (g - 1);
    if (u >= static_cast<long>(2 * m + 2) &&
        u >= prec + 2 + cmbits + 2 * static_cast<long>(m) * g)
      break;
    ++g;
    if (g > 60) throw std::length_error("bump_deriv_on: precision out of range");
  }
  Dyadic delta = dy_pow2(-g);
  Dyadic clo = dy_max(lo, dy_add(none, delta));
  Dyadic chi = dy_min(hi, dy_sub(one, delta));
  bool have = false;
  IntervalR acc;
  auto add_piece = [&](const IntervalR& p) {
    acc = have ? ir_hull(acc, p) : p;
    have = true;
  };
  if (dy_cmp(clo, chi) <= 0) add_piece(bump_core_eval({clo, chi}, m, g, prec));
  if (dy_cmp(lo, clo) < 0 || dy_cmp(hi, chi) > 0 || dy_cmp(clo, chi) > 0) {
    Dyadic b = dy_pow2(-(prec + 2));
    add_piece(IntervalR(dy_neg(b), b));
  }
  if (outside) add_piece(ir_zero());
  return acc;
}

namespace {

IntervalR term_deriv_on(const BumpTerm& t, unsigned long m, const IntervalR& x,
                        long prec) {
  mpq_class slo = t.center - 1, shi = t.center + 1;
  IntervalR cover = ir_from_mpq_pair(slo, shi, prec + 40);
  auto xi = ir_intersect(x, cover);
  if (!xi) return ir_zero();
  bool outside =
      dy_cmp(x.lo, cover.lo) < 0 || dy_cmp(x.hi, cover.hi) > 0;
  IntervalR xs = *xi;
  IntervalR y = ir_sub(xs, ir_from_mpq(t.center, prec + 40));
  unsigned long k = t.inv_power;
  IntervalR val;
  if (k == 0) {
    val = bump_deriv_on(y, m, prec + 4);
  } else {
    if (t.center < 3)
      throw std::logic_error("term_deriv_on: x^-k factor needs support in [2,inf)");
    long wp = prec + 16 +
              static_cast<long>(m) * static_cast<long>(bitlen(nat(k + m + 1))) +
              4 * static_cast<long>(m) * static_cast<long>(bitlen(nat(17 * m + 1)));
    // Leibniz: D^m[x^-k f(x-c)] = sum_r C(m,r) (-1)^r k...(k+r-1) x^{-k-r}
    // f^{(m-r)}(x-c); xs stays right of 1 by the support promise.
    val = ir_zero();
    mpz_class binom = 1, rising = 1;
    for (unsigned long r = 0; r <= m; ++r) {
      IntervalR xpow = ir_recip(ir_pow_ui(xs, k + r), wp);
      IntervalR fr = bump_deriv_on(y, m - r, wp);
      mpz_class coef = binom * rising;
      IntervalR piece = ir_scale(ir_mul(xpow, fr), Dyadic(coef, 0));
      val = (r % 2 == 0) ? ir_add(val, piece) : ir_sub(val, piece);
      binom = binom * (m - r) / (r + 1);
      rising *= k + r;
    }
    val = ir_round(val, prec + 4);
  }
  long wbits = prec + 24 +
               4 * static_cast<long>(m) * static_cast<long>(bitlen(nat(17 * m + 1)));
  val = ir_mul(val, ir_from_mpq(t.weight, wbits));
  if (outside) val = ir_hull(val, ir_zero());
  return val;
}

}  // namespace

IntervalR family_deriv_on(const TermFamily& fam, unsigned long m,
                          const IntervalR& x, long prec) {
  long wp = prec + 4 + static_cast<long>(bitlen(nat(fam.size() + 1)));
  IntervalR acc = ir_zero();
  for (const BumpTerm& t : fam) {
    if (t.weight == 0) continue;
    acc = ir_add(acc, term_deriv_on(t, m, x, wp));
  }
  return ir_round(acc, prec + 1);
}

IntervalR family_sup_abs(const TermFamily& fam, unsigned long d,
                         unsigned long m, long prec) {
  if (fam.empty()) return ir_zero();
  mpq_class lo = fam[0].center - 1, hi = fam[0].center + 1;
  for (const BumpTerm& t : fam) {
    lo = std::min(lo, mpq_class(t.center - 1));
    hi = std::max(hi, mpq_class(t.center + 1));
  }
  IntervalR dom = ir_from_mpq_pair(lo, hi, prec + 8);
  mpq_class alo = abs(lo), ahi = abs(hi);
  mpq_class big = std::max(alo, ahi) + 1;
  mpz_class bigz = big.get_num() / big.get_den() + 1;
  long pad = static_cast<long>(d) * static_cast<long>(bitlen(bigz)) + 6;
  BoxFn1 g = [&fam, d, m, pad](const IntervalR& b, long p) {
    IntervalR v = family_deriv_on(fam, m, b, p + pad);
    if (d > 0) v = ir_mul(v, ir_pow_ui(b, d));
    return ir_abs(v);
  };
  return sup1d(g, dom, prec, false, 1ul << 22);
}

bool certify_below(const BoxFn1& e, const BoxFn1& de, const IntervalR& domain,
                   const mpq_class& tau, long wp, unsigned long max_evals,
                   SupStats* stats) {
  IntervalR taub = ir_from_mpq(tau, wp + 8);
  std::vector<IntervalR> frontier{domain};
  unsigned long evals = 0;
  while (!frontier.empty()) {
    std::size_t n = frontier.size();
    evals += 2 * n;
    if (stats) {
      stats->evals = evals;
      stats->waves += 1;
    }
    if (evals > max_evals) return false;
    // 0 = certified below tau, 1 = split, 2 = breach or unsplittable.
    std::vector<int> verdict(n, 1);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::size_t i = 0; i < n; ++i) {
      const IntervalR& b = frontier[i];
      IntervalR em = e(IntervalR::point(b.mid()), wp);
      if (dy_cmp(ir_abs(em).lo, taub.hi) >= 0) {
        verdict[i] = 2;
        continue;
      }
      Dyadic h = dy_shift(b.width(), -1);
      IntervalR enc = ir_add(em, ir_mul(de(b, wp), IntervalR(dy_neg(h), h)));
      if (dy_cmp(ir_abs(enc).hi, taub.lo) < 0) verdict[i] = 0;
      else if (h.is_zero()) verdict[i] = 2;
    }
    std::vector<IntervalR> next;
    next.reserve(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      if (verdict[i] == 2) return false;
      if (verdict[i] != 1) continue;
      Dyadic mid = frontier[i].mid();
      next.push_back({frontier[i].lo, mid});
      next.push_back({mid, frontier[i].hi});
    }
    frontier = std::move(next);
  }
  return true;
}

namespace {

// Candidate approximant in the Chebyshev basis: P(x) = sum b[k] T_k(x/N),
// with derivative coefficient data for centered-form padding.  The basis
// matters: Chebyshev coefficients of a bounded function stay bounded, while
// the equivalent monomial coefficients explode exponentially in the degree.
struct ChebCandidate {
  std::vector<Dyadic> b;      // coefficients of T_k(x/N)
  std::vector<mpq_class> db;  // exact coefficients of d/dx P in the same basis
  std::vector<mpq_class> b2;  // exact coefficients of P'' in the same basis
  mpq_class l3;               // upper bound for sup |P'''| on [-N,N]
};

ChebCandidate cheb_candidate(const TermFamily& fam, unsigned long m,
                             unsigned long domain_bound, unsigned long deg,
                             unsigned long j) {
  long nb = static_cast<long>(domain_bound);
  long prec_v = static_cast<long>(j) + 20 + static_cast<long>(bitlen(nat(deg)));
  std::vector<Dyadic> ts(deg + 1), vs(deg + 1);
  long vb = 0;
  for (unsigned long q = 0; q <= deg; ++q) {
    double t = std::cos(M_PI * static_cast<double>(q) / static_cast<double>(deg));
    ts[q] = dy_floor(dy_from_double(t), 60);
    if (q > 0 && dy_cmp(ts[q], ts[q - 1]) >= 0)
      throw std::logic_error("cheb_candidate: node collision");
    Dyadic x = dy_mul(ts[q], Dyadic(nb));
    vs[q] = dy_floor(family_deriv_on(fam, m, IntervalR::point(x), prec_v).mid(),
                     prec_v);
    if (!vs[q].is_zero()) {
      long mag = static_cast<long>(mpz_sizeinbase(vs[q].man.get_mpz_t(), 2)) +
                 vs[q].exp;
      vb = std::max(vb, mag);
    }
  }
  // First-kind discrete cosine transform over the node values.  T_k(ts[q])
  // comes from the three-term recurrence with floor rounding; its error
  // grows only quadratically in k, so cbits absorbs it together with the
  // value magnitudes.
  long cbits = static_cast<long>(j) + 16 +
               3 * static_cast<long>(bitlen(nat(deg + 1))) + std::max(0L, vb);
  std::vector<mpq_class> beta(deg + 1, mpq_class(0));
  for (unsigned long q = 0; q <= deg; ++q) {
    mpq_class w = vs[q].to_mpq();
    if (q == 0 || q == deg) w /= 2;
    if (w == 0) continue;
    beta[0] += w;
    if (deg >= 1) beta[1] += w * ts[q].to_mpq();
    Dyadic cp(1L), cc = ts[q];
    for (unsigned long k = 2; k <= deg; ++k) {
      Dyadic cn = dy_floor(dy_sub(dy_shift(dy_mul(ts[q], cc), 1), cp), cbits);
      cp = cc;
      cc = cn;
      beta[k] += w * cc.to_mpq();
    }
  }
  for (unsigned long k = 0; k <= deg; ++k) {
    beta[k] *= 2;
    beta[k] /= static_cast<long>(deg);
    if (k == 0 || k == deg) beta[k] /= 2;
  }
  // Granularity rounding: |T_k| <= 1 on the domain, so the coefficient shifts
  // perturb the sup by at most (deg+1) 2^-gb < 2^-(j+4).
  long gb = static_cast<long>(j) + 6 + static_cast<long>(bitlen(nat(deg + 2)));
  ChebCandidate out;
  out.b.resize(deg + 1);
  for (unsigned long k = 0; k <= deg; ++k)
    out.b[k] = dy_from_mpq_floor(beta[k], gb);
  while (out.b.size() > 1 && out.b.back().is_zero()) out.b.pop_back();
  // Chebyshev coefficients of the derivatives via the standard descending
  // recurrence, exact over the rationals.  Certification needs P' and P''
  // pointwise plus a sup bound on P'''; the coefficient sum bounds the sup
  // because |T_k| <= 1 on the domain.
  auto t_deriv = [nb](const std::vector<mpq_class>& c) {
    std::vector<mpq_class> g;
    std::size_t n = c.size();
    if (n < 2) return g;
    g.assign(n + 1, mpq_class(0));
    for (std::size_t k = n - 1; k >= 1; --k) {
      g[k - 1] = g[k + 1] + mpq_class(2 * static_cast<long>(k)) * c[k];
      if (k == 1) break;
    }
    g[0] /= 2;
    g.resize(n - 1);
    for (mpq_class& x : g) x /= nb;
    return g;
  };
  std::vector<mpq_class> bq(out.b.size());
  for (std::size_t k = 0; k < out.b.size(); ++k) bq[k] = out.b[k].to_mpq();
  out.db = t_deriv(bq);
  out.b2 = t_deriv(out.db);
  for (const mpq_class& x : t_deriv(out.b2)) out.l3 += abs(x);
  return out;
}

// Exact expansion of sum b[k] T_k(x/N) into monomial coefficients.  The
// results can be large rationals; callers only pay this once, after a
// candidate has been certified.
std::vector<mpq_class> cheb_to_monomial(const std::vector<Dyadic>& b, long nb) {
  std::size_t s = b.size();
  std::vector<mpq_class> out(s, mpq_class(0));
  if (s == 0) return out;
  out[0] += b[0].to_mpq();
  if (s == 1) return out;
  std::vector<mpq_class> prev{mpq_class(1)};
  std::vector<mpq_class> cur{mpq_class(0), mpq_of(1, nb)};
  mpq_class b1 = b[1].to_mpq();
  for (std::size_t t = 0; t < cur.size(); ++t) out[t] += b1 * cur[t];
  mpq_class two_over_n = mpq_of(2, nb);
  for (std::size_t k = 2; k < s; ++k) {
    std::vector<mpq_class> nxt(k + 1, mpq_class(0));
    for (std::size_t t = 0; t < cur.size(); ++t)
      nxt[t + 1] += two_over_n * cur[t];
    for (std::size_t t = 0; t < prev.size(); ++t) nxt[t] -= prev[t];
    mpq_class bk = b[k].to_mpq();
    if (bk != 0) {
      for (std::size_t t = 0; t < nxt.size(); ++t) out[t] += bk * nxt[t];
    }
    prev = std::move(cur);
    cur = std::move(nxt);
  }
  return out;
}

}  // namespace

ZPoly certified_slice_poly(const TermFamily& fam, unsigned long domain_bound,
                           unsigned long m, unsigned long j) {
  if (fam.empty()) return {};
  if (domain_bound == 0) {
    IntervalR v =
        family_deriv_on(fam, m, IntervalR::point(Dyadic()), static_cast<long>(j) + 6);
    ZPoly p{RationalComplex(v.mid().to_mpq(), mpq_class(0))};
    zpoly_trim(p);
    return p;
  }
  long nb = static_cast<long>(domain_bound);
  IntervalR dom(Dyadic(-nb), Dyadic(nb));
  mpq_class tau(3, 4);
  tau /= mpq_class(pow2(j));
  long wp = static_cast<long>(j) + 26;
  const bool debug = std::getenv("WLAB_SLICE_DEBUG") != nullptr;
  static const unsigned long ladder[] = {16,  24,  32,  48,   64,  96,  128,
                                         192, 256, 384, 512, 768, 1024, 1536};
  for (unsigned long deg : ladder) {
    ChebCandidate cc = cheb_candidate(fam, m, domain_bound, deg, j);
    long we = wp + 2 * static_cast<long>(bitlen(nat(cc.b.size() + 3))) + 6;
    // Granularity for the Clenshaw argument t = x/N: its perturbation enters
    // through the coefficient sums of the evaluated series.
    mpq_class dmag(1);
    for (const mpq_class& q : cc.db) dmag += abs(q);
    for (const mpq_class& q : cc.b2) dmag += abs(q);
    dmag += cc.l3;
    mpz_class dmagz = dmag.get_num() / dmag.get_den() + 1;
    long tb = we + 4 + static_cast<long>(bitlen(dmagz));
    std::vector<Dyadic> dbf(cc.db.size()), b2f(cc.b2.size());
    for (std::size_t k = 0; k < cc.db.size(); ++k)
      dbf[k] = dy_from_mpq_floor(cc.db[k], we + 4);
    for (std::size_t k = 0; k < cc.b2.size(); ++k)
      b2f[k] = dy_from_mpq_floor(cc.b2[k], we + 4);
    Dyadic l3hi = ir_from_mpq(cc.l3, 30).hi;
    mpq_class invn = mpq_of(1, nb);
    // Blanket slack absorbing the sub-ulp effects: argument flooring at tb
    // and the derivative-coefficient floors at we+4.
    Dyadic tiny(mpz_class(16 * static_cast<long>(cc.b.size() + 3)), -(we + 4));
    BoxFn1 e = [&cc, &fam, m, we, tb, &invn, &tiny](const IntervalR& b,
                                                    long p) {
      Dyadic t = dy_from_mpq_floor(b.mid().to_mpq() * invn, tb);
      IntervalR pv = cheb_eval_fix(cc.b, t, we + 4);
      pv = IntervalR(dy_sub(pv.lo, tiny), dy_add(pv.hi, tiny));
      return ir_round(ir_sub(pv, family_deriv_on(fam, m, b, we)), p);
    };
    // P' over a box via the locally centered form P'(mid) +- (|P''(mid)| h +
    // L3 h^2): point Clenshaw plus a pad built from the local curvature, so
    // only genuine high-curvature regions force fine boxes.  Direct interval
    // evaluation of a degree-hundreds polynomial over a box would be useless
    // here -- its dependency blowup is exponential in the degree.
    BoxFn1 de = [&dbf, &b2f, &fam, m, we, tb, l3hi, &invn,
                 &tiny](const IntervalR& b, long p) {
      Dyadic t = dy_from_mpq_floor(b.mid().to_mpq() * invn, tb);
      IntervalR pd = cheb_eval_fix(dbf, t, we + 4);
      Dyadic h = dy_shift(b.width(), -1);
      Dyadic curv = dy_add(ir_abs(cheb_eval_fix(b2f, t, we + 4)).hi, tiny);
      Dyadic pad =
          dy_add(dy_add(dy_mul(curv, h), dy_mul(l3hi, dy_mul(h, h))), tiny);
      pd = IntervalR(dy_sub(pd.lo, pad), dy_add(pd.hi, pad));
      return ir_round(ir_sub(pd, family_deriv_on(fam, m + 1, b, we)), p);
    };
    // Sampled margin screen: only rungs whose error stays below 7/8 tau at
    // 2*deg+1 Chebyshev-angle points go to full certification, so hopeless
    // candidates fail after deg evaluations instead of a deep search.  The
    // angle grid matches the lobe spacing of the approximation error, which
    // clusters toward the endpoints exactly like the nodes do.
    Dyadic tau_screen = dy_from_mpq_floor(tau * 7 / 8, wp);
    bool promising = true;
    Dyadic seen;
    for (unsigned long i = 0; i <= 2 * deg && promising; ++i) {
      double th = std::cos(M_PI * static_cast<double>(i) /
                           static_cast<double>(2 * deg));
      Dyadic xs = dy_mul(dy_floor(dy_from_double(th), 40), Dyadic(nb));
      IntervalR em = e(IntervalR::point(xs), wp);
      seen = dy_max(seen, ir_abs(em).hi);
      if (dy_cmp(ir_abs(em).hi, tau_screen) > 0) promising = false;
    }
    if (debug) {
      std::fprintf(stderr,
                   "[slice N=%lu m=%lu j=%lu] deg=%lu screen max ~%.3e %s\n",
                   domain_bound, m, j, deg, seen.to_double(),
                   promising ? "PASS" : "fail");
    }
    if (!promising) continue;
    SupStats st;
    bool ok = certify_below(e, de, dom, tau, wp, 1ul << 18, &st);
    if (debug) {
      std::fprintf(stderr,
                   "[slice N=%lu m=%lu j=%lu] deg=%lu certify=%d evals=%lu "
                   "waves=%lu\n",
                   domain_bound, m, j, deg, ok ? 1 : 0, st.evals, st.waves);
    }
    if (ok) {
      std::vector<mpq_class> mono = cheb_to_monomial(cc.b, nb);
      ZPoly out;
      out.reserve(mono.size());
      for (const mpq_class& q : mono) out.emplace_back(q, mpq_class(0));
      zpoly_trim(out);
      return out;
    }
  }
  throw std::length_error("certified_slice_poly: degree ladder exhausted");
}

}  // namespace wlab
