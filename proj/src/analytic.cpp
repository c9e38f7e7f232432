#include "wlab/analytic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>

namespace wlab {

namespace {

unsigned long advice_at_zero(const Name& raw) {
  Nat v = raw.at(0ul);
  if (!fits_ulong(v)) throw std::length_error("advice value exceeds ulong");
  return to_ulong(v);
}

mpq_class pow2_neg_q(unsigned long k) {
  return mpq_class(mpz_class(1), pow2(k));
}

unsigned long ceil_div_ui(const Nat& num, const Nat& den) {
  Nat q;
  mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (!fits_ulong(q)) throw std::length_error("advice search exceeds ulong");
  return to_ulong(q);
}

}  // namespace

Germ::Germ(Name raw) : raw_(std::move(raw)), advice_(advice_at_zero(raw_)) {}

Name Germ::coeffs() const { return name_tail(raw_); }

Name Germ::coeff(unsigned long k) const {
  return project_family(coeffs(), Nat(k));
}

IntervalC Germ::coeff_enclosure(unsigned long k, unsigned long prec) const {
  return complex_enclosure(coeff(k), prec);
}

Analytic::Analytic(Name raw)
    : raw_(std::move(raw)), advice_(advice_at_zero(raw_)) {}

Name Analytic::cfun() const { return name_tail(raw_); }

Germ germ_pack(unsigned long advice, const Name& coeffs) {
  return Germ(name_cons(Nat(advice), coeffs));
}

Analytic analytic_pack(unsigned long advice, const Name& cfun) {
  return Analytic(name_cons(Nat(advice), cfun));
}

Name cseq_exact(std::function<RationalComplex(unsigned long)> coeff) {
  return tuple_family([coeff = std::move(coeff)](const Nat& k) {
    return complex_name(coeff(to_ulong(k)));
  });
}

Name cseq_finite(std::vector<RationalComplex> coeffs) {
  auto data = std::make_shared<std::vector<RationalComplex>>(std::move(coeffs));
  return tuple_family([data](const Nat& k) {
    unsigned long i = to_ulong(k);
    return complex_name(i < data->size() ? (*data)[i] : RationalComplex());
  });
}

Name cseq_from_enclosures(std::function<IntervalC(unsigned long, long)> f) {
  return tuple_family([f = std::move(f)](const Nat& kN) {
    unsigned long k = to_ulong(kN);
    return complex_name_from_enclosures(
        [f, k](long prec) { return f(k, prec); });
  });
}

bool within_germ_bound(const mpq_class& abs_sq, unsigned long advice,
                       unsigned long k) {
  if (advice == 0) return abs_sq <= 0;
  // |a|^2 <= n^2 2^{-2k/(n+1)}  <=>  (|a|^2)^{n+1} 2^{2k} <= n^{2(n+1)}
  Nat lhs, rhs, nn;
  mpz_pow_ui(lhs.get_mpz_t(), abs_sq.get_num().get_mpz_t(), advice + 1);
  lhs <<= 2 * k;
  mpz_ui_pow_ui(nn.get_mpz_t(), advice, 2 * (advice + 1));
  mpz_pow_ui(rhs.get_mpz_t(), abs_sq.get_den().get_mpz_t(), advice + 1);
  rhs *= nn;
  return lhs <= rhs;
}

unsigned long germ_advice_for(const std::vector<RationalComplex>& coeffs) {
  for (unsigned long n = 1;; ++n) {
    bool ok = true;
    for (unsigned long k = 0; k < coeffs.size() && ok; ++k) {
      ok = within_germ_bound(rc_abs_sq(coeffs[k]), n, k);
    }
    if (ok) return n;
  }
}

Germ germ_exact(std::vector<RationalComplex> coeffs, unsigned long advice) {
  for (unsigned long k = 0; k < coeffs.size(); ++k) {
    if (!within_germ_bound(rc_abs_sq(coeffs[k]), advice, k)) {
      throw std::domain_error("germ coefficient " + std::to_string(k) +
                              " exceeds the bound for advice " +
                              std::to_string(advice));
    }
  }
  return germ_pack(advice, cseq_finite(std::move(coeffs)));
}

bool germ_consistent(const Germ& g, unsigned long kmax, unsigned long prec) {
  unsigned long n = g.advice();
  for (unsigned long k = 0; k < kmax; ++k) {
    IntervalC enc = g.coeff_enclosure(k, prec);
    mpq_class lo = ic_abs_lower(enc, static_cast<long>(prec) + 4).to_mpq();
    if (lo > 0 && !within_germ_bound(lo * lo, n, k)) return false;
  }
  return true;
}

unsigned long sum_advice(unsigned long n) {
  // Smallest m >= 2n+1 with 2n(n+1)(m+1) <= m(m-n); the left side dominates
  // n / (1 - r_m 2^{-1/(n+1)}) via the chord bound 2^{-u} <= 1 - u/2 on [0,1].
  Nat nn(n);
  Nat c = 2 * nn * (nn + 1);
  auto holds = [&](const Nat& m) { return c * (m + 1) <= m * (m - nn); };
  // Quadratic root as a starting point, then settle the exact threshold.
  Nat b = nn + c, disc = b * b + 4 * c, root;
  mpz_sqrt(root.get_mpz_t(), disc.get_mpz_t());
  Nat m = (b + root) / 2;
  if (m < 2 * nn + 1) m = 2 * nn + 1;
  while (!holds(m)) m += 1;
  while (m > 2 * nn + 1 && holds(m - 1)) m -= 1;
  if (!fits_ulong(m)) throw std::length_error("sum advice exceeds ulong");
  return to_ulong(m);
}

Analytic sum_germ(const Germ& g) {
  unsigned long n = g.advice();
  Name cont = cfun_name_z([g, n](unsigned long s) -> ZPoly {
    if (n == 0) return ZPoly{};
    // Tail cutoff: with K = (n+1)t the advice bound gives a tail below
    // n 2^{-t} * 2(n+1) <= 2^{-s-1}; coefficient reads at 2^-j keep the
    // aggregate read error below 2^{-s-2}.
    Nat nn(n);
    unsigned long t = s + 2 + bitlen(nn * (nn + 1));
    Nat kcount = (nn + 1) * t;
    if (!fits_ulong(kcount)) {
      throw std::length_error("series truncation index exceeds desk scale");
    }
    unsigned long K = to_ulong(kcount);
    unsigned long j = s + 2 + bitlen(Nat(K + 1));
    ZPoly p(K + 1);
    for (unsigned long k = 0; k <= K; ++k) {
      RationalComplex q = complex_approx(g.coeff(k), j);
      // Reject only on proof: |a_k| >= |q| - 2^-j, and (|q| - 2^-j)^2 is
      // under-approximated without the square root via |q| <= |re| + |im|.
      mpq_class up = abs(q.re) + abs(q.im);
      mpq_class xlo = rc_abs_sq(q) - 2 * pow2_neg_q(j) * up;
      if (xlo > 0 && !within_germ_bound(xlo, n, k)) {
        throw std::domain_error(
            "germ bound violated at coefficient " + std::to_string(k) +
            " (advice " + std::to_string(n) + ")");
      }
      p[k] = q;
    }
    zpoly_trim(p);
    return p;
  });
  return analytic_pack(sum_advice(n), cont);
}

Name germ_of(const Name& cont) {
  return tuple_family([cont](const Nat& kN) {
    long k = static_cast<long>(to_ulong(kN));
    return Name([cont, k](const Nat& jN) {
      unsigned long j = to_ulong(jN);
      return rc_index(diskpoly_fourier(cfun_code(cont, j + 1), k));
    });
  });
}

unsigned long diff_advice(unsigned long m) {
  if (m == 0) return 1;
  if (m <= 64) {
    for (long prec = 60; prec <= 960; prec *= 2) {
      IntervalR d = ir_sub(pow2_frac(1, m + 1, prec), pow2_frac(1, m + 2, prec));
      if (d.lo.sgn() <= 0) continue;
      mpq_class up = mpq_class(m) / d.lo.to_mpq();
      unsigned long c = ceil_div_ui(up.get_num(), up.get_den());
      return std::max(m + 1, c);
    }
    throw std::logic_error("gap enclosure failed to separate");
  }
  // r_m - r_{m+1} >= 1/(2(m+1)(m+2)) by the chord bound, so this ceiling
  // dominates m/(r_m - r_{m+1}).
  Nat mm(m);
  Nat cand = 2 * mm * (mm + 1) * (mm + 2);
  if (!fits_ulong(cand)) throw std::length_error("advice exceeds ulong");
  return std::max(m + 1, to_ulong(cand));
}

Analytic diff_analytic(const Analytic& f) {
  unsigned long m = f.advice();
  unsigned long mp = diff_advice(m);
  Name a = germ_of(f.cfun());
  // b_k = (k+1) a_{k+1}; reading a_{k+1} a few positions deeper absorbs the
  // factor k+1 in the error budget.
  Name b = tuple_family([a](const Nat& kN) {
    unsigned long k = to_ulong(kN);
    Name ak1 = project_family(a, Nat(k + 1));
    unsigned long extra = bitlen(Nat(k + 1));
    return Name([ak1, k, extra](const Nat& jN) {
      RationalComplex q = rc_enum(ak1.at(jN + extra));
      return rc_index(rc_scale(q, mpq_class(k + 1)));
    });
  });
  return analytic_pack(mp, sum_germ(germ_pack(mp, b)).cfun());
}

IntervalC eval_analytic(const Analytic& f, const Name& z, unsigned long n) {
  return cont_eval(f.cfun(), z, n);
}

IntervalC eval_analytic(const Analytic& f, const RationalComplex& z,
                        unsigned long n) {
  return cont_eval(f.cfun(), z, n);
}

namespace {

// x_c enclosure 1 + 2^{(c+1)/(2N+1)}; the margin above 2 shrinks like 2^-c,
// so the working precision scales with c.
IntervalR gadget_center(unsigned long c, unsigned long twoN, long prec) {
  return ir_add(IntervalR::point(Dyadic(1)),
                pow2_frac(static_cast<long>(c) + 1, twoN + 1, prec));
}

unsigned long gadget_germ_advice(unsigned long c, unsigned long twoN) {
  long prec = std::max(80l, static_cast<long>(c) + 16);
  IntervalR xc = gadget_center(c, twoN, prec);
  // Precise search first: x_c >= 2^{1+1/(m+1)} makes the scaled coefficient
  // profile b_k = a_k 2^{k/(m+1)} peak at b_0 <= 1/2.
  for (unsigned long m = 1; m <= 64; ++m) {
    if (dy_cmp(xc.lo, pow2_frac(static_cast<long>(m) + 2, m + 1, 80).hi) >= 0) {
      return m;
    }
  }
  // Chord fallback: x_c >= 2 + 2/(m+1) implies the same, since
  // 2^{1/(m+1)} <= 1 + 1/(m+1).
  while (dy_cmp(xc.lo, Dyadic(2)) <= 0) {
    prec *= 2;
    xc = gadget_center(c, twoN, prec);
  }
  mpq_class delta = xc.lo.to_mpq() - 2;
  mpq_class need = 2 / delta;  // m+1 >= need, and need > 7 here
  unsigned long m1 = ceil_div_ui(need.get_num(), need.get_den());
  return std::max(1ul, m1 - 1);
}

unsigned long gadget_fn_advice(unsigned long c, unsigned long twoN) {
  if (twoN <= 4096) {
    for (unsigned long m = 1; m <= 64; ++m) {
      IntervalR d =
          ir_sub(gadget_center(c, twoN, 80), pow2_frac(1, m + 1, 80));
      if (d.hi.sgn() <= 0) continue;
      if (d.lo.sgn() <= 0) continue;
      IntervalR pw = ir_pow_ui(ir_round(d, 48), twoN);
      IntervalR t = ir_scale(pw, Dyadic(static_cast<long>(m)));
      if (dy_cmp(t.lo, Dyadic(1)) >= 0) return m;
    }
  }
  // Integer fallback: (c+1)(m+1) >= 2N+1 puts r_m at or below x_c - 1, and
  // then |f_c| <= (x_c - r_m)^{-2N} <= 1 <= m on the closure of U_m.
  unsigned long m1 = ceil_div_ui(Nat(twoN + 1), Nat(c + 1));
  return std::max(1ul, m1 - 1);
}

std::mutex gadget_mu;
std::map<unsigned long, Germ>& gadget_germ_cache() {
  static std::map<unsigned long, Germ> cache;
  return cache;
}
std::map<unsigned long, Analytic>& gadget_fn_cache() {
  static std::map<unsigned long, Analytic> cache;
  return cache;
}

}  // namespace

Germ gadget_germ(unsigned long c) {
  {
    std::lock_guard<std::mutex> lock(gadget_mu);
    auto it = gadget_germ_cache().find(c);
    if (it != gadget_germ_cache().end()) return it->second;
  }
  if (c > 60) throw std::length_error("pole gadget index exceeds desk scale");
  unsigned long twoN = 1ul << (c + 1);
  unsigned long advice = gadget_germ_advice(c, twoN);
  // a_k = C(2N-1+k, k) x_c^{-(2N+k)}, all real and positive.
  auto coeff = [c, twoN](unsigned long k, long prec) -> IntervalC {
    Nat binom;
    mpz_bin_uiui(binom.get_mpz_t(), twoN - 1 + k, k);
    long wp = prec + static_cast<long>(bitlen(binom)) +
              static_cast<long>(bitlen(Nat(twoN + k))) + 12;
    for (;; wp *= 2) {
      IntervalR xc = gadget_center(c, twoN, wp);
      IntervalR pw = ir_pow_ui(xc, twoN + k);
      IntervalR r = ir_scale(ir_recip(pw, wp), Dyadic(binom, 0));
      r = ir_round(r, wp);
      if (dy_cmp(r.width(), dy_pow2(-prec)) <= 0) {
        return {r, IntervalR::point(Dyadic(0))};
      }
    }
  };
  Germ g = germ_pack(advice, cseq_from_enclosures(coeff));
  std::lock_guard<std::mutex> lock(gadget_mu);
  auto [it, inserted] = gadget_germ_cache().emplace(c, g);
  return it->second;
}

Analytic gadget_fn(unsigned long c) {
  {
    std::lock_guard<std::mutex> lock(gadget_mu);
    auto it = gadget_fn_cache().find(c);
    if (it != gadget_fn_cache().end()) return it->second;
  }
  if (c > 60) throw std::length_error("pole gadget index exceeds desk scale");
  unsigned long twoN = 1ul << (c + 1);
  unsigned long advice = gadget_fn_advice(c, twoN);
  Analytic f = analytic_pack(advice, sum_germ(gadget_germ(c)).cfun());
  std::lock_guard<std::mutex> lock(gadget_mu);
  auto [it, inserted] = gadget_fn_cache().emplace(c, f);
  return it->second;
}

Name gadget_sum_cfun(const Name& sel) {
  return cfun_name_z([sel](unsigned long s) -> ZPoly {
    // Members beyond s+1 are uniformly below 2^{-s-2} in total, so the stage
    // depends on finitely many selector values.
    ZPoly acc;
    for (unsigned long j = 0; j <= s + 1; ++j) {
      if (sel.at(j) == 0) continue;
      DiskPoly dp = cfun_code(gadget_fn(j).cfun(), s + 2 + j);
      if (const ZPoly* z = dp.holo()) {
        acc = zpoly_add(acc, *z);
      } else if (auto z2 = poly2_as_zpoly(diskpoly_expand(dp))) {
        acc = zpoly_add(acc, *z2);
      } else {
        throw std::logic_error("pole approximant is not holomorphic");
      }
    }
    return acc;
  });
}

}  // namespace wlab
