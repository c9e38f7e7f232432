#include "wlab/polynomials.hpp"

#include <algorithm>
#include <stdexcept>

#include "wlab/enumerations.hpp"
#include "wlab/pairing.hpp"

namespace wlab {

unsigned long Poly::bound() const { return to_ulong(raw_.at(0ul)); }

Name Poly::coeff(unsigned long k) const {
  unsigned long width = bound() + 1;
  if (k >= width) throw std::out_of_range("Poly::coeff: index above bound");
  return project_vec(name_tail(raw_), k, width);
}

IntervalC Poly::coeff_enclosure(unsigned long k, unsigned long n) const {
  return complex_enclosure(coeff(k), n);
}

Poly poly_pack(unsigned long bound, const std::vector<Name>& coeffs) {
  if (coeffs.size() != bound + 1) {
    throw std::invalid_argument("poly_pack: need bound+1 coefficient names");
  }
  return Poly(name_cons(nat(bound), tuple_vec(coeffs)));
}

Poly poly_wrap(const Name& raw) { return Poly(raw); }

Poly poly_exact(unsigned long bound,
                const std::vector<RationalComplex>& cs) {
  std::vector<Name> names;
  names.reserve(cs.size());
  for (const RationalComplex& c : cs) names.push_back(complex_name(c));
  return poly_pack(bound, names);
}

unsigned long Tuple::length() const { return to_ulong(raw_.at(0ul)); }

Name Tuple::entry(unsigned long k) const {
  unsigned long len = length();
  if (k >= len) throw std::out_of_range("Tuple::entry: index above length");
  return project_vec(name_tail(raw_), k, len);
}

IntervalC Tuple::entry_enclosure(unsigned long k, unsigned long n) const {
  return complex_enclosure(entry(k), n);
}

Tuple tuple_pack(const std::vector<Name>& entries) {
  Name tail = entries.empty() ? name_const(nat(0)) : tuple_vec(entries);
  return Tuple(name_cons(nat(entries.size()), tail));
}

Tuple tuple_wrap(const Name& raw) { return Tuple(raw); }

Tuple tuple_exact(const std::vector<RationalComplex>& vs) {
  std::vector<Name> names;
  names.reserve(vs.size());
  for (const RationalComplex& v : vs) names.push_back(complex_name(v));
  return tuple_pack(names);
}

unsigned long dbnd(const Poly& p) { return p.bound(); }

unsigned long deg_monic(const Poly& p) {
  // A zero coefficient read at precision 3 stays below modulus
  // sqrt(2)/8 + rounding < 1/2; the leading 1 always reaches above 1/2. So
  // the first trigger from the top is the degree.
  const Dyadic half = dy_pow2(-1);
  for (unsigned long k = p.bound() + 1; k-- > 0;) {
    if (dy_cmp(ic_abs_upper(p.coeff_enclosure(k, 3), 8), half) > 0) return k;
  }
  throw std::domain_error("deg_monic: no coefficient reaches 1/2; not monic");
}

RootCertification zeros_monic_certified(const Poly& p, long n, bool parallel) {
  MonicInput in;
  in.degree = static_cast<unsigned>(deg_monic(p));
  in.coeff = [p](unsigned k, long prec) {
    return p.coeff_enclosure(k, prec < 1 ? 1ul : static_cast<unsigned long>(prec));
  };
  return isolate_roots(in, n, parallel);
}

Tuple zeros_monic(const Poly& p, long n) {
  return tuple_exact(zeros_monic_certified(p, n).roots);
}

Poly monic_of(const Poly& p, unsigned long d) {
  if (d > p.bound()) {
    throw std::invalid_argument("monic_of: claimed degree above bound");
  }
  std::vector<Name> names;
  names.reserve(d + 1);
  for (unsigned long k = 0; k < d; ++k) {
    names.push_back(complex_name_from_enclosures([p, k, d](long j) {
      // Tighten until the divisor excludes zero and the quotient is sharp;
      // diverges when the claimed leading coefficient is really zero.
      for (long jj = std::max<long>(j + 4, 8);; jj += 16) {
        IntervalC den = p.coeff_enclosure(d, static_cast<unsigned long>(jj));
        if (den.contains_zero()) continue;
        IntervalC num = p.coeff_enclosure(k, static_cast<unsigned long>(jj));
        IntervalC q = ic_div(num, den, jj);
        if (dy_cmp(q.width(), dy_pow2(-j - 1)) < 0) return q;
      }
    }));
  }
  names.push_back(complex_name(RationalComplex(1)));
  return poly_pack(d, names);
}

Name deg_min_stream(const Poly& p) {
  return Name([p](const Nat& pos) {
    unsigned long j = to_ulong(pos);
    unsigned long b = p.bound();
    for (unsigned long k = b + 1; k-- > 0;) {
      if (!p.coeff_enclosure(k, std::max<unsigned long>(j, 1)).contains_zero()) {
        return nat(b - k);
      }
    }
    return nat(b);
  });
}

unsigned long deg_via_min(const Poly& p, unsigned long fuel) {
  Name h = deg_min_stream(p);
  unsigned long best = to_ulong(h.at(0ul));
  for (unsigned long j = 1; j < std::max<unsigned long>(fuel, 1); ++j) {
    best = std::min(best, to_ulong(h.at(j)));
  }
  return p.bound() - best;
}

Poly min_to_poly(const Name& p) {
  unsigned long b = to_ulong(p.at(0ul));
  std::vector<Name> names;
  names.reserve(b + 1);
  for (unsigned long m = 0; m <= b; ++m) {
    names.push_back(complex_name_from_enclosures([p, m](long j) -> IntervalC {
      // First i with p(0) - p(i) = m is the minimal one; its hit pins the
      // coefficient exactly. No hit up to j+1 bounds it by 2^-(j+2).
      Nat head = p.at(0ul);
      for (long i = 0; i <= j + 1; ++i) {
        Nat v = p.at(static_cast<unsigned long>(i));
        if (v <= head && head - v == m) {
          mpq_class exact(mpz_class(1), pow2(static_cast<unsigned long>(i)));
          return ic_from_rc(RationalComplex(exact, mpq_class(0)), j + 4);
        }
      }
      return {IntervalR(Dyadic(), dy_pow2(-j - 2)), IntervalR::point(Dyadic())};
    }));
  }
  return poly_pack(b, names);
}

unsigned long min_via_deg(const Name& p, unsigned long deg_of_built) {
  unsigned long head = to_ulong(p.at(0ul));
  if (deg_of_built > head) {
    throw std::invalid_argument("min_via_deg: degree exceeds stream head");
  }
  return head - deg_of_built;
}

Tuple zeros_general(const Poly& p, long n, unsigned long fuel) {
  return zeros_monic(monic_of(p, deg_via_min(p, fuel)), n);
}

namespace {

// All d+1 coefficients of prod (X - y_k) as enclosures of width < 2^-j.
std::vector<IntervalC> zero_product(const Tuple& roots, long j) {
  unsigned long d = roots.length();
  for (long jj = std::max<long>(j + 8, 8);; jj += 16) {
    std::vector<IntervalC> c{IntervalC::point(Dyadic(1), Dyadic(0))};
    for (unsigned long i = 0; i < d; ++i) {
      IntervalC y = roots.entry_enclosure(i, static_cast<unsigned long>(jj));
      std::vector<IntervalC> next(c.size() + 1);
      for (size_t t = 0; t < c.size() + 1; ++t) {
        IntervalC v;
        if (t < c.size()) v = ic_neg(ic_mul(y, c[t]));
        if (t > 0) v = ic_add(v, c[t - 1]);
        next[t] = ic_round(v, jj + 16);
      }
      c = std::move(next);
    }
    Dyadic worst;
    for (const IntervalC& v : c) worst = dy_max(worst, v.width());
    if (dy_cmp(worst, dy_pow2(-j)) < 0) return c;
  }
}

}  // namespace

Poly monic_via_zeros(const Tuple& roots) {
  unsigned long d = roots.length();
  std::vector<Name> names;
  names.reserve(d + 1);
  for (unsigned long k = 0; k < d; ++k) {
    names.push_back(complex_name_from_enclosures(
        [roots, k](long j) { return zero_product(roots, j)[k]; }));
  }
  names.push_back(complex_name(RationalComplex(1)));
  return poly_pack(d, names);
}

Analytic enum_to_analytic(const Name& p) {
  // Stage s sums the first s+2 terms 2^-(t+v) X^v; the left-over tail is
  // below 2^-(s+1) on the closed disk since each term is at most 2^-t
  // there. On |z| <= 2 every term stays below 2^-t as well, which keeps the
  // sum within the advice-2 growth budget.
  Name cf = cfun_name_z([p](unsigned long s) {
    std::vector<RationalComplex> acc;
    for (unsigned long t = 0; t <= s + 1; ++t) {
      unsigned long v = to_ulong(p.at(t));
      if (acc.size() < v + 1) acc.resize(v + 1);
      mpq_class term(mpz_class(1), pow2(t + v));
      acc[v] = rc_add(acc[v], RationalComplex(term, mpq_class(0)));
    }
    zpoly_trim(acc);
    return acc;
  });
  return analytic_pack(2, cf);
}

Name analytic_degree_stream(const Analytic& f) {
  // The germ inherits the analytic advice: |a_k| <= m r_m^-k is exactly the
  // germ growth bound for advice m.
  Germ g = germ_pack(f.advice(), germ_of(f.cfun()));
  return Name([g](const Nat& pos) {
    auto [m, j] = unpair(pos);
    unsigned long mj = std::max<unsigned long>(to_ulong(j), 1);
    IntervalC e = g.coeff_enclosure(to_ulong(m), mj);
    Dyadic low = ic_abs_lower(e, static_cast<long>(mj) + 8);
    if (dy_cmp(low, dy_pow2(-static_cast<long>(mj))) > 0) {
      return nat(to_ulong(m) + 1);
    }
    return nat(0);
  });
}

unsigned long deg_analytic_via_max(const Analytic& f, unsigned long fuel) {
  Name h = analytic_degree_stream(f);
  unsigned long best = 0;
  for (unsigned long t = 0; t < fuel; ++t) {
    unsigned long v = to_ulong(h.at(t));
    if (v > 0) best = std::max(best, v - 1);
  }
  return best;
}

}  // namespace wlab
