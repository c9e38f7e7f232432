#include "wlab/enumerations.hpp"

#include <algorithm>
#include <stdexcept>

#include "wlab/supbb.hpp"

namespace wlab {

Nat rat_index(const mpq_class& q) {
  mpq_class c(q);
  c.canonicalize();
  return pair(zigzag(c.get_num()), Nat(c.get_den() - 1));
}

mpq_class rat_enum(const Nat& n) {
  auto [a, b] = unpair(n);
  mpq_class q(unzigzag(a), b + 1);
  q.canonicalize();
  return q;
}

bool rat_is_canonical(const Nat& n) { return rat_index(rat_enum(n)) == n; }

Nat rc_index(const RationalComplex& v) {
  Nat re_part = pair(zigzag(v.re.get_num()), Nat(v.re.get_den() - 1));
  return pair(pair(re_part, zigzag(v.im.get_num())), Nat(v.im.get_den() - 1));
}

RationalComplex rc_enum(const Nat& n) {
  auto [a, im_den] = unpair(n);
  auto [re_part, im_num] = unpair(a);
  auto [re_num, re_den] = unpair(re_part);
  mpq_class re(unzigzag(re_num), re_den + 1);
  re.canonicalize();
  mpq_class im(unzigzag(im_num), im_den + 1);
  im.canonicalize();
  return {re, im};
}

bool rc_is_canonical(const Nat& n) { return rc_index(rc_enum(n)) == n; }

unsigned long RationalPoly2::total_degree() const {
  unsigned long d = 0;
  for (const auto& [k, c] : terms) d = std::max(d, k.first + k.second);
  return d;
}

RationalComplex RationalPoly2::coeff(unsigned long a, unsigned long b) const {
  auto it = terms.find({a, b});
  return it == terms.end() ? RationalComplex() : it->second;
}

void RationalPoly2::set(unsigned long a, unsigned long b,
                        const RationalComplex& c) {
  if (c.is_zero())
    terms.erase({a, b});
  else
    terms[{a, b}] = c;
}

RationalPoly2 poly2_add(const RationalPoly2& p, const RationalPoly2& q) {
  RationalPoly2 r = p;
  for (const auto& [k, c] : q.terms) r.set(k.first, k.second, rc_add(r.coeff(k.first, k.second), c));
  return r;
}

RationalPoly2 poly2_sub(const RationalPoly2& p, const RationalPoly2& q) {
  return poly2_add(p, poly2_neg(q));
}

RationalPoly2 poly2_neg(const RationalPoly2& p) {
  RationalPoly2 r;
  for (const auto& [k, c] : p.terms) r.terms[k] = rc_neg(c);
  return r;
}

RationalPoly2 poly2_scale(const RationalPoly2& p, const RationalComplex& c) {
  RationalPoly2 r;
  if (c.is_zero()) return r;
  for (const auto& [k, v] : p.terms) r.set(k.first, k.second, rc_mul(v, c));
  return r;
}

RationalPoly2 poly2_mul(const RationalPoly2& p, const RationalPoly2& q) {
  RationalPoly2 r;
  for (const auto& [kp, cp] : p.terms)
    for (const auto& [kq, cq] : q.terms) {
      unsigned long a = kp.first + kq.first, b = kp.second + kq.second;
      r.set(a, b, rc_add(r.coeff(a, b), rc_mul(cp, cq)));
    }
  return r;
}

RationalComplex poly2_eval(const RationalPoly2& p, const RationalComplex& x,
                           const RationalComplex& y) {
  unsigned long da = 0, db = 0;
  for (const auto& [k, c] : p.terms) {
    da = std::max(da, k.first);
    db = std::max(db, k.second);
  }
  std::vector<RationalComplex> xs(da + 1), ys(db + 1);
  xs[0] = RationalComplex(1);
  for (unsigned long i = 1; i <= da; ++i) xs[i] = rc_mul(xs[i - 1], x);
  ys[0] = RationalComplex(1);
  for (unsigned long i = 1; i <= db; ++i) ys[i] = rc_mul(ys[i - 1], y);
  RationalComplex acc;
  for (const auto& [k, c] : p.terms)
    acc = rc_add(acc, rc_mul(c, rc_mul(xs[k.first], ys[k.second])));
  return acc;
}

IntervalC poly2_eval_box(const RationalPoly2& p, const IntervalR& x,
                         const IntervalR& y, long prec) {
  long wp = prec + 8;
  if (p.is_zero()) return IntervalC();
  unsigned long da = 0, db = 0;
  for (const auto& [k, c] : p.terms) {
    da = std::max(da, k.first);
    db = std::max(db, k.second);
  }
  IntervalC acc;
  for (unsigned long ai = 0; ai <= da; ++ai) {
    unsigned long a = da - ai;
    IntervalC row;
    for (unsigned long bi = 0; bi <= db; ++bi) {
      unsigned long b = db - bi;
      row = ic_scale_real(row, y);
      RationalComplex c = p.coeff(a, b);
      if (!c.is_zero()) row = ic_add(row, ic_from_rc(c, wp));
      row = ic_round(row, wp);
    }
    acc = ic_add(ic_scale_real(acc, x), row);
    acc = ic_round(acc, wp);
  }
  return acc;
}

std::string poly2_to_string(const RationalPoly2& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (const auto& [k, c] : p.terms) {
    if (!s.empty()) s += " + ";
    s += "(" + rc_to_string(c) + ")";
    if (k.first) s += " x^" + std::to_string(k.first);
    if (k.second) s += " y^" + std::to_string(k.second);
  }
  return s;
}

// The dense graded-lex position of x^a y^b is exactly pair(a, b): within
// total degree d the block starts at d(d+1)/2 and b indexes the offset.
Nat poly2_index(const RationalPoly2& p) {
  if (p.is_zero()) return Nat(0);
  unsigned long d = p.total_degree();
  std::size_t count = static_cast<std::size_t>(d + 1) * (d + 2) / 2;
  std::vector<Nat> codes(count);
  for (std::size_t pos = 0; pos < count; ++pos) {
    auto [a, b] = unpair(Nat(pos));
    codes[pos] = rc_index(p.coeff(to_ulong(a), to_ulong(b)));
  }
  return pair(Nat(d), list_encode(codes));
}

RationalPoly2 poly2_enum(const Nat& n) {
  RationalPoly2 p;
  if (n == 0) return p;
  auto [dn, rest] = unpair(n);
  std::vector<Nat> codes = list_decode(rest);
  for (std::size_t pos = 0; pos < codes.size(); ++pos) {
    auto [a, b] = unpair(Nat(pos));
    if (Nat(a + b) > dn) continue;
    p.set(to_ulong(a), to_ulong(b), rc_enum(codes[pos]));
  }
  return p;
}

bool poly2_is_canonical(const Nat& n) {
  try {
    return poly2_index(poly2_enum(n)) == n;
  } catch (const std::length_error&) {
    return false;
  }
}

void zpoly_trim(ZPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

ZPoly zpoly_add(const ZPoly& p, const ZPoly& q) {
  ZPoly r(std::max(p.size(), q.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    RationalComplex a = i < p.size() ? p[i] : RationalComplex();
    RationalComplex b = i < q.size() ? q[i] : RationalComplex();
    r[i] = rc_add(a, b);
  }
  zpoly_trim(r);
  return r;
}

ZPoly zpoly_sub(const ZPoly& p, const ZPoly& q) {
  ZPoly nq(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) nq[i] = rc_neg(q[i]);
  return zpoly_add(p, nq);
}

ZPoly zpoly_scale(const ZPoly& p, const RationalComplex& c) {
  if (c.is_zero()) return {};
  ZPoly r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = rc_mul(p[i], c);
  zpoly_trim(r);
  return r;
}

ZPoly zpoly_mul(const ZPoly& p, const ZPoly& q) {
  if (p.empty() || q.empty()) return {};
  ZPoly r(p.size() + q.size() - 1);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j)
      r[i + j] = rc_add(r[i + j], rc_mul(p[i], q[j]));
  zpoly_trim(r);
  return r;
}

ZPoly zpoly_derivative(const ZPoly& p) {
  if (p.size() <= 1) return {};
  ZPoly r(p.size() - 1);
  for (std::size_t j = 0; j + 1 < p.size(); ++j)
    r[j] = rc_scale(p[j + 1], mpq_class(j + 1));
  zpoly_trim(r);
  return r;
}

RationalComplex zpoly_eval(const ZPoly& p, const RationalComplex& z) {
  RationalComplex acc;
  for (std::size_t i = p.size(); i-- > 0;) acc = rc_add(rc_mul(acc, z), p[i]);
  return acc;
}

IntervalC zpoly_eval_box(const ZPoly& p, const IntervalC& z, long prec) {
  long wp = prec + 8;
  IntervalC acc;
  for (std::size_t i = p.size(); i-- > 0;) {
    acc = ic_mul(acc, z);
    if (!p[i].is_zero()) acc = ic_add(acc, ic_from_rc(p[i], wp));
    acc = ic_round(acc, wp);
  }
  return acc;
}

RationalPoly2 zpoly_expand(const ZPoly& p) {
  RationalPoly2 acc;
  RationalPoly2 zpow;
  zpow.set(0, 0, RationalComplex(1));
  RationalPoly2 z;
  z.set(1, 0, RationalComplex(1));
  z.set(0, 1, RationalComplex(mpq_class(0), mpq_class(1)));
  for (std::size_t j = 0; j < p.size(); ++j) {
    acc = poly2_add(acc, poly2_scale(zpow, p[j]));
    if (j + 1 < p.size()) zpow = poly2_mul(zpow, z);
  }
  return acc;
}

std::optional<ZPoly> poly2_as_zpoly(const RationalPoly2& p) {
  unsigned long d = p.total_degree();
  ZPoly cand(d + 1);
  for (unsigned long j = 0; j <= d; ++j) cand[j] = p.coeff(j, 0);
  zpoly_trim(cand);
  if (zpoly_expand(cand) == p) return cand;
  return std::nullopt;
}

std::map<long, RationalComplex> laurent_on_circle(const RationalPoly2& p) {
  std::map<long, RationalComplex> out;
  for (const auto& [ab, c] : p.terms) {
    unsigned long a = ab.first, b = ab.second;
    // x^a y^b = 2^-a (z + 1/z)^a * (2i)^-b (z - 1/z)^b on |z| = 1.
    RationalComplex f = rc_mul_ipow(c, 3 * static_cast<long>(b % 4));
    f = rc_scale(f, mpq_class(mpz_class(1), pow2(a + b)));
    for (unsigned long i = 0; i <= a; ++i)
      for (unsigned long j = 0; j <= b; ++j) {
        long e = 2 * static_cast<long>(i + j) - static_cast<long>(a + b);
        mpz_class ba, bb;
        mpz_bin_uiui(ba.get_mpz_t(), a, i);
        mpz_bin_uiui(bb.get_mpz_t(), b, j);
        mpq_class w(ba * bb);
        if ((b - j) % 2 == 1) w = -w;
        auto& slot = out[e];
        slot = rc_add(slot, rc_scale(f, w));
      }
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

RationalComplex fourier_coeff(const RationalPoly2& p, long k) {
  auto m = laurent_on_circle(p);
  auto it = m.find(k);
  return it == m.end() ? RationalComplex() : it->second;
}

namespace {

// Rational chart of the unit circle: z(t) = sigma (1 - t^2 + 2ti)/(1 + t^2),
// t in [-1, 1]; sigma = +-1 covers the two half circles. A polynomial
// restricted to the chart is numerator(t) / (1 + t^2)^D.
ZPoly chart_numerator(const RationalPoly2& p, int sigma) {
  unsigned long d = p.total_degree();
  ZPoly pa = {RationalComplex(1), RationalComplex(0), RationalComplex(-1)};
  ZPoly pb = {RationalComplex(0), RationalComplex(2)};
  ZPoly pc = {RationalComplex(1), RationalComplex(0), RationalComplex(1)};
  std::vector<ZPoly> powa(d + 1), powb(d + 1), powc(d + 1);
  powa[0] = powb[0] = powc[0] = {RationalComplex(1)};
  for (unsigned long i = 1; i <= d; ++i) {
    powa[i] = zpoly_mul(powa[i - 1], pa);
    powb[i] = zpoly_mul(powb[i - 1], pb);
    powc[i] = zpoly_mul(powc[i - 1], pc);
  }
  ZPoly num;
  for (const auto& [ab, c] : p.terms) {
    unsigned long a = ab.first, b = ab.second;
    RationalComplex cc = (sigma < 0 && (a + b) % 2 == 1) ? rc_neg(c) : c;
    ZPoly term = zpoly_mul(zpoly_mul(powa[a], powb[b]), powc[d - a - b]);
    num = zpoly_add(num, zpoly_scale(term, cc));
  }
  return num;
}

ZPoly chart_numerator_z(const ZPoly& q, int sigma) {
  if (q.empty()) return {};
  unsigned long d = q.size() - 1;
  ZPoly u = {RationalComplex(1), RationalComplex(mpq_class(0), mpq_class(2)),
             RationalComplex(-1)};
  ZPoly v = {RationalComplex(1), RationalComplex(0), RationalComplex(1)};
  std::vector<ZPoly> powu(d + 1), powv(d + 1);
  powu[0] = powv[0] = {RationalComplex(1)};
  for (unsigned long i = 1; i <= d; ++i) {
    powu[i] = zpoly_mul(powu[i - 1], u);
    powv[i] = zpoly_mul(powv[i - 1], v);
  }
  ZPoly num;
  for (unsigned long j = 0; j < q.size(); ++j) {
    if (q[j].is_zero()) continue;
    RationalComplex cc = (sigma < 0 && j % 2 == 1) ? rc_neg(q[j]) : q[j];
    num = zpoly_add(num, zpoly_scale(zpoly_mul(powu[j], powv[d - j]), cc));
  }
  return num;
}

IntervalR chart_sup(const ZPoly& num, unsigned long d, long prec) {
  BoxFn1 g = [num, d](const IntervalR& t, long wp) {
    IntervalC nb = zpoly_eval_box(num, {t, IntervalR()}, wp);
    IntervalR absn{ic_abs_lower(nb, wp), ic_abs_upper(nb, wp)};
    IntervalR den =
        ir_pow_ui(ir_add(IntervalR::point(Dyadic(1)), ir_pow_ui(t, 2)), d);
    return ir_div(absn, den, wp);
  };
  return sup1d(g, {Dyadic(-1), Dyadic(1)}, prec);
}

IntervalR sup_max(const IntervalR& a, const IntervalR& b) {
  return {dy_max(a.lo, b.lo), dy_max(a.hi, b.hi)};
}

}  // namespace

IntervalR circle_sup(const RationalPoly2& p, long prec) {
  if (p.is_zero()) return IntervalR();
  unsigned long d = p.total_degree();
  IntervalR s1 = chart_sup(chart_numerator(p, +1), d, prec + 1);
  IntervalR s2 = chart_sup(chart_numerator(p, -1), d, prec + 1);
  return sup_max(s1, s2);
}

IntervalR circle_sup(const ZPoly& p, long prec) {
  if (p.empty()) return IntervalR();
  unsigned long d = p.size() - 1;
  IntervalR s1 = chart_sup(chart_numerator_z(p, +1), d, prec + 1);
  IntervalR s2 = chart_sup(chart_numerator_z(p, -1), d, prec + 1);
  return sup_max(s1, s2);
}

IntervalR disk_sup(const RationalPoly2& p, long prec) {
  if (p.is_zero()) return IntervalR();
  if (auto z = poly2_as_zpoly(p)) return circle_sup(*z, prec);
  Box2 dom{{Dyadic(-1), Dyadic(1)}, {Dyadic(-1), Dyadic(1)}};
  BoxFn2 g = [p](const Box2& b, long wp) {
    IntervalC v = poly2_eval_box(p, b.x, b.y, wp);
    return IntervalR{ic_abs_lower(v, wp), ic_abs_upper(v, wp)};
  };
  OverlapFn overlaps = [](const Box2& b) {
    mpq_class mx = ir_abs_lower(b.x).to_mpq(), my = ir_abs_lower(b.y).to_mpq();
    return mx * mx + my * my <= 1;
  };
  InsideFn inside = [](const mpq_class& x, const mpq_class& y) {
    return x * x + y * y <= 1;
  };
  return sup2d(g, dom, prec, overlaps, inside);
}

Nat zpoly_index(const ZPoly& p) {
  std::vector<Nat> codes;
  codes.reserve(p.size());
  for (const auto& c : p) codes.push_back(rc_index(c));
  return list_encode(codes);
}

ZPoly zpoly_enum(const Nat& n) {
  ZPoly p;
  for (const auto& code : list_decode(n)) p.push_back(rc_enum(code));
  zpoly_trim(p);
  return p;
}

bool zpoly_is_canonical(const Nat& n) {
  try {
    return zpoly_index(zpoly_enum(n)) == n;
  } catch (const std::length_error&) {
    return false;
  }
}

Nat diskpoly_index(const DiskPoly& p) {
  if (const ZPoly* z = p.holo()) return pair(nat(1), zpoly_index(*z));
  return pair(nat(0), poly2_index(*p.xy()));
}

DiskPoly diskpoly_enum(const Nat& n) {
  auto [tag, payload] = unpair(n);
  if (tag % 2 == 1) return DiskPoly(zpoly_enum(payload));
  return DiskPoly(poly2_enum(payload));
}

RationalPoly2 diskpoly_expand(const DiskPoly& p) {
  if (const ZPoly* z = p.holo()) return zpoly_expand(*z);
  return *p.xy();
}

RationalComplex diskpoly_eval(const DiskPoly& p, const RationalComplex& z) {
  if (const ZPoly* zp = p.holo()) return zpoly_eval(*zp, z);
  return poly2_eval(*p.xy(), RationalComplex(z.re, mpq_class(0)),
                    RationalComplex(z.im, mpq_class(0)));
}

IntervalC diskpoly_eval_box(const DiskPoly& p, const IntervalR& x,
                            const IntervalR& y, long prec) {
  if (const ZPoly* zp = p.holo()) return zpoly_eval_box(*zp, {x, y}, prec);
  return poly2_eval_box(*p.xy(), x, y, prec);
}

RationalComplex diskpoly_fourier(const DiskPoly& p, long k) {
  if (const ZPoly* zp = p.holo()) {
    if (k < 0 || static_cast<unsigned long>(k) >= zp->size()) {
      return RationalComplex();
    }
    return (*zp)[static_cast<unsigned long>(k)];
  }
  return fourier_coeff(*p.xy(), k);
}

IntervalR diskpoly_sup(const DiskPoly& p, long prec) {
  if (const ZPoly* zp = p.holo()) return circle_sup(*zp, prec);
  return disk_sup(*p.xy(), prec);
}

namespace {

mpq_class rc_abs1(const RationalComplex& c) {
  return abs(c.re) + abs(c.im);
}

}  // namespace

mpq_class diskpoly_abs_sum(const DiskPoly& p) {
  mpq_class s;
  if (const ZPoly* zp = p.holo()) {
    for (const auto& c : *zp) s += rc_abs1(c);
  } else {
    for (const auto& [ab, c] : p.xy()->terms) s += rc_abs1(c);
  }
  return s;
}

mpq_class diskpoly_grad_sum(const DiskPoly& p) {
  mpq_class s;
  if (const ZPoly* zp = p.holo()) {
    for (unsigned long k = 0; k < zp->size(); ++k) s += k * rc_abs1((*zp)[k]);
  } else {
    for (const auto& [ab, c] : p.xy()->terms)
      s += (ab.first + ab.second) * rc_abs1(c);
  }
  return s;
}

unsigned long diskpoly_degree(const DiskPoly& p) {
  if (const ZPoly* zp = p.holo()) return zp->empty() ? 0 : zp->size() - 1;
  unsigned long d = 0;
  for (const auto& [ab, c] : p.xy()->terms) d = std::max(d, ab.first + ab.second);
  return d;
}

}  // namespace wlab
