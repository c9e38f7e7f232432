#include "wlab/spaces.hpp"

#include <set>

namespace wlab {

Name nat_name(const Nat& v) { return name_const(v); }

Nat nat_value(const Name& p) { return p.at(0ul); }

Name enum_name(std::vector<Nat> elems) {
  for (Nat& e : elems) e += 1;
  return name_from_prefix(std::move(elems), Nat(0));
}

Name enum_name_fn(std::function<Nat(const Nat&)> f) { return Name(std::move(f)); }

std::vector<Nat> enum_prefix(const Name& p, unsigned long count) {
  std::vector<Nat> out;
  std::set<Nat> seen;
  for (unsigned long i = 0; i < count; ++i) {
    Nat v = p.at(i);
    if (v == 0) continue;
    Nat e = v - 1;
    if (seen.insert(e).second) out.push_back(e);
  }
  return out;
}

Name real_name(const mpq_class& x) { return name_const(rat_index(x)); }

Name real_name_fn(std::function<mpq_class(unsigned long)> approx) {
  return Name([approx = std::move(approx)](const Nat& n) {
    return rat_index(approx(to_ulong(n)));
  });
}

Name real_name_from_enclosures(std::function<IntervalR(long)> f) {
  return Name([f = std::move(f)](const Nat& n) {
    long prec = static_cast<long>(to_ulong(n)) + 2;
    IntervalR e = f(prec);
    return rat_index(e.mid().to_mpq());
  });
}

mpq_class real_approx(const Name& p, unsigned long n) {
  return rat_enum(p.at(n));
}

IntervalR real_enclosure(const Name& p, unsigned long n) {
  mpq_class q = real_approx(p, n + 2);
  Dyadic r = dy_pow2(-static_cast<long>(n) - 2);
  IntervalR c = ir_from_mpq(q, static_cast<long>(n) + 8);
  return {dy_sub(c.lo, r), dy_add(c.hi, r)};
}

Name complex_name(const RationalComplex& z) { return name_const(rc_index(z)); }

Name complex_name_fn(std::function<RationalComplex(unsigned long)> approx) {
  return Name([approx = std::move(approx)](const Nat& n) {
    return rc_index(approx(to_ulong(n)));
  });
}

Name complex_name_from_enclosures(std::function<IntervalC(long)> f) {
  return Name([f = std::move(f)](const Nat& n) {
    long prec = static_cast<long>(to_ulong(n)) + 2;
    IntervalC e = f(prec);
    return rc_index(rc_from_dyadic(e.re.mid(), e.im.mid()));
  });
}

RationalComplex complex_approx(const Name& p, unsigned long n) {
  return rc_enum(p.at(n));
}

IntervalC complex_enclosure(const Name& p, unsigned long n) {
  RationalComplex z = complex_approx(p, n + 2);
  Dyadic r = dy_pow2(-static_cast<long>(n) - 2);
  IntervalC c = ic_from_rc(z, static_cast<long>(n) + 8);
  return {{dy_sub(c.re.lo, r), dy_add(c.re.hi, r)},
          {dy_sub(c.im.lo, r), dy_add(c.im.hi, r)}};
}

Name cfun_name(std::function<RationalPoly2(unsigned long)> approx) {
  return Name([approx = std::move(approx)](const Nat& n) {
    return diskpoly_index(DiskPoly(approx(to_ulong(n))));
  });
}

Name cfun_name_z(std::function<ZPoly(unsigned long)> approx) {
  return Name([approx = std::move(approx)](const Nat& n) {
    return diskpoly_index(DiskPoly(approx(to_ulong(n))));
  });
}

Name cfun_name_const_poly(const RationalPoly2& poly) {
  return name_const(diskpoly_index(DiskPoly(poly)));
}

DiskPoly cfun_code(const Name& p, unsigned long n) {
  return diskpoly_enum(p.at(n));
}

RationalPoly2 cfun_poly(const Name& p, unsigned long n) {
  return diskpoly_expand(cfun_code(p, n));
}

IntervalC cfun_eval(const Name& p, const IntervalR& x, const IntervalR& y,
                    unsigned long n, long prec) {
  DiskPoly poly = cfun_code(p, n);
  IntervalC v = diskpoly_eval_box(poly, x, y, prec);
  Dyadic r = dy_pow2(-static_cast<long>(n));
  return {{dy_sub(v.re.lo, r), dy_add(v.re.hi, r)},
          {dy_sub(v.im.lo, r), dy_add(v.im.hi, r)}};
}

namespace {

IntervalC pad_rc(const RationalComplex& v, const mpq_class& e, long prec) {
  IntervalR re = ir_from_mpq_pair(v.re - e, v.re + e, prec);
  IntervalR im = ir_from_mpq_pair(v.im - e, v.im + e, prec);
  return {re, im};
}

}  // namespace

IntervalC cont_eval(const Name& f, const Name& z, unsigned long n) {
  DiskPoly poly = cfun_code(f, n + 2);
  // Hop from z to its rational stand-in costs at most 4 * grad_sum * 2^-j
  // (the factor covers both coordinates and the slight excursion outside
  // the closed disk); pick j so that cost stays below 2^-n-5.
  mpq_class m1 = diskpoly_grad_sum(poly);
  mpz_class m1c = m1.get_num() / m1.get_den() + 1;
  unsigned long deg = diskpoly_degree(poly);
  unsigned long j = n + 7 + bitlen(m1c) + bitlen(Nat(deg + 1));
  RationalComplex q = complex_approx(z, j);
  RationalComplex v = diskpoly_eval(poly, q);
  mpq_class e = mpq_class(mpz_class(1), pow2(n + 2)) +
                4 * m1 * mpq_class(mpz_class(1), pow2(j));
  return pad_rc(v, e, static_cast<long>(n) + 8);
}

IntervalC cont_eval(const Name& f, const RationalComplex& z, unsigned long n) {
  DiskPoly poly = cfun_code(f, n + 2);
  RationalComplex v = diskpoly_eval(poly, z);
  mpq_class e(mpz_class(1), pow2(n + 2));
  return pad_rc(v, e, static_cast<long>(n) + 8);
}

}  // namespace wlab
