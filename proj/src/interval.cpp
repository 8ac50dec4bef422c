#include "droplet/interval.hpp"

#include <gmp.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

namespace droplet::certified {

namespace {

mpfr_prec_t join_prec(const Interval& a, const Interval& b) {
  return std::max(a.precision(), b.precision());
}

}  // namespace

Interval::Interval(mpfr_prec_t prec) : prec_(prec) {
  if (prec < MPFR_PREC_MIN) throw std::invalid_argument("interval precision too small");
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& o) : prec_(o.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& o) noexcept : prec_(o.prec_) {
  lo_[0] = o.lo_[0];
  hi_[0] = o.hi_[0];
  // leave the moved-from object valid for mpfr_clear
  mpfr_init2(o.lo_, MPFR_PREC_MIN);
  mpfr_init2(o.hi_, MPFR_PREC_MIN);
}

Interval& Interval::operator=(const Interval& o) {
  if (this == &o) return *this;
  if (prec_ != o.prec_) {
    mpfr_set_prec(lo_, o.prec_);
    mpfr_set_prec(hi_, o.prec_);
    prec_ = o.prec_;
  }
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
  return *this;
}

Interval& Interval::operator=(Interval&& o) noexcept {
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
  std::swap(prec_, o.prec_);
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval Interval::point(double x, mpfr_prec_t prec) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite point interval");
  Interval r(prec);
  mpfr_set_d(r.lo_, x, MPFR_RNDD);
  mpfr_set_d(r.hi_, x, MPFR_RNDU);
  return r;
}

Interval Interval::bounds(double lo, double hi, mpfr_prec_t prec) {
  if (!(lo <= hi)) throw std::invalid_argument("interval bounds out of order");
  Interval r(prec);
  mpfr_set_d(r.lo_, lo, MPFR_RNDD);
  mpfr_set_d(r.hi_, hi, MPFR_RNDU);
  return r;
}

Interval Interval::rational(long long num, long long den, mpfr_prec_t prec) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Interval r(prec);
  mpq_t q;
  mpq_init(q);
  mpq_set_si(q, static_cast<long>(num), static_cast<unsigned long>(den));
  mpq_canonicalize(q);
  mpfr_set_q(r.lo_, q, MPFR_RNDD);
  mpfr_set_q(r.hi_, q, MPFR_RNDU);
  mpq_clear(q);
  return r;
}

Interval Interval::integer(long long n, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_sj(r.lo_, n, MPFR_RNDD);
  mpfr_set_sj(r.hi_, n, MPFR_RNDU);
  return r;
}

Interval Interval::pi(mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_const_pi(r.lo_, MPFR_RNDD);
  mpfr_const_pi(r.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::euler_gamma(mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_const_euler(r.lo_, MPFR_RNDD);
  mpfr_const_euler(r.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::log2(mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_const_log2(r.lo_, MPFR_RNDD);
  mpfr_const_log2(r.hi_, MPFR_RNDU);
  return r;
}

double Interval::lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Interval::hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double Interval::mid() const {
  mpfr_t m;
  mpfr_init2(m, prec_);
  mpfr_add(m, lo_, hi_, MPFR_RNDN);
  mpfr_div_2si(m, m, 1, MPFR_RNDN);
  double v = mpfr_get_d(m, MPFR_RNDN);
  mpfr_clear(m);
  return v;
}

double Interval::width_upper() const {
  mpfr_t w;
  mpfr_init2(w, prec_);
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  double v = mpfr_get_d(w, MPFR_RNDU);
  mpfr_clear(w);
  return v;
}

bool Interval::contains(double x) const {
  return mpfr_cmp_d(lo_, x) <= 0 && mpfr_cmp_d(hi_, x) >= 0;
}

bool Interval::contains_zero() const {
  return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

bool Interval::is_positive() const { return mpfr_sgn(lo_) > 0; }
bool Interval::is_negative() const { return mpfr_sgn(hi_) < 0; }

bool Interval::strictly_less_than(const Interval& o) const {
  return mpfr_cmp(hi_, o.lo_) < 0;
}

bool Interval::encloses(const Interval& o) const {
  return mpfr_cmp(lo_, o.lo_) <= 0 && mpfr_cmp(hi_, o.hi_) >= 0;
}

std::string Interval::str(int digits) const {
  char* s = nullptr;
  std::string out = "[";
  mpfr_asprintf(&s, "%.*Rg", digits, lo_);
  out += s;
  mpfr_free_str(s);
  out += ", ";
  mpfr_asprintf(&s, "%.*Rg", digits, hi_);
  out += s;
  mpfr_free_str(s);
  out += "]";
  return out;
}

Interval operator+(const Interval& a, const Interval& b) {
  Interval r(join_prec(a, b));
  mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval& Interval::operator+=(const Interval& o) {
  mpfr_add(lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_add(hi_, hi_, o.hi_, MPFR_RNDU);
  return *this;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval r(join_prec(a, b));
  mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a) {
  Interval r(a.precision());
  mpfr_neg(r.lo_, a.hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
  return r;
}

Interval operator*(const Interval& a, const Interval& b) {
  Interval r(join_prec(a, b));
  // Fast path covering the common all-nonnegative case.
  if (mpfr_sgn(a.lo_) >= 0 && mpfr_sgn(b.lo_) >= 0) {
    mpfr_mul(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_mul(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
  }
  // General case: hull of the four endpoint products.
  mpfr_t t;
  mpfr_init2(t, r.precision());
  mpfr_mul(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_mul(t, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_mul(t, a.hi_, b.lo_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_mul(t, a.hi_, b.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);

  mpfr_mul(r.hi_, a.lo_, b.lo_, MPFR_RNDU);
  mpfr_mul(t, a.lo_, b.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_mul(t, a.hi_, b.lo_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_mul(t, a.hi_, b.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_clear(t);
  return r;
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw std::domain_error("interval division by interval containing zero");
  Interval r(join_prec(a, b));
  mpfr_t t;
  mpfr_init2(t, r.precision());
  mpfr_div(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_div(t, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_div(t, a.hi_, b.lo_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_div(t, a.hi_, b.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);

  mpfr_div(r.hi_, a.lo_, b.lo_, MPFR_RNDU);
  mpfr_div(t, a.lo_, b.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_div(t, a.hi_, b.lo_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_div(t, a.hi_, b.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_clear(t);
  return r;
}

Interval mul_ui(const Interval& a, unsigned long k) {
  Interval r(a.precision());
  mpfr_mul_ui(r.lo_, a.lo_, k, MPFR_RNDD);
  mpfr_mul_ui(r.hi_, a.hi_, k, MPFR_RNDU);
  return r;
}

Interval div_ui(const Interval& a, unsigned long k) {
  if (k == 0) throw std::domain_error("division by zero");
  Interval r(a.precision());
  mpfr_div_ui(r.lo_, a.lo_, k, MPFR_RNDD);
  mpfr_div_ui(r.hi_, a.hi_, k, MPFR_RNDU);
  return r;
}

Interval mul_2si(const Interval& a, long e) {
  Interval r(a.precision());
  mpfr_mul_2si(r.lo_, a.lo_, e, MPFR_RNDD);
  mpfr_mul_2si(r.hi_, a.hi_, e, MPFR_RNDU);
  return r;
}

Interval sqr(const Interval& a) {
  Interval r(a.precision());
  if (mpfr_sgn(a.lo_) >= 0) {
    mpfr_sqr(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_sqr(r.hi_, a.hi_, MPFR_RNDU);
  } else if (mpfr_sgn(a.hi_) <= 0) {
    mpfr_sqr(r.lo_, a.hi_, MPFR_RNDD);
    mpfr_sqr(r.hi_, a.lo_, MPFR_RNDU);
  } else {
    mpfr_set_zero(r.lo_, 1);
    mpfr_t t;
    mpfr_init2(t, r.precision());
    mpfr_sqr(r.hi_, a.hi_, MPFR_RNDU);
    mpfr_sqr(t, a.lo_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_clear(t);
  }
  return r;
}

namespace {

// Monotone increasing map applied endpoint-wise.
template <typename F>
Interval increasing(const Interval& a, F&& fn) {
  Interval r(a.precision());
  fn(r.lo_mut(), a.lo(), MPFR_RNDD);
  fn(r.hi_mut(), a.hi(), MPFR_RNDU);
  return r;
}

// Intersect operand with [dlo, dhi]; throws if disjoint.
Interval clamp_domain(const Interval& a, double dlo, double dhi, const char* what) {
  if (mpfr_cmp_d(a.hi(), dlo) < 0 || mpfr_cmp_d(a.lo(), dhi) > 0)
    throw std::domain_error(std::string("interval operand outside domain of ") + what);
  Interval r(a);
  if (mpfr_cmp_d(r.lo(), dlo) < 0) mpfr_set_d(r.lo_mut(), dlo, MPFR_RNDD);
  if (mpfr_cmp_d(r.hi(), dhi) > 0) mpfr_set_d(r.hi_mut(), dhi, MPFR_RNDU);
  return r;
}

}  // namespace

Interval sqrt(const Interval& a) {
  if (mpfr_sgn(a.hi()) < 0) throw std::domain_error("sqrt of negative interval");
  Interval c(a);
  if (mpfr_sgn(c.lo()) < 0) mpfr_set_zero(c.lo_mut(), 1);
  return increasing(c, [](mpfr_ptr o, mpfr_srcptr x, mpfr_rnd_t rnd) { mpfr_sqrt(o, x, rnd); });
}

Interval exp(const Interval& a) {
  return increasing(a, [](mpfr_ptr o, mpfr_srcptr x, mpfr_rnd_t rnd) { mpfr_exp(o, x, rnd); });
}

Interval log(const Interval& a) {
  if (mpfr_sgn(a.hi()) <= 0) throw std::domain_error("log of non-positive interval");
  if (mpfr_sgn(a.lo()) <= 0) throw std::domain_error("log of interval reaching zero");
  return increasing(a, [](mpfr_ptr o, mpfr_srcptr x, mpfr_rnd_t rnd) { mpfr_log(o, x, rnd); });
}

Interval asin(const Interval& a) {
  Interval c = clamp_domain(a, -1.0, 1.0, "asin");
  return increasing(c, [](mpfr_ptr o, mpfr_srcptr x, mpfr_rnd_t rnd) { mpfr_asin(o, x, rnd); });
}

Interval acos(const Interval& a) {
  Interval c = clamp_domain(a, -1.0, 1.0, "acos");
  Interval r(c.precision());
  mpfr_acos(r.lo_mut(), c.hi(), MPFR_RNDD);  // acos is decreasing
  mpfr_acos(r.hi_mut(), c.lo(), MPFR_RNDU);
  return r;
}

Interval atanh(const Interval& a) {
  if (mpfr_cmp_d(a.lo(), -1.0) <= 0 || mpfr_cmp_d(a.hi(), 1.0) >= 0)
    throw std::domain_error("atanh operand must lie inside (-1, 1)");
  return increasing(a, [](mpfr_ptr o, mpfr_srcptr x, mpfr_rnd_t rnd) { mpfr_atanh(o, x, rnd); });
}

Interval sinh(const Interval& a) {
  return increasing(a, [](mpfr_ptr o, mpfr_srcptr x, mpfr_rnd_t rnd) { mpfr_sinh(o, x, rnd); });
}

Interval cosh(const Interval& a) {
  Interval r(a.precision());
  if (mpfr_sgn(a.lo()) >= 0) {
    mpfr_cosh(r.lo_mut(), a.lo(), MPFR_RNDD);
    mpfr_cosh(r.hi_mut(), a.hi(), MPFR_RNDU);
  } else if (mpfr_sgn(a.hi()) <= 0) {
    mpfr_cosh(r.lo_mut(), a.hi(), MPFR_RNDD);
    mpfr_cosh(r.hi_mut(), a.lo(), MPFR_RNDU);
  } else {
    mpfr_set_ui(r.lo_mut(), 1, MPFR_RNDD);
    mpfr_t t;
    mpfr_init2(t, r.precision());
    mpfr_cosh(r.hi_mut(), a.hi(), MPFR_RNDU);
    mpfr_cosh(t, a.lo(), MPFR_RNDU);
    mpfr_max(r.hi_mut(), r.hi(), t, MPFR_RNDU);
    mpfr_clear(t);
  }
  return r;
}

Interval abs(const Interval& a) {
  Interval r(a.precision());
  if (mpfr_sgn(a.lo()) >= 0) return a;
  if (mpfr_sgn(a.hi()) <= 0) return -a;
  mpfr_set_zero(r.lo_mut(), 1);
  mpfr_t t;
  mpfr_init2(t, r.precision());
  mpfr_neg(t, a.lo(), MPFR_RNDU);
  mpfr_max(r.hi_mut(), a.hi(), t, MPFR_RNDU);
  mpfr_clear(t);
  return r;
}

Interval pow_int(const Interval& a, long k) {
  if (k < 0) throw std::invalid_argument("pow_int expects k >= 0");
  Interval r = Interval::integer(1, a.precision());
  Interval base(a);
  // exponentiation by squaring keeps the interval growth minimal
  unsigned long e = static_cast<unsigned long>(k);
  while (e > 0) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e > 0) base = sqr(base);
  }
  return r;
}

Interval rootn(const Interval& a, unsigned long k) {
  if (k == 0) throw std::invalid_argument("rootn expects k >= 1");
  if (mpfr_sgn(a.hi()) < 0) throw std::domain_error("rootn of negative interval");
  Interval c(a);
  if (mpfr_sgn(c.lo()) < 0) mpfr_set_zero(c.lo_mut(), 1);
  Interval r(c.precision());
  mpfr_rootn_ui(r.lo_mut(), c.lo(), k, MPFR_RNDD);
  mpfr_rootn_ui(r.hi_mut(), c.hi(), k, MPFR_RNDU);
  return r;
}

Interval min(const Interval& a, const Interval& b) {
  Interval r(join_prec(a, b));
  mpfr_min(r.lo_mut(), a.lo(), b.lo(), MPFR_RNDD);
  mpfr_min(r.hi_mut(), a.hi(), b.hi(), MPFR_RNDU);
  return r;
}

Interval max(const Interval& a, const Interval& b) {
  Interval r(join_prec(a, b));
  mpfr_max(r.lo_mut(), a.lo(), b.lo(), MPFR_RNDD);
  mpfr_max(r.hi_mut(), a.hi(), b.hi(), MPFR_RNDU);
  return r;
}

}  // namespace droplet::certified
