#pragma once

#include <mpfr.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace droplet::certified {

/// Directed-rounding interval with MPFR endpoints.
///
/// Every operation returns an interval that contains the exact mathematical
/// result for any choice of real operands inside the input intervals.  The
/// working precision (significand bits) is carried per value; binary
/// operations compute at the larger of the two operand precisions.
///
/// Functions with restricted domains (sqrt, log, asin, acos, atanh) intersect
/// the operand with the closure of the domain before evaluating.  This is
/// sound whenever the exact operand lies in the domain, which is an invariant
/// of every call site in this library; an operand entirely outside the domain
/// throws std::domain_error.
class Interval {
 public:
  explicit Interval(mpfr_prec_t prec = 128);
  Interval(const Interval& o);
  Interval(Interval&& o) noexcept;
  Interval& operator=(const Interval& o);
  Interval& operator=(Interval&& o) noexcept;
  ~Interval();

  /// Exact point interval (doubles are dyadic rationals).
  static Interval point(double x, mpfr_prec_t prec);
  /// [lo, hi] from doubles, endpoints exact.
  static Interval bounds(double lo, double hi, mpfr_prec_t prec);
  /// Tightest representable interval around num/den.
  static Interval rational(long long num, long long den, mpfr_prec_t prec);
  static Interval integer(long long n, mpfr_prec_t prec);
  static Interval pi(mpfr_prec_t prec);
  static Interval euler_gamma(mpfr_prec_t prec);
  static Interval log2(mpfr_prec_t prec);

  mpfr_prec_t precision() const { return prec_; }

  double lo_double() const;  ///< lower endpoint rounded toward -inf
  double hi_double() const;  ///< upper endpoint rounded toward +inf
  double mid() const;
  double width_upper() const;  ///< upper bound on hi - lo

  bool contains(double x) const;
  bool contains_zero() const;
  bool is_positive() const;  ///< provably > 0
  bool is_negative() const;  ///< provably < 0
  /// hi < o.lo, i.e. every member of *this is below every member of o.
  bool strictly_less_than(const Interval& o) const;
  /// true iff o is contained in *this (endpoint-wise).
  bool encloses(const Interval& o) const;

  mpfr_srcptr lo() const { return lo_; }
  mpfr_srcptr hi() const { return hi_; }
  mpfr_ptr lo_mut() { return lo_; }
  mpfr_ptr hi_mut() { return hi_; }

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator/(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a);
  Interval& operator+=(const Interval& o);

  friend Interval mul_ui(const Interval& a, unsigned long k);
  friend Interval div_ui(const Interval& a, unsigned long k);
  /// Exact halving/doubling by powers of two.
  friend Interval mul_2si(const Interval& a, long e);

  friend Interval sqr(const Interval& a);
  friend Interval sqrt(const Interval& a);   // clamps to [0, inf)
  friend Interval exp(const Interval& a);
  friend Interval log(const Interval& a);    // requires a.hi > 0; clamps lo
  friend Interval asin(const Interval& a);   // clamps to [-1, 1]
  friend Interval acos(const Interval& a);   // clamps to [-1, 1]
  friend Interval atanh(const Interval& a);  // clamps to (-1, 1)
  friend Interval sinh(const Interval& a);
  friend Interval cosh(const Interval& a);
  friend Interval abs(const Interval& a);
  friend Interval pow_int(const Interval& a, long k);  // k >= 0
  friend Interval rootn(const Interval& a, unsigned long k);  // a >= 0
  friend Interval min(const Interval& a, const Interval& b);
  friend Interval max(const Interval& a, const Interval& b);

  std::string str(int digits = 20) const;

 private:
  mpfr_t lo_, hi_;
  mpfr_prec_t prec_;
};

}  // namespace droplet::certified
