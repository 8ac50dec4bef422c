#pragma once

#include <stdexcept>

#include "droplet/interval.hpp"

namespace droplet {

/// A pair of doubles guaranteed to bracket a true mathematical value.
///
/// Arithmetic on enclosures is routed through the MPFR interval engine at 128
/// bits and rounded outward to double endpoints, so every operation returns
/// an enclosure containing the exact result for any members of the inputs.
struct Enclosure {
  double lo = 0.0;
  double hi = 0.0;

  double width() const { return hi - lo; }
  double mid() const { return 0.5 * (lo + hi); }
  bool contains(double x) const { return lo <= x && x <= hi; }
  bool contains(const Enclosure& o) const { return lo <= o.lo && o.hi <= hi; }
};

Enclosure to_enclosure(const certified::Interval& iv);
certified::Interval to_interval(const Enclosure& e, mpfr_prec_t prec = 128);

Enclosure operator+(const Enclosure& a, const Enclosure& b);
Enclosure operator-(const Enclosure& a, const Enclosure& b);
Enclosure operator*(const Enclosure& a, const Enclosure& b);
Enclosure operator/(const Enclosure& a, const Enclosure& b);
Enclosure exp(const Enclosure& a);
Enclosure log(const Enclosure& a);
Enclosure sqrt(const Enclosure& a);
Enclosure asin(const Enclosure& a);
Enclosure acos(const Enclosure& a);
Enclosure atanh(const Enclosure& a);

/// Evaluation-mode selector.  Fast mode returns best-effort doubles and never
/// an enclosure; Certified mode returns enclosures computed with at least 113
/// significand bits.
struct EvalMode {
  enum class Kind { Fast, Certified };
  Kind kind = Kind::Fast;
  unsigned precision_bits = 128;

  static EvalMode fast() { return EvalMode{Kind::Fast, 0}; }
  static EvalMode certified(unsigned bits = 128) {
    if (bits < 113) throw std::invalid_argument("certified mode requires >= 113 bits");
    return EvalMode{Kind::Certified, bits};
  }
  bool is_certified() const { return kind == Kind::Certified; }
};

}  // namespace droplet
