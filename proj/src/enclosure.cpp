#include "droplet/enclosure.hpp"

namespace droplet {

using certified::Interval;

Enclosure to_enclosure(const Interval& iv) {
  return Enclosure{iv.lo_double(), iv.hi_double()};
}

Interval to_interval(const Enclosure& e, mpfr_prec_t prec) {
  return Interval::bounds(e.lo, e.hi, prec);
}

namespace {
constexpr mpfr_prec_t kEnclosurePrec = 128;
}

Enclosure operator+(const Enclosure& a, const Enclosure& b) {
  return to_enclosure(to_interval(a, kEnclosurePrec) + to_interval(b, kEnclosurePrec));
}

Enclosure operator-(const Enclosure& a, const Enclosure& b) {
  return to_enclosure(to_interval(a, kEnclosurePrec) - to_interval(b, kEnclosurePrec));
}

Enclosure operator*(const Enclosure& a, const Enclosure& b) {
  return to_enclosure(to_interval(a, kEnclosurePrec) * to_interval(b, kEnclosurePrec));
}

Enclosure operator/(const Enclosure& a, const Enclosure& b) {
  return to_enclosure(to_interval(a, kEnclosurePrec) / to_interval(b, kEnclosurePrec));
}

Enclosure exp(const Enclosure& a) { return to_enclosure(exp(to_interval(a, kEnclosurePrec))); }
Enclosure log(const Enclosure& a) { return to_enclosure(log(to_interval(a, kEnclosurePrec))); }
Enclosure sqrt(const Enclosure& a) { return to_enclosure(sqrt(to_interval(a, kEnclosurePrec))); }
Enclosure asin(const Enclosure& a) { return to_enclosure(asin(to_interval(a, kEnclosurePrec))); }
Enclosure acos(const Enclosure& a) { return to_enclosure(acos(to_interval(a, kEnclosurePrec))); }
Enclosure atanh(const Enclosure& a) { return to_enclosure(atanh(to_interval(a, kEnclosurePrec))); }

}  // namespace droplet
