#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace droplet {

/// Exact rational parameter, as accepted on certification entry points.
/// Parses "p/q" as well as decimal strings ("0.56" -> 56/100), both exactly.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    reduce();
  }

  static Rational parse(const std::string& text);

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

  void reduce() {
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
};

}  // namespace droplet
