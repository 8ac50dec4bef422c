#include "droplet/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace droplet {

namespace {

long long parse_ll(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty number in rational");
  std::size_t pos = 0;
  const long long v = std::stoll(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("trailing characters in rational: " + s);
  return v;
}

}  // namespace

Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    return Rational(parse_ll(text.substr(0, slash)), parse_ll(text.substr(slash + 1)));
  }
  const auto dot = text.find('.');
  if (dot == std::string::npos) return Rational(parse_ll(text), 1);
  // decimal string, converted exactly: "0.56" -> 56/100
  const std::string ip = text.substr(0, dot);
  const std::string fp = text.substr(dot + 1);
  if (fp.size() > 18) throw std::invalid_argument("decimal rational with more than 18 fractional digits");
  for (char c : fp)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("bad decimal rational: " + text);
  long long den = 1;
  for (std::size_t i = 0; i < fp.size(); ++i) den *= 10;
  const bool negative = !ip.empty() && ip[0] == '-';
  long long whole = ip.empty() || ip == "-" ? 0 : parse_ll(ip);
  long long frac = fp.empty() ? 0 : parse_ll(fp);
  long long num = whole * den + (negative ? -frac : frac);
  return Rational(num, den);
}

}  // namespace droplet
