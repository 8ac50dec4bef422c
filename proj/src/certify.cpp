#include "droplet/certify.hpp"

#include <chrono>
#include <cmath>
#include <numeric>

#include <json.hpp>

#include "droplet/ball.hpp"
#include "droplet/cylinder.hpp"
#include "droplet/specfun.hpp"

namespace droplet::certify {

using certified::Interval;
using nlohmann::json;

const char* verdict_name(Verdict v) {
  return v == Verdict::Certified ? "Certified" : "Inconclusive";
}

namespace {

json enclosure_json(const Enclosure& e) { return json{{"lo", e.lo}, {"hi", e.hi}}; }

Enclosure enclosure_from_json(const json& j) {
  return Enclosure{j.at("lo").get<double>(), j.at("hi").get<double>()};
}

Verdict settle(CertificationReport& rep) {
  const bool separated = rep.upper_bound_cyl.hi < rep.lower_bound_ball.lo;
  const bool tight = rep.lower_bound_ball.width() <= rep.width_tolerance &&
                     rep.upper_bound_cyl.width() <= rep.width_tolerance;
  rep.verdict = (separated && tight) ? Verdict::Certified : Verdict::Inconclusive;
  return rep.verdict;
}

struct Stopwatch {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
};

}  // namespace

std::string CertificationReport::to_json() const {
  json j;
  j["kernel"] = kernel;
  j["params"] = params;
  j["lower"] = enclosure_json(lower_bound_ball);
  j["upper"] = enclosure_json(upper_bound_cyl);
  if (bracket) j["bracket"] = {bracket->first, bracket->second};
  if (sign_check) j["sign_check"] = *sign_check;
  j["verdict"] = verdict_name(verdict);
  j["precision_bits"] = precision_bits;
  j["wall_time_s"] = wall_time_s;
  j["width_tolerance"] = width_tolerance;
  json inter = json::array();
  for (const auto& [name, enc] : intermediates)
    inter.push_back({{"name", name}, {"lo", enc.lo}, {"hi", enc.hi}});
  j["intermediates"] = inter;
  return j.dump(2);
}

CertificationReport CertificationReport::from_json(const std::string& text) {
  const json j = json::parse(text);
  CertificationReport rep;
  rep.kernel = j.at("kernel").get<std::string>();
  rep.params = j.at("params").get<std::map<std::string, std::string>>();
  rep.lower_bound_ball = enclosure_from_json(j.at("lower"));
  rep.upper_bound_cyl = enclosure_from_json(j.at("upper"));
  if (j.contains("bracket"))
    rep.bracket = std::make_pair(j["bracket"][0].get<double>(), j["bracket"][1].get<double>());
  if (j.contains("sign_check")) rep.sign_check = j["sign_check"].get<bool>();
  rep.verdict = j.at("verdict").get<std::string>() == "Certified" ? Verdict::Certified
                                                                  : Verdict::Inconclusive;
  rep.precision_bits = j.at("precision_bits").get<unsigned>();
  rep.wall_time_s = j.at("wall_time_s").get<double>();
  rep.width_tolerance = j.at("width_tolerance").get<double>();
  for (const auto& item : j.at("intermediates"))
    rep.intermediates.emplace_back(
        item.at("name").get<std::string>(),
        Enclosure{item.at("lo").get<double>(), item.at("hi").get<double>()});
  return rep;
}

CertificationReport certify_trunc_coulomb(const Rational& kappa, unsigned precision_bits,
                                          double width_tolerance) {
  if (kappa.num <= 0) throw std::domain_error("kappa must be positive");
  if (precision_bits < 24) throw std::domain_error("precision must be at least 24 bits");
  Stopwatch clock;
  const mpfr_prec_t prec = precision_bits;

  CertificationReport rep;
  rep.kernel = "trunc:alpha=1,kappa=" + kappa.str() + ",n=3";
  rep.params["kappa"] = kappa.str();
  rep.precision_bits = precision_bits;
  rep.width_tolerance = width_tolerance;

  const Interval k = Interval::rational(kappa.num, kappa.den, prec);
  const Interval pi = Interval::pi(prec);
  const Interval k3 = pow_int(k, 3);

  // Regime check kappa_min < kappa < kappa_max, i.e. 3 < pi kappa^3 < 15/2,
  // proven in interval arithmetic on the exact rational kappa.
  const Interval pik3 = pi * k3;
  const bool above_min = Interval::integer(3, prec).strictly_less_than(pik3);
  const bool below_max = pik3.strictly_less_than(Interval::rational(15, 2, prec));
  if (!(above_min && below_max))
    throw std::domain_error("kappa is not provably inside (kappa_min, kappa_max)");

  // sigma_cyl(kappa/2) = 4/kappa + 4 kappa^2 (pi/2 - 17/12 + C/2)
  const double catalan_width = std::min(1e-10, width_tolerance / 16.0);
  const Interval cat = specfun::catalan_interval(catalan_width, prec);
  const Interval paren =
      mul_2si(pi, -1) - Interval::rational(17, 12, prec) + mul_2si(cat, -1);
  const Interval sigma = Interval::integer(4, prec) / k + mul_ui(sqr(k) * paren, 4);

  // rho_ball = f(lambda*),  lambda* = sqrt(5/pi (pi/3 - 1/kappa^3)),
  // f(x) = 6x/kappa + 6 pi kappa^2 (x^3/15 - x/3 + 1/3).
  const Interval lam = sqrt(div_ui(mul_ui(pi, 5), 3) - Interval::integer(5, prec) / k3) /
                       sqrt(pi);
  const Interval fpart = div_ui(pow_int(lam, 3), 15) - div_ui(lam, 3) +
                         Interval::rational(1, 3, prec);
  const Interval rho = mul_ui(lam, 6) / k + mul_ui(pi * sqr(k) * fpart, 6);

  rep.lower_bound_ball = to_enclosure(rho);
  rep.upper_bound_cyl = to_enclosure(sigma);
  rep.intermediates.emplace_back("catalan", to_enclosure(cat));
  rep.intermediates.emplace_back("pi", to_enclosure(pi));
  rep.intermediates.emplace_back("lambda_star", to_enclosure(lam));
  rep.intermediates.emplace_back("sigma_cyl_at_half_kappa", to_enclosure(sigma));
  rep.intermediates.emplace_back("rho_ball", to_enclosure(rho));
  settle(rep);
  rep.wall_time_s = clock.seconds();
  return rep;
}

CertificationReport certify_yukawa(const Rational& kappa, const Rational& l, long N,
                                   const Rational& bracket_lo, const Rational& bracket_hi,
                                   unsigned precision_bits, double width_tolerance) {
  if (kappa.num <= 0 || l.num <= 0) throw std::domain_error("kappa and l must be positive");
  if (bracket_lo.num <= 0 || bracket_hi.num <= 0 ||
      bracket_lo.value() >= bracket_hi.value())
    throw std::domain_error("bracket endpoints must satisfy 0 < a < b");
  if (N < 2) throw std::domain_error("N must be at least 2");
  if (precision_bits < 24) throw std::domain_error("precision must be at least 24 bits");
  Stopwatch clock;
  const mpfr_prec_t prec = precision_bits;

  CertificationReport rep;
  rep.kernel = "yukawa:alpha=1,kappa=" + kappa.str() + ",n=3";
  rep.params["kappa"] = kappa.str();
  rep.params["l"] = l.str();
  rep.params["N"] = std::to_string(N);
  rep.params["bracket_lo"] = bracket_lo.str();
  rep.params["bracket_hi"] = bracket_hi.str();
  rep.precision_bits = precision_bits;
  rep.width_tolerance = width_tolerance;

  const Interval kI = Interval::rational(kappa.num, kappa.den, prec);
  const Interval a = Interval::rational(bracket_lo.num, bracket_lo.den, prec);
  const Interval b = Interval::rational(bracket_hi.num, bracket_hi.den, prec);

  // Provable sign change of f' across the bracket; convexity of f then puts
  // the minimizer inside (a, b) and validates the tangent-line bound.
  const Interval fpa = ball::yukawa_f_prime_interval(kI, a);
  const Interval fpb = ball::yukawa_f_prime_interval(kI, b);
  if (fpa.contains_zero() || fpb.contains_zero())
    throw std::runtime_error("sign of f' at bracket endpoints is not provable");
  const bool opposite = fpa.is_negative() && fpb.is_positive();
  rep.sign_check = opposite;
  rep.bracket = std::make_pair(bracket_lo.value(), bracket_hi.value());
  if (!opposite)
    throw std::runtime_error("bracket does not contain the minimizer: f' does not change sign");

  // Tangent lines at the bracket endpoints: f convex lies above them, so
  // rho_ball = min f >= min(T_a(b), T_b(a)).
  const Interval fa = ball::yukawa_f_interval(kI, a);
  const Interval fb = ball::yukawa_f_interval(kI, b);
  const Interval t_ab = fa + fpa * (b - a);
  const Interval t_ba = fb + fpb * (a - b);
  const Interval lower = min(t_ab, t_ba);

  auto upper = cylinder::sigma_cyl_yukawa_upper_certified(kappa, l, N, precision_bits);

  rep.lower_bound_ball = to_enclosure(lower);
  rep.upper_bound_cyl = *upper.sigma_enclosure;
  rep.intermediates.emplace_back("f_at_a", to_enclosure(fa));
  rep.intermediates.emplace_back("f_at_b", to_enclosure(fb));
  rep.intermediates.emplace_back("fprime_at_a", to_enclosure(fpa));
  rep.intermediates.emplace_back("fprime_at_b", to_enclosure(fpb));
  rep.intermediates.emplace_back("tangent_a_at_b", to_enclosure(t_ab));
  rep.intermediates.emplace_back("tangent_b_at_a", to_enclosure(t_ba));
  rep.intermediates.emplace_back("riemann_upper_sigma", *upper.sigma_enclosure);
  settle(rep);
  rep.wall_time_s = clock.seconds();
  return rep;
}

RieszRatioResult riesz_ratio(int n, int alpha) {
  if (n < 3) throw std::domain_error("riesz_ratio requires n >= 3");
  if (!(alpha > 1 && alpha < n)) throw std::domain_error("riesz_ratio requires integer alpha in (1, n)");
  const int beta = n + 1 - alpha;
  const int p = beta - 1;

  // tau^beta = ((n-1)/n)^(p+1) (n+p)(n+p-2)...(n-p) / ((n-1+p)(n-1+p-2)...(n-1-p)),
  // accumulated in 128-bit integers with running reduction.
  __int128 num = 1, den = 1;
  auto reduce = [&]() {
    __int128 a = num < 0 ? -num : num, b = den;
    while (b) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      num /= a;
      den /= a;
    }
  };
  for (int i = 0; i <= p; ++i) {
    num *= (n - 1);
    den *= n;
    reduce();
  }
  for (int j = n + p; j >= n - p; j -= 2) {
    num *= j;
    reduce();
  }
  for (int j = n - 1 + p; j >= n - 1 - p; j -= 2) {
    den *= j;
    reduce();
  }
  reduce();
  if (num > INT64_MAX || den > INT64_MAX)
    throw std::overflow_error("riesz_ratio rational base exceeds 64 bits");

  RieszRatioResult res;
  res.base_num = static_cast<long long>(num);
  res.base_den = static_cast<long long>(den);
  res.beta = beta;
  res.tau = std::pow(static_cast<double>(res.base_num) / res.base_den, 1.0 / beta);
  return res;
}

}  // namespace droplet::certify
