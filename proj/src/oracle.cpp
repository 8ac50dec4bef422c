#include "droplet/oracle.hpp"

#include <atomic>
#include <cmath>
#include <future>
#include <vector>

#include "droplet/cylinder.hpp"
#include "droplet/geometry.hpp"
#include "droplet/numerics.hpp"
#include "droplet/threads.hpp"

namespace droplet::oracle {

OracleEstimate ball_energy_by_slicing(const Kernel& k, double R, int n_quad) {
  if (!(R > 0.0)) throw std::domain_error("ball_energy_by_slicing requires R > 0");
  const int n = k.dim;
  auto integrand = [&](double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    return kernels::slice_energy(k, 2.0 * R * c) * std::pow(R * s, n - 2) * R * c;
  };
  const double value = 0.5 * unit_sphere_area(n - 1) * unit_sphere_area(n - 2) *
                       numerics::simpson(integrand, 0.0, M_PI / 2.0, n_quad);
  return {value, std::nullopt, n_quad};
}

namespace {

// splitmix64: tiny counter-style generator, reproducible everywhere.
struct SplitMix64 {
  std::uint64_t state;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

// Standard normal via Box-Muller on splitmix uniforms.
struct NormalGen {
  SplitMix64 rng;
  bool have_spare = false;
  double spare = 0.0;
  double operator()() {
    if (have_spare) {
      have_spare = false;
      return spare;
    }
    double u1 = rng.uniform();
    while (u1 <= 0.0) u1 = rng.uniform();
    const double u2 = rng.uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare = r * std::sin(2.0 * M_PI * u2);
    have_spare = true;
    return r * std::cos(2.0 * M_PI * u2);
  }
};

// Uniform point in B_R^n: Gaussian direction, radius R U^(1/n).
void sample_ball_point(NormalGen& g, int n, double R, std::vector<double>& out) {
  double norm2 = 0.0;
  for (int i = 0; i < n; ++i) {
    out[i] = g();
    norm2 += out[i] * out[i];
  }
  const double norm = std::sqrt(norm2);
  const double r = R * std::pow(g.rng.uniform(), 1.0 / n);
  for (int i = 0; i < n; ++i) out[i] *= r / norm;
}

struct ShardSums {
  double sum = 0.0;
  double sum_sq = 0.0;
};

}  // namespace

OracleEstimate ball_energy_monte_carlo(const Kernel& k, double R, long long samples,
                                       std::uint64_t seed) {
  if (!(R > 0.0)) throw std::domain_error("ball_energy_monte_carlo requires R > 0");
  if (samples < 10000) throw std::domain_error("ball_energy_monte_carlo requires >= 1e4 samples");
  const int n = k.dim;
  constexpr int kShards = 64;  // fixed layout keeps results thread-count independent

  // Shard seeds drawn sequentially from the master stream.
  SplitMix64 master{seed};
  std::vector<std::uint64_t> shard_seeds(kShards);
  for (auto& s : shard_seeds) s = master.next();

  auto run_shard = [&](int shard) {
    NormalGen gen{SplitMix64{shard_seeds[shard]}};
    const long long count = samples / kShards + (shard < samples % kShards ? 1 : 0);
    std::vector<double> x(n), y(n);
    ShardSums acc;
    for (long long i = 0; i < count; ++i) {
      sample_ball_point(gen, n, R, x);
      sample_ball_point(gen, n, R, y);
      double d2 = 0.0;
      for (int j = 0; j < n; ++j) d2 += (x[j] - y[j]) * (x[j] - y[j]);
      const double g = kernels::eval(k, std::sqrt(d2));
      acc.sum += g;
      acc.sum_sq += g * g;
    }
    return acc;
  };

  const int nthreads = std::min(thread_budget(), kShards);
  std::vector<ShardSums> sums(kShards);
  std::vector<std::future<void>> jobs;
  std::atomic<int> next{0};
  for (int t = 0; t < nthreads; ++t) {
    jobs.push_back(std::async(std::launch::async, [&]() {
      for (;;) {
        const int shard = next.fetch_add(1);
        if (shard >= kShards) return;
        sums[shard] = run_shard(shard);
      }
    }));
  }
  for (auto& j : jobs) j.get();

  double sum = 0.0, sum_sq = 0.0;
  for (const auto& s : sums) {  // ordered merge
    sum += s.sum;
    sum_sq += s.sum_sq;
  }
  const double vol = unit_ball_volume(n) * std::pow(R, n);
  const double mean = sum / samples;
  const double var = std::max(0.0, (sum_sq - sum * sum / samples) / (samples - 1.0));
  OracleEstimate res;
  res.value = vol * vol * mean;
  res.stderr_estimate = vol * vol * std::sqrt(var / samples);
  res.samples_or_nodes = samples;
  return res;
}

OracleEstimate finite_cylinder_ratio(const Kernel& k, double l, double L, int n_quad) {
  if (k.dim != 3) throw unsupported_error("finite_cylinder_ratio covers n = 3");
  if (k.alpha > 2.0)
    throw unsupported_error("finite_cylinder_ratio covers alpha <= 2 (endpoint blows up otherwise)");
  if (!(l > 0.0 && L > 0.0)) throw std::domain_error("finite_cylinder_ratio requires l, L > 0");

  // W(s) = 2 int_0^tmax (L - t) G(sqrt(s^2 + t^2)) dt; truncated kernels only
  // contribute up to t = sqrt(kappa^2 - s^2).
  auto w_fn = [&](double s) {
    double tmax = L;
    if (k.family == KernelFamily::TruncatedCoulomb) {
      if (s >= k.kappa) return 0.0;
      tmax = std::min(L, std::sqrt(k.kappa * k.kappa - s * s));
    }
    auto inner = [&](double t) {
      const double r = std::sqrt(s * s + t * t);
      return (L - t) * kernels::eval(k, r);
    };
    return 2.0 * numerics::simpson(inner, 0.0, tmax, n_quad);
  };

  auto outer = [&](double s) {
    if (s <= 0.0) {
      // s W(s) -> 0 for alpha < 2 and pi L for alpha = 2 (Riesz).
      if (k.family == KernelFamily::Riesz && k.alpha == 2.0)
        return M_PI * L * cylinder::yukawa_geometry_I(l, 0.0);
      return 0.0;
    }
    return s * w_fn(s) * cylinder::yukawa_geometry_I(l, s);
  };

  const double interaction = 4.0 * M_PI * numerics::simpson(outer, 0.0, 2.0 * l, n_quad);
  const double vol = M_PI * l * l * L;
  const double perimeter = 2.0 * M_PI * l * L + 2.0 * M_PI * l * l;
  OracleEstimate res;
  res.value = (perimeter + interaction) / vol;
  res.samples_or_nodes = static_cast<long long>(n_quad) * n_quad;
  return res;
}

}  // namespace droplet::oracle
