#pragma once

#include <cstdint>
#include <optional>

#include "droplet/kernels.hpp"

namespace droplet::oracle {

struct OracleEstimate {
  double value = 0.0;
  std::optional<double> stderr_estimate;  ///< Monte Carlo only
  long long samples_or_nodes = 0;
};

/// Ball interaction energy through the slicing identity
///   I(B_R) = 1/2 |S^(n-1)| |S^(n-2)| int_0^R S_G(2 sqrt(R^2-r^2)) r^(n-2) dr,
/// integrated after the substitution r = R sin(theta), which removes the
/// square-root endpoint and restores fourth-order Simpson convergence.
OracleEstimate ball_energy_by_slicing(const Kernel& k, double R, int n_quad);

/// Plain Monte Carlo over uniform pairs in B_R x B_R; deterministic for a
/// fixed seed regardless of thread count (fixed shard layout, ordered merge).
OracleEstimate ball_energy_monte_carlo(const Kernel& k, double R, long long samples,
                                       std::uint64_t seed);

/// Energy/mass ratio of the finite cylinder C_(l,L) = B_l^2 x (0, L), n = 3.
/// The interaction term uses the reduced representation
///   I(C) = 4 pi int_0^2l s W(s) I_geom(s) ds,
///   W(s) = 2 int_0^L (L-t) G(sqrt(s^2+t^2)) dt.
/// Supported for alpha <= 2 (the integrand endpoint stays finite).
OracleEstimate finite_cylinder_ratio(const Kernel& k, double l, double L, int n_quad);

}  // namespace droplet::oracle
