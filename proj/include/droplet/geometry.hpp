#pragma once

namespace droplet {

/// Volume of the unit ball in R^n: pi^(n/2) / Gamma(1 + n/2).
double unit_ball_volume(int n);

/// Hausdorff measure of the unit sphere S^k in R^(k+1): 2 pi^((k+1)/2) / Gamma((k+1)/2).
double unit_sphere_area(int k);

}  // namespace droplet
