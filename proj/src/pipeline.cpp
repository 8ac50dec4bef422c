#include "droplet/pipeline.hpp"

#include <atomic>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>
#include <vector>

#include "droplet/ball.hpp"
#include "droplet/cylinder.hpp"
#include "droplet/threads.hpp"

namespace droplet::pipeline {

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

SweepResult sweep(KernelFamily family, double kappa_from, double kappa_to, int steps,
                  int n_quad, double tol) {
  if (family == KernelFamily::Riesz)
    throw unsupported_error("sweep covers trunc and yukawa families (sigma is infinite for R_1)");
  if (!(kappa_from > 0.0 && kappa_to > kappa_from)) throw std::domain_error("bad kappa range");
  if (steps < 2) throw std::domain_error("sweep requires at least 2 steps");

  SweepResult out;
  out.rows.resize(steps);
  if (family == KernelFamily::TruncatedCoulomb) {
    out.comment_lines.push_back("# kernel=trunc alpha=1 n=3");
    out.comment_lines.push_back("# kappa_min=" + fmt17(ball::trunc_kappa_min(1.0)));
    out.comment_lines.push_back("# kappa_max=" + fmt17(ball::trunc_kappa_max(1.0)));
  } else {
    out.comment_lines.push_back("# kernel=yukawa alpha=1 n=3");
    out.comment_lines.push_back("# kappa_min=" + fmt17(ball::yukawa_flat_threshold()));
  }

  std::atomic<int> next{0};
  std::atomic<bool> failed{false};
  std::string error_msg;
  std::mutex error_mutex;
  auto worker = [&]() {
    for (;;) {
      const int i = next.fetch_add(1);
      if (i >= steps || failed.load()) return;
      try {
        const double kappa =
            kappa_from + (kappa_to - kappa_from) * i / static_cast<double>(steps - 1);
        const Kernel k = family == KernelFamily::TruncatedCoulomb
                             ? Kernel::truncated_coulomb(1.0, kappa, 3)
                             : Kernel::yukawa(1.0, kappa, 3);
        const auto ballr = ball::rho_ball(k);
        const auto cylr = cylinder::rho_cyl(k, tol, n_quad);
        out.rows[i] = SweepRow{kappa, ballr.rho, cylr.l, cylr.sigma,
                               ball::regime_name(ballr.regime)};
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(error_mutex);
        failed.store(true);
        error_msg = e.what();
      }
    }
  };
  const int nthreads = std::min(thread_budget(), steps);
  std::vector<std::thread> pool;
  for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failed.load()) throw std::runtime_error("sweep failed: " + error_msg);
  return out;
}

std::string sweep_to_csv(const SweepResult& s) {
  std::ostringstream out;
  for (const auto& c : s.comment_lines) out << c << "\n";
  out << "kappa,rho_ball,l_opt,sigma_cyl,regime\n";
  for (const auto& r : s.rows)
    out << fmt17(r.kappa) << ',' << fmt17(r.rho_ball) << ',' << fmt17(r.l_opt) << ','
        << fmt17(r.sigma_cyl) << ',' << r.regime << "\n";
  return out.str();
}

SweepResult sweep_from_csv(const std::string& text) {
  SweepResult out;
  std::istringstream in(text);
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      out.comment_lines.push_back(line);
      continue;
    }
    if (!header_seen) {
      if (line != "kappa,rho_ball,l_opt,sigma_cyl,regime")
        throw parse_error("unexpected sweep CSV header: " + line);
      header_seen = true;
      continue;
    }
    SweepRow row;
    std::istringstream ls(line);
    std::string field;
    auto next_double = [&](double& v) {
      if (!std::getline(ls, field, ',')) throw parse_error("short sweep CSV row");
      v = std::stod(field);
    };
    next_double(row.kappa);
    next_double(row.rho_ball);
    next_double(row.l_opt);
    next_double(row.sigma_cyl);
    if (!std::getline(ls, row.regime)) throw parse_error("sweep CSV row missing regime");
    out.rows.push_back(row);
  }
  if (!header_seen) throw parse_error("sweep CSV has no header");
  return out;
}

ConvergeResult converge_yukawa(double kappa, double l, const std::vector<int>& n_list,
                               int reference_n) {
  if (n_list.empty()) throw std::domain_error("converge requires a non-empty n list");
  ConvergeResult res;
  res.reference_n = reference_n;
  res.reference = cylinder::sigma_cyl_yukawa(kappa, l, reference_n).sigma;
  for (int n : n_list) {
    const double err =
        std::abs(cylinder::sigma_cyl_yukawa(kappa, l, n).sigma - res.reference);
    res.report.rows.push_back({2.0 * l / n, err});
    if (err < 1e-12) res.machine_precision_limited = true;
  }
  // reuse the least-squares fit from convergence_study
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int m = 0;
  for (const auto& r : res.report.rows) {
    if (r.error <= 0.0) continue;
    const double lx = std::log(r.h), ly = std::log(r.error);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++m;
  }
  res.report.fitted_order = (m >= 2) ? (m * sxy - sx * sy) / (m * sxx - sx * sx) : 0.0;
  return res;
}

std::string converge_to_csv(const ConvergeResult& c) {
  std::ostringstream out;
  out << "# reference_n=" << c.reference_n << "\n";
  out << "# reference=" << fmt17(c.reference) << "\n";
  out << "# fitted_order=" << fmt17(c.report.fitted_order) << "\n";
  if (c.machine_precision_limited) out << "# machine_precision_limited=true\n";
  out << "h,error\n";
  for (const auto& r : c.report.rows) out << fmt17(r.h) << ',' << fmt17(r.error) << "\n";
  return out.str();
}

void write_file_atomic(const std::string& path, const std::string& text) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out << text;
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  fs::rename(tmp, target);
}

}  // namespace droplet::pipeline
