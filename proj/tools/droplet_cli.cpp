// Command-line surface over the droplet C API: single ratio queries,
// parameter sweeps (figure-ready CSV), certification runs (JSON reports) and
// quadrature convergence studies.
//
// Exit codes: 0 ok / certified, 1 inconclusive certification, 2 parse error,
// 3 unsupported configuration, 4 internal failure.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "droplet/droplet.h"

namespace {

int status_to_exit(droplet_status s) {
  switch (s) {
    case DROPLET_OK: return 0;
    case DROPLET_INCONCLUSIVE: return 1;
    case DROPLET_ERR_PARSE: return 2;
    case DROPLET_ERR_UNSUPPORTED: return 3;
    case DROPLET_ERR_DOMAIN: return 2;  // bad input values
    case DROPLET_ERR_INTERNAL: return 4;
  }
  return 4;
}

int bail(droplet_status s) {
  std::fprintf(stderr, "error: %s\n", droplet_last_error());
  return status_to_exit(s);
}

// write-then-rename so failures never leave a partial file
int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::fputs(text.c_str(), stdout);
    return 0;
  }
  namespace fs = std::filesystem;
  const fs::path tmp = fs::path(out_path).concat(".tmp");
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) {
      std::fprintf(stderr, "error: cannot write %s\n", tmp.c_str());
      return 4;
    }
    f << text;
    if (!f.flush()) {
      std::fprintf(stderr, "error: write failed for %s\n", tmp.c_str());
      return 4;
    }
  }
  std::error_code ec;
  fs::rename(tmp, out_path, ec);
  if (ec) {
    std::fprintf(stderr, "error: rename to %s failed: %s\n", out_path.c_str(),
                 ec.message().c_str());
    return 4;
  }
  return 0;
}

struct KernelGuard {
  droplet_kernel* k = nullptr;
  ~KernelGuard() { droplet_kernel_free(k); }
};

struct StringGuard {
  char* s = nullptr;
  ~StringGuard() { droplet_string_free(s); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"energy/mass ratios of balls and cylinders for screened liquid-drop kernels"};
  app.require_subcommand(1);

  std::string mode = "fast";
  unsigned precision = 128;
  int n_quad = 4096;
  double tol = 1e-6;
  std::string out_path;
  app.add_option("--mode", mode, "fast|certified")->check(CLI::IsMember({"fast", "certified"}));
  app.add_option("--precision", precision, "certified precision in bits");
  app.add_option("--quad", n_quad, "Simpson subinterval count (even)");
  app.add_option("--tol", tol, "optimizer tolerance");
  app.add_option("--out", out_path, "output file (written atomically)");
  unsigned seed = 0;
  app.add_option("--seed", seed, "RNG seed (reserved for oracle tooling)");

  // ratio <kernel-spec> <ball|cyl> [--l]
  auto* ratio = app.add_subcommand("ratio", "optimal energy/mass ratio of balls or cylinders");
  std::string kernel_spec, shape;
  std::optional<double> l_override;
  ratio->add_option("kernel", kernel_spec, "kernel spec, e.g. trunc:alpha=1,kappa=1.1,n=3")
      ->required();
  ratio->add_option("shape", shape, "ball|cyl")->required()->check(CLI::IsMember({"ball", "cyl"}));
  double l_value = 0.0;
  auto* l_opt = ratio->add_option("--l", l_value, "evaluate sigma at this cylinder radius");

  // sweep <family> --from --to --steps
  auto* sweep = app.add_subcommand("sweep", "kappa sweep producing figure-ready CSV");
  std::string family;
  double k_from = 0.0, k_to = 0.0;
  int steps = 100;
  sweep->add_option("family", family, "trunc|yukawa")->required();
  sweep->add_option("--from", k_from, "first kappa")->required();
  sweep->add_option("--to", k_to, "last kappa")->required();
  sweep->add_option("--steps", steps, "number of rows");

  // certify <case> --kappa [--l --N --bracket]
  auto* certify = app.add_subcommand("certify", "machine-checked inequality certification");
  std::string ccase, kappa_str, l_str = "209/100", bracket_str = "884/10000,885/10000";
  long big_n = 30000;
  certify->add_option("case", ccase, "trunc-coulomb|yukawa")
      ->required()
      ->check(CLI::IsMember({"trunc-coulomb", "yukawa"}));
  certify->add_option("--kappa", kappa_str, "rational kappa, e.g. 11/10 or 0.56")->required();
  certify->add_option("--l", l_str, "cylinder radius (yukawa), rational");
  certify->add_option("--N", big_n, "Riemann grid cells (yukawa)");
  certify->add_option("--bracket", bracket_str, "lambda* bracket a,b (yukawa), rationals");

  // converge --kappa --l [--n-list] [--reference]
  auto* converge = app.add_subcommand("converge", "quadrature convergence study CSV");
  double c_kappa = 0.56, c_l = 2.09;
  std::string n_list_str = "32,64,128,256,512,1024,2048,4096";
  int reference_n = 16384;
  converge->add_option("--kappa", c_kappa, "kappa");
  converge->add_option("--l", c_l, "cylinder radius");
  converge->add_option("--n-list", n_list_str, "comma-separated even subinterval counts");
  converge->add_option("--reference", reference_n, "reference grid size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (ratio->parsed()) {
    KernelGuard kg;
    droplet_status s = droplet_kernel_parse(kernel_spec.c_str(), &kg.k);
    if (s != DROPLET_OK) return bail(s);
    droplet_ratio_result r{};
    std::ostringstream msg;
    if (shape == "ball") {
      s = droplet_rho_ball(kg.k, &r);
      if (s != DROPLET_OK) return bail(s);
      msg.precision(17);
      msg << "rho_ball = " << r.value << "\n"
          << "optimizer = " << r.optimizer << "\n"
          << "regime = " << r.regime << "\n";
    } else if (mode == "certified") {
      // certified cyl evaluation is the exact-Catalan point l = kappa/2
      if (kernel_spec.rfind("trunc:", 0) != 0) {
        std::fprintf(stderr, "error: certified ratio is available for trunc cyl at l=kappa/2\n");
        return 3;
      }
      const auto kpos = kernel_spec.find("kappa=");
      std::string kappa = kernel_spec.substr(kpos + 6);
      kappa = kappa.substr(0, kappa.find(','));
      s = droplet_sigma_cyl_trunc_half_certified(kappa.c_str(), precision, &r);
      if (s != DROPLET_OK) return bail(s);
      msg.precision(17);
      msg << "sigma_cyl(kappa/2) in [" << r.lo << ", " << r.hi << "]\n"
          << "l = " << r.optimizer << "\nmethod = " << r.method << "\n";
    } else {
      s = *l_opt ? droplet_sigma_cyl(kg.k, l_value, n_quad, &r)
                 : droplet_rho_cyl(kg.k, 0, 0, tol, n_quad, &r);
      if (s != DROPLET_OK) return bail(s);
      msg.precision(17);
      msg << (*l_opt ? "sigma_cyl = " : "rho_cyl = ") << r.value << "\n"
          << "l = " << r.optimizer << "\n"
          << "method = " << r.method << "\n";
    }
    return emit(msg.str(), out_path);
  }

  if (sweep->parsed()) {
    StringGuard csv;
    const droplet_status s =
        droplet_sweep_csv(family.c_str(), k_from, k_to, steps, n_quad, tol, &csv.s);
    if (s != DROPLET_OK) return bail(s);
    return emit(csv.s, out_path);
  }

  if (certify->parsed()) {
    StringGuard json;
    droplet_status s;
    if (ccase == "trunc-coulomb") {
      s = droplet_certify_trunc_coulomb(kappa_str.c_str(), precision, &json.s);
    } else {
      const auto comma = bracket_str.find(',');
      if (comma == std::string::npos) {
        std::fprintf(stderr, "error: --bracket expects a,b\n");
        return 2;
      }
      const std::string blo = bracket_str.substr(0, comma);
      const std::string bhi = bracket_str.substr(comma + 1);
      s = droplet_certify_yukawa(kappa_str.c_str(), l_str.c_str(), big_n, blo.c_str(),
                                 bhi.c_str(), precision, &json.s);
    }
    if (s != DROPLET_OK && s != DROPLET_INCONCLUSIVE) return bail(s);
    const int rc = emit(std::string(json.s) + "\n", out_path);
    if (rc != 0) return rc;
    return status_to_exit(s);
  }

  if (converge->parsed()) {
    std::vector<int> ns;
    std::stringstream ss(n_list_str);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        ns.push_back(std::stoi(item));
      } catch (const std::exception&) {
        std::fprintf(stderr, "error: bad --n-list entry '%s'\n", item.c_str());
        return 2;
      }
    }
    StringGuard csv;
    double order = 0.0;
    const droplet_status s = droplet_converge_csv(c_kappa, c_l, ns.data(),
                                                  static_cast<int>(ns.size()), reference_n,
                                                  &csv.s, &order);
    if (s != DROPLET_OK) return bail(s);
    return emit(csv.s, out_path);
  }

  return 2;
}
