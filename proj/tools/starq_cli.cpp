#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "starq/dirac.hpp"
#include "starq/spin.hpp"
#include "starq/suites.hpp"

namespace fs = std::filesystem;
using namespace starq;

namespace {

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// "a..b" or a single integer
std::pair<int, int> parse_range(const std::string& text) {
  const auto pos = text.find("..");
  if (pos == std::string::npos) {
    const int v = std::stoi(text);
    return {v, v};
  }
  return {std::stoi(text.substr(0, pos)), std::stoi(text.substr(pos + 2))};
}

fs::path resolve_outdir(std::string flag_value) {
  if (flag_value.empty()) {
    if (const char* env = std::getenv("STARQ_OUT")) flag_value = env;
  }
  if (flag_value.empty()) flag_value = ".";
  return fs::path(flag_value);
}

std::ofstream open_output(const fs::path& dir, const std::string& name) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  std::ofstream out(dir / name);
  if (!out) throw std::runtime_error("cannot write to " + (dir / name).string());
  return out;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

int cmd_verify(const std::string& suites, const std::string& backend, double hbar,
               double tolerance, unsigned long seed, int trunc, const std::string& reps,
               const std::string& outdir, const std::string& formats) {
  RunConfig cfg;
  cfg.backend = backend == "float" ? RunConfig::Backend::Float : RunConfig::Backend::Exact;
  cfg.hbar = hbar;
  cfg.tolerance = tolerance;
  cfg.seed = seed;
  cfg.witten_trunc = trunc;
  cfg.reps = split_list(reps);
  Recorder rec;
  try {
    run_suites(split_list(suites), cfg, rec);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  const fs::path dir = resolve_outdir(outdir);
  try {
    for (const auto& fmtname : split_list(formats)) {
      if (fmtname == "json") {
        auto out = open_output(dir, "report.json");
        out << rec.to_json(suites, cfg.backend_name(), hbar, tolerance, seed) << "\n";
      } else if (fmtname == "csv") {
        auto out = open_output(dir, "report.csv");
        out << "id,ref,backend,residual,pass\n";
        for (const auto& r : rec.records())
          out << r.id << ",\"" << r.ref << "\"," << r.backend << "," << fmt17(r.residual) << ","
              << (r.pass ? "true" : "false") << "\n";
      } else {
        std::cerr << "error: unknown output format: " << fmtname << "\n";
        return 2;
      }
    }
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  for (const auto& r : rec.records())
    std::cout << (r.pass ? "pass" : "FAIL") << "  " << r.id << "  residual=" << fmt17(r.residual)
              << "\n";
  std::cout << (rec.all_pass() ? "PASS" : "FAIL") << "  " << rec.records().size()
            << " checks, max residual " << fmt17(rec.max_residual()) << "\n";
  return rec.all_pass() ? 0 : 1;
}

int cmd_spectrum(const std::string& system, const std::string& nrange, const std::string& lrange,
                 double omega, double hbar, const std::string& outdir) {
  if (omega <= 0.0) {
    std::cerr << "error: omega must be positive\n";
    return 2;
  }
  const auto [n0, n1] = parse_range(nrange);
  const auto [l0, l1] = parse_range(lrange);
  if (n0 < 0 || n1 < n0 || l0 < 0 || l1 < l0) {
    std::cerr << "error: invalid level range\n";
    return 2;
  }
  const fs::path dir = resolve_outdir(outdir);
  auto out = open_output(dir, "spectrum_" + system + ".csv");
  if (system == "oscillator") {
    out << "n,E_over_hbar_omega,E\n";
    for (int n = n0; n <= n1; ++n)
      out << n << "," << (2 * n + 1) << "/2," << fmt17(hbar * omega * (n + 0.5)) << "\n";
  } else if (system == "landau") {
    out << "n,l,E_over_hbar_omega,j_over_hbar,E,j\n";
    for (int n = n0; n <= n1; ++n)
      for (int l = l0; l <= l1; ++l)
        out << n << "," << l << "," << (2 * n + 1) << "/2," << (l - n) << ","
            << fmt17(hbar * omega * (n + 0.5)) << "," << fmt17(hbar * (l - n)) << "\n";
  } else if (system == "susy") {
    out << "n_B,n_F,E_over_hbar_omega,E\n";
    // ordered by energy so the degenerate pairs sit next to each other
    for (int level = n0; level <= n1 + 1; ++level) {
      if (level <= n1)
        out << level << ",-1/2," << level << "," << fmt17(hbar * omega * level) << "\n";
      if (level >= 1 && level - 1 <= n1)
        out << (level - 1) << ",+1/2," << level << "," << fmt17(hbar * omega * level) << "\n";
    }
  } else {
    std::cerr << "error: unknown system: " << system << "\n";
    return 2;
  }
  std::cout << "wrote " << (dir / ("spectrum_" + system + ".csv")).string() << "\n";
  return 0;
}

int cmd_dynamics(const std::string& kind, double t0, double t1, int samples, double hbar,
                 double mass, double cl, double charge, double b3, double px, double py, double pz,
                 const std::string& outdir) {
  if (samples < 1) {
    std::cerr << "error: empty time grid\n";
    return 2;
  }
  const fs::path dir = resolve_outdir(outdir);
  auto grid = [&](int k) {
    return samples == 1 ? t0 : t0 + (t1 - t0) * k / static_cast<double>(samples - 1);
  };

  if (kind == "precession") {
    const double w = charge * b3 / (mass * cl);
    const int d = 3;
    BilinearFormC P = BilinearFormX::pauli(d).to_complex(hbar, 1.0);
    std::array<PhasePolynomial<ExactScalar>, 3> conj{evolve_sigma(1, ExactScalar(1)),
                                                     evolve_sigma(2, ExactScalar(1)),
                                                     evolve_sigma(3, ExactScalar(1))};
    std::array<MultivectorC, 3> sigma_c{sigma_mv(d, 1).to_complex(hbar, 1.0),
                                        sigma_mv(d, 2).to_complex(hbar, 1.0),
                                        sigma_mv(d, 3).to_complex(hbar, 1.0)};
    auto out = open_output(dir, "dynamics_precession.csv");
    out << "t";
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j) out << ",sigma" << i << "_c" << j << "_re,sigma" << i << "_c"
                                       << j << "_im";
    out << ",residual_heisenberg,residual_precession\n";
    for (int k = 0; k < samples; ++k) {
      const double t = grid(k);
      std::array<MultivectorC, 3> val, dval;
      for (int i = 0; i < 3; ++i) {
        const std::complex<double> freq = conj[i].freq.to_complex(hbar, 1.0) * w;
        const std::complex<double> wp = std::exp(std::complex<double>(0.0, -t / hbar) * freq);
        MultivectorC v(d), dv(d);
        for (const auto& [n, mv] : conj[i].coef) {
          MultivectorC mvc = mv.to_complex(hbar, 1.0);
          const std::complex<double> phase = std::pow(wp, n);
          v += mvc * phase;
          dv += mvc * (phase * std::complex<double>(0.0, -static_cast<double>(n) / hbar) * freq);
        }
        val[i] = v;
        dval[i] = dv;
      }
      out << fmt17(t);
      double res_h = 0.0;
      MultivectorC H = sigma_c[2] * std::complex<double>(hbar * w / 2.0, 0.0);
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
          // coefficient over the sigma basis: (1/2) Tr(val * sigma_j)
          std::complex<double> cij =
              0.5 * circle_product(val[i], sigma_c[j], P).trace({hbar, 0.0});
          out << "," << fmt17(cij.real()) << "," << fmt17(cij.imag());
        }
        MultivectorC r = dval[i] * std::complex<double>(0.0, hbar) -
                         (circle_product(val[i], H, P) - circle_product(H, val[i], P));
        res_h = std::max(res_h, r.norm_inf());
      }
      // dS/dt = (e/mc) B x S
      const double f = charge / (mass * cl);
      double res_p = 0.0;
      MultivectorC r0 = dval[0] + val[1] * std::complex<double>(f * b3, 0.0);
      MultivectorC r1 = dval[1] - val[0] * std::complex<double>(f * b3, 0.0);
      res_p = std::max({r0.norm_inf(), r1.norm_inf(), dval[2].norm_inf()});
      out << "," << fmt17(res_h) << "," << fmt17(res_p) << "\n";
    }
    std::cout << "wrote " << (dir / "dynamics_precession.csv").string() << "\n";
    return 0;
  }

  if (kind == "zitterbewegung") {
    DiracRep rep_x = DiracRep::build(DiracKind::D4);
    DiracRepC rep = to_complex(rep_x, hbar, cl);
    std::array<double, 3> p{px, py, pz};
    const double E =
        std::sqrt(cl * cl * (px * px + py * py + pz * pz) + mass * mass * cl * cl * cl * cl);
    ZitterSolution sol = zitterbewegung_solution(rep_x, p, mass, cl, hbar);
    auto out = open_output(dir, "dynamics_zitterbewegung.csv");
    out << "t";
    for (int i = 1; i <= 3; ++i)
      out << ",x" << i << "_drift,x" << i << "_osc_amplitude,x" << i << "_residual";
    out << "\n";
    for (int k = 0; k < samples; ++k) {
      const double t = grid(k);
      out << fmt17(t);
      for (int i = 0; i < 3; ++i) {
        const double drift = cl * cl * p[i] * t / E;
        const std::complex<double> ph(0.0, 2.0 * E * t / hbar);
        MultivectorC osc = sol.component[i].osc_plus * std::exp(ph) +
                           sol.component[i].osc_minus * std::exp(-ph) + sol.component[i].constant;
        const double residual = zitter_heisenberg_residual(sol, rep, i, t);
        out << "," << fmt17(drift) << "," << fmt17(osc.norm_inf()) << "," << fmt17(residual);
      }
      out << "\n";
    }
    std::cout << "wrote " << (dir / "dynamics_zitterbewegung.csv").string() << "\n";
    return 0;
  }

  std::cerr << "error: unknown dynamics kind: " << kind << "\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"starq: exact deformation-quantization engine and verification suites"};
  app.require_subcommand(1);

  // verify
  std::string v_suites = "all", v_backend = "exact", v_reps = "d4,d5,d6", v_out, v_formats = "json";
  double v_hbar = 1.0, v_tol = 1e-10;
  unsigned long v_seed = 12345;
  int v_trunc = 8;
  auto* verify = app.add_subcommand("verify", "run verification suites and write a report");
  verify->add_option("--suite", v_suites,
                     "comma list of cliffordization,wick,oscillator,landau,susy,dirac,fw or all");
  verify->add_option("--backend", v_backend, "exact or float")
      ->check(CLI::IsMember({"exact", "float"}));
  verify->add_option("--hbar", v_hbar, "numeric hbar for the float backend");
  verify->add_option("--tolerance", v_tol, "float-backend tolerance");
  verify->add_option("--seed", v_seed, "seed for randomized property checks");
  verify->add_option("--trunc", v_trunc, "Witten-index truncation level");
  verify->add_option("--rep", v_reps, "comma list of Dirac representations: d4,d5,d6");
  verify->add_option("--out", v_out, "output directory (default: STARQ_OUT or .)");
  verify->add_option("--format", v_formats, "comma list of json,csv");

  // spectrum
  std::string s_system, s_n = "0..5", s_l = "0..5", s_out;
  double s_omega = 1.0, s_hbar = 1.0;
  auto* spectrum = app.add_subcommand("spectrum", "emit eigenvalue tables as CSV");
  spectrum->add_option("system", s_system, "oscillator, landau or susy")->required();
  spectrum->add_option("--n", s_n, "level range a..b");
  spectrum->add_option("--l", s_l, "angular range a..b (landau)");
  spectrum->add_option("--omega", s_omega, "oscillator frequency");
  spectrum->add_option("--hbar", s_hbar, "numeric hbar");
  spectrum->add_option("--out", s_out, "output directory");

  // dynamics
  std::string d_kind, d_out;
  double d_t0 = 0.0, d_t1 = 10.0, d_hbar = 1.0, d_mass = 1.0, d_c = 1.0, d_e = 1.0, d_b3 = 1.0;
  double d_px = 4.0, d_py = 0.0, d_pz = 0.0;
  int d_samples = 64;
  auto* dynamics = app.add_subcommand("dynamics", "emit sampled time series as CSV");
  dynamics->add_option("kind", d_kind, "precession or zitterbewegung")->required();
  dynamics->add_option("--t0", d_t0, "grid start");
  dynamics->add_option("--t1", d_t1, "grid end");
  dynamics->add_option("--samples", d_samples, "number of samples");
  dynamics->add_option("--hbar", d_hbar, "numeric hbar");
  dynamics->add_option("--mass", d_mass, "mass");
  dynamics->add_option("--c", d_c, "speed of light");
  dynamics->add_option("--e", d_e, "charge");
  dynamics->add_option("--b3", d_b3, "magnetic field along z");
  dynamics->add_option("--px", d_px, "momentum x");
  dynamics->add_option("--py", d_py, "momentum y");
  dynamics->add_option("--pz", d_pz, "momentum z");
  dynamics->add_option("--out", d_out, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed())
      return cmd_verify(v_suites, v_backend, v_hbar, v_tol, v_seed, v_trunc, v_reps, v_out,
                        v_formats);
    if (spectrum->parsed()) return cmd_spectrum(s_system, s_n, s_l, s_omega, s_hbar, s_out);
    if (dynamics->parsed())
      return cmd_dynamics(d_kind, d_t0, d_t1, d_samples, d_hbar, d_mass, d_c, d_e, d_b3, d_px,
                          d_py, d_pz, d_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
