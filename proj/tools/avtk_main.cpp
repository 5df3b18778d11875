#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "avtk/report.hpp"

namespace {

struct GlobalOpts {
  bool json = false;
  double c3 = 1.0;
  double c1prime = 1.0;
  std::uint64_t seed = 0;
  bool seed_set = false;
  std::string out;
};

avtk::ReportParams to_params(const GlobalOpts& g) {
  avtk::ReportParams p;
  p.c3 = g.c3;
  p.c1prime = g.c1prime;
  if (g.seed_set) p.seed = g.seed;
  return p;
}

avtk::Int parse_int(const std::string& s) {
  try {
    return avtk::Int(s);
  } catch (const std::exception&) {
    throw avtk::precondition_error("not an integer: " + s);
  }
}

// Ascending comma-separated coefficients, e.g. "2,-1,1"; must end in 1.
avtk::IntPolynomial parse_poly(const std::string& csv) {
  std::vector<avtk::Int> coeffs;
  std::istringstream in(csv);
  std::string token;
  while (std::getline(in, token, ',')) coeffs.push_back(parse_int(token));
  avtk::require(coeffs.size() >= 2, "coeffs must list at least two ascending coefficients");
  return avtk::IntPolynomial::from_coeffs(std::move(coeffs));
}

int emit(const avtk::Report& report, const GlobalOpts& g) {
  if (g.json) {
    std::cout << report.envelope.dump(2) << "\n";
  } else {
    std::cout << report.text;
  }
  if (!g.out.empty()) {
    std::ofstream file(g.out);
    if (!file) {
      std::cerr << "error: cannot open " << g.out << " for writing\n";
      return 1;
    }
    file << report.envelope.dump(2) << "\n";
  }
  return 0;
}

bool verbose_enabled() {
  const char* v = std::getenv("AVTK_VERBOSE");
  return v != nullptr && *v != '\0';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic toolkit for torsion-constrained abelian varieties"};
  app.set_version_flag("--version", avtk::kToolVersion);
  app.require_subcommand(1);

  GlobalOpts global;
  app.add_flag("--json", global.json, "emit the machine envelope on stdout");
  app.add_option("--c3", global.c3, "Chebotarev scaling constant (ineffective; default 1.0)");
  app.add_option("--c1prime", global.c1prime,
                 "Elliott gap constant (ineffective; default 1.0)");
  auto* seed_opt = app.add_option("--seed", global.seed, "seed for randomized suites");
  app.add_option("--out", global.out, "also write the machine envelope to this path");

  std::function<avtk::Report()> action;

  auto* mprime = app.add_subcommand("mprime", "universal GL-order divisor M'(n)")->fallthrough();
  unsigned mprime_n = 0;
  mprime->add_option("n", mprime_n, "degree")->required();
  mprime->callback([&] { action = [&] { return avtk::report_mprime(mprime_n, to_params(global)); }; });

  auto* decomp = app.add_subcommand("decomp", "totient decomposition sieve")->fallthrough();
  unsigned decomp_g = 0, decomp_nk = 1;
  bool decomp_semistable = false;
  decomp->add_option("--g", decomp_g, "dimension")->required();
  decomp->add_option("--nk", decomp_nk, "base-field degree (default 1 = rational)");
  decomp->add_flag("--semistable", decomp_semistable, "force the geometric part to 1");
  decomp->callback([&] {
    action = [&] {
      const avtk::FieldContext ctx =
          decomp_nk == 1 ? avtk::FieldContext::make_rational(decomp_semistable)
                         : avtk::FieldContext::make_general(decomp_nk, decomp_semistable);
      return avtk::report_decomp(decomp_g, ctx, to_params(global));
    };
  });

  auto* table = app.add_subcommand("table-g4", "survivor table for dimension 4")->fallthrough();
  table->callback([&] { action = [&] { return avtk::report_table_g4(to_params(global)); }; });

  auto* threshold = app.add_subcommand("threshold", "trace-window threshold")->fallthrough();
  unsigned thr_g = 0, thr_elambda = 0;
  std::string thr_q0;
  threshold->add_option("--g", thr_g, "dimension")->required();
  threshold->add_option("--q0", thr_q0, "minimal residue field size")->required();
  threshold->add_option("--elambda", thr_elambda, "eigenvalue exponent")->required();
  threshold->callback([&] {
    action = [&] {
      return avtk::report_threshold(thr_g, parse_int(thr_q0), thr_elambda, to_params(global));
    };
  });

  auto* bounds = app.add_subcommand("bounds", "explicit bound formulas")->fallthrough();
  bounds->require_subcommand(1);

  auto* bc7 = bounds->add_subcommand("c7", "torsion-order bound C7")->fallthrough();
  unsigned bc7_g = 0, bc7_nk = 1;
  bc7->add_option("--g", bc7_g, "dimension")->required();
  bc7->add_option("--nk", bc7_nk, "base-field degree");
  bc7->callback([&] {
    action = [&] { return avtk::report_bounds_c7(bc7_g, bc7_nk, to_params(global)); };
  });

  auto* bc6 = bounds->add_subcommand("c6", "Chebotarev threshold C6")->fallthrough();
  std::uint64_t bc6_m = 0;
  unsigned bc6_g = 1, bc6_n = 1, bc6_nk = 1;
  double bc6_logdisc = 0.0;
  std::string bc6_ellprime = "1";
  bc6->add_option("--m", bc6_m, "residue order")->required();
  bc6->add_option("--g", bc6_g, "dimension");
  bc6->add_option("--n", bc6_n, "splitting-field degree");
  bc6->add_option("--nk", bc6_nk, "base-field degree");
  bc6->add_option("--logdisc", bc6_logdisc, "log of the field discriminant");
  bc6->add_option("--ellprime", bc6_ellprime, "largest prime divisor of the discriminant");
  bc6->callback([&] {
    action = [&] {
      avtk::ChebParams cheb;
      cheb.c3 = global.c3;
      cheb.log_disc = bc6_logdisc;
      cheb.m = bc6_m;
      cheb.g = bc6_g;
      cheb.n = bc6_n;
      cheb.n_K = bc6_nk;
      return avtk::report_bounds_c6(cheb, parse_int(bc6_ellprime), to_params(global));
    };
  });

  auto* bc8 = bounds->add_subcommand("c8", "cubic-field threshold C8")->fallthrough();
  unsigned bc8_g = 0;
  double bc8_eps = 0.0;
  bc8->add_option("--g", bc8_g, "dimension")->required();
  bc8->add_option("--eps", bc8_eps, "exponent slack, 0 < eps < 1/12")->required();
  bc8->callback([&] {
    action = [&] { return avtk::report_bounds_c8(bc8_g, bc8_eps, to_params(global)); };
  });

  auto* bnu = bounds->add_subcommand("n-uniform", "uniform threshold N(g, n, F)")->fallthrough();
  unsigned bnu_g = 0, bnu_n = 1, bnu_nf = 1;
  double bnu_logdisc = 0.0;
  std::string bnu_ellprime = "1";
  bnu->add_option("--g", bnu_g, "dimension")->required();
  bnu->add_option("--n", bnu_n, "extension degree");
  bnu->add_option("--nf", bnu_nf, "ground-field degree");
  bnu->add_option("--logdisc", bnu_logdisc, "log of the field discriminant");
  bnu->add_option("--ellprime", bnu_ellprime, "largest prime divisor of the discriminant");
  bnu->callback([&] {
    action = [&] {
      avtk::ChebParams cheb;
      cheb.c3 = global.c3;
      cheb.log_disc = bnu_logdisc;
      return avtk::report_bounds_n_uniform(bnu_g, bnu_n, bnu_nf, cheb,
                                           parse_int(bnu_ellprime), to_params(global));
    };
  });

  auto* lamw = app.add_subcommand("lambertw", "secondary real branch W_{-1}")->fallthrough();
  double lamw_x = 0.0;
  lamw->add_option("x", lamw_x, "argument in [-1/e, 0)")->required();
  lamw->callback([&] { action = [&] { return avtk::report_lambertw(lamw_x, to_params(global)); }; });

  auto* x0cmd = app.add_subcommand("x0", "final crossing of x^(1/N) = log(c x)")->fallthrough();
  double x0_c = 0.0, x0_n = 0.0;
  x0cmd->add_option("--c", x0_c, "scale")->required();
  x0cmd->add_option("--N", x0_n, "root index")->required();
  x0cmd->callback([&] { action = [&] { return avtk::report_x0(x0_c, x0_n, to_params(global)); }; });

  auto* residue = app.add_subcommand("residue", "smallest prime m-th power residue")->fallthrough();
  std::uint64_t res_m = 0, res_ell = 0;
  residue->add_option("--m", res_m, "power")->required();
  residue->add_option("--ell", res_ell, "prime modulus")->required();
  residue->callback([&] {
    action = [&] { return avtk::report_residue(res_m, res_ell, to_params(global)); };
  });

  auto* elliott = app.add_subcommand("elliott-scan", "least-residue ratio scan")->fallthrough();
  unsigned ell_m = 0;
  std::uint64_t ell_lo = 0, ell_hi = 0, ell_limit = 50;
  double ell_eps = 0.0;
  elliott->add_option("--m", ell_m, "power")->required();
  elliott->add_option("--lo", ell_lo, "lower end of the prime range")->required();
  elliott->add_option("--hi", ell_hi, "upper end of the prime range, <= 10^6")->required();
  elliott->add_option("--eps", ell_eps, "exponent slack, > 0")->required();
  elliott->add_option("--limit", ell_limit, "maximum rows shown (default 50)");
  elliott->callback([&] {
    action = [&] {
      return avtk::report_elliott(ell_m, ell_lo, ell_hi, ell_eps, ell_limit, to_params(global));
    };
  });

  auto* goldfeld = app.add_subcommand("goldfeld", "imaginary-discriminant membership check")->fallthrough();
  std::uint64_t gf_ell = 0;
  std::string gf_disc;
  goldfeld->add_option("--ell", gf_ell, "odd prime")->required();
  goldfeld->add_option("--disc", gf_disc, "fundamental discriminant of the field")->required();
  goldfeld->callback([&] {
    action = [&] { return avtk::report_goldfeld(gf_ell, parse_int(gf_disc), to_params(global)); };
  });

  auto* weil = app.add_subcommand("weil", "Weil-number trace arguments")->fallthrough();
  weil->require_subcommand(1);

  auto* wpow = weil->add_subcommand("power-charpoly", "characteristic polynomial of powers")->fallthrough();
  std::string wpow_coeffs;
  unsigned wpow_e = 0;
  wpow->add_option("--coeffs", wpow_coeffs, "ascending coefficients, e.g. 2,-1,1")->required();
  wpow->add_option("--e", wpow_e, "power")->required();
  wpow->callback([&] {
    action = [&] {
      return avtk::report_weil_power(parse_poly(wpow_coeffs), wpow_e, to_params(global));
    };
  });

  auto* wforce = weil->add_subcommand("forcing", "congruent-trace forcing above the threshold")->fallthrough();
  std::string wforce_coeffs, wforce_q0, wforce_ell;
  unsigned wforce_elambda = 0;
  wforce->add_option("--coeffs", wforce_coeffs, "ascending coefficients")->required();
  wforce->add_option("--q0", wforce_q0, "residue field size")->required();
  wforce->add_option("--elambda", wforce_elambda, "eigenvalue exponent")->required();
  wforce->add_option("--ell", wforce_ell, "prime above the threshold")->required();
  wforce->callback([&] {
    action = [&] {
      return avtk::report_weil_forcing(parse_poly(wforce_coeffs), parse_int(wforce_q0),
                                       wforce_elambda, parse_int(wforce_ell), to_params(global));
    };
  });

  auto* wmazur = weil->add_subcommand("mazur", "odd-residue-degree window certificate")->fallthrough();
  unsigned wmazur_g = 0, wmazur_f = 0;
  std::string wmazur_q, wmazur_ell;
  wmazur->add_option("--g", wmazur_g, "dimension")->required();
  wmazur->add_option("--q", wmazur_q, "residue field size")->required();
  wmazur->add_option("--f", wmazur_f, "odd residue degree")->required();
  wmazur->add_option("--ell", wmazur_ell, "prime with 4gq < ell")->required();
  wmazur->callback([&] {
    action = [&] {
      return avtk::report_weil_mazur(wmazur_g, parse_int(wmazur_q), wmazur_f,
                                     parse_int(wmazur_ell), to_params(global));
    };
  });

  auto* wsixth = weil->add_subcommand("sixth-root", "sixth-root balance certificate")->fallthrough();
  unsigned wsixth_g = 0;
  std::string wsixth_p, wsixth_ell;
  wsixth->add_option("--g", wsixth_g, "dimension, 1..16")->required();
  wsixth->add_option("--p", wsixth_p, "prime")->required();
  wsixth->add_option("--ell", wsixth_ell, "prime with 6 | ell - 1 and 4gp^3 < ell")->required();
  wsixth->callback([&] {
    action = [&] {
      return avtk::report_weil_sixth(wsixth_g, parse_int(wsixth_p), parse_int(wsixth_ell),
                                     to_params(global));
    };
  });

  auto* wcubic = weil->add_subcommand("cubic", "odd-exponent cube-root certificate")->fallthrough();
  std::string wcubic_q, wcubic_ell;
  wcubic->add_option("--q", wcubic_q, "odd-exponent prime power")->required();
  wcubic->add_option("--ell", wcubic_ell, "prime with 4q < ell")->required();
  wcubic->callback([&] {
    action = [&] {
      return avtk::report_weil_cubic(parse_int(wcubic_q), parse_int(wcubic_ell),
                                     to_params(global));
    };
  });

  auto* family = app.add_subcommand("family", "Legendre unit family")->fallthrough();
  unsigned family_count = 0;
  family->add_option("--count", family_count, "number of members, <= 20")->required();
  family->callback([&] {
    action = [&] { return avtk::report_family(family_count, to_params(global)); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  global.seed_set = seed_opt->count() > 0;

  if (verbose_enabled()) {
    std::cerr << "avtk: version " << avtk::kToolVersion << ", running";
    for (int i = 1; i < argc; ++i) std::cerr << " " << argv[i];
    std::cerr << "\n";
  }

  try {
    return emit(action(), global);
  } catch (const avtk::precondition_error& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
