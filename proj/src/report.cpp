#include "avtk/report.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "avtk/congruences.hpp"
#include "avtk/group_orders.hpp"
#include "avtk/lambert.hpp"

namespace avtk {

namespace {

const char* bool_str(bool b) { return b ? "true" : "false"; }

std::string params_footer(const ReportParams& p) {
  std::ostringstream out;
  out << "parameters: C3 = " << fmt_double(p.c3) << " (ineffective), C1' = "
      << fmt_double(p.c1prime) << " (ineffective)";
  if (p.seed) out << ", seed = " << *p.seed;
  out << "\n";
  return out.str();
}

std::string pad(const std::string& s, std::size_t width) {
  return s + std::string(width > s.size() ? width - s.size() : 0, ' ');
}

Int next_prime_int(Int n) {
  do {
    ++n;
  } while (!is_prime(n));
  return n;
}

OrderedJson quadrat_json(const QuadRat& x) {
  OrderedJson j;
  j["a"] = fmt_rat(x.a);
  j["b"] = fmt_rat(x.b);
  j["d"] = fmt_int(x.d);
  j["rendered"] = x.to_string();
  return j;
}

OrderedJson poly_json(const IntPolynomial& P) {
  OrderedJson j;
  j["coeffs_ascending"] = OrderedJson::array();
  for (const Int& c : P.c) j["coeffs_ascending"].push_back(fmt_int(c));
  j["rendered"] = P.to_string();
  return j;
}

std::string base_name(const FieldContext& ctx) {
  return ctx.base == BaseField::rational ? "Q" : "K";
}

OrderedJson survivor_json(const SurvivorReport& s) {
  OrderedJson j;
  j["sum"] = s.profile.phi_sum();
  OrderedJson counts;
  for (const auto& [d, n_d] : s.profile.counts) counts[std::to_string(d)] = n_d;
  j["counts"] = counts;
  j["e"] = s.e;
  j["m_q"] = s.m_q;
  j["congruence"] = congruence_json(s.constraint);
  j["rendered_congruence"] = s.constraint.to_string("ell");
  return j;
}

}  // namespace

std::string fmt_double(double x) {
  std::ostringstream out;
  out << std::setprecision(15) << x;
  return out.str();
}

std::string fmt_int(const Int& n) {
  std::ostringstream out;
  out << n;
  return out.str();
}

std::string fmt_rat(const Rat& r) {
  std::ostringstream out;
  out << r;
  return out.str();
}

OrderedJson magnitude_json(const Magnitude& m) {
  OrderedJson j;
  if (m.exact) {
    j["exact"] = fmt_int(*m.exact);
  } else {
    j["exact"] = nullptr;
  }
  j["log10"] = m.log10_value();
  return j;
}

OrderedJson congruence_json(const CongruenceClass& c) {
  OrderedJson j;
  j["modulus"] = c.modulus();
  j["residues"] = c.residues();
  return j;
}

OrderedJson certificate_json(const Certificate& cert) {
  OrderedJson j;
  j["steps"] = OrderedJson::array();
  for (const CertStep& step : cert.steps) {
    OrderedJson s;
    s["claim"] = step.claim;
    s["holds"] = step.holds;
    j["steps"].push_back(s);
  }
  j["contradiction"] = cert.contradiction();
  return j;
}

std::string render_certificate(const Certificate& cert) {
  std::ostringstream out;
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    out << "  [" << (i + 1) << "] " << (cert.steps[i].holds ? "holds" : "FAILS") << "  "
        << cert.steps[i].claim << "\n";
  }
  out << "contradiction established: " << bool_str(cert.contradiction()) << "\n";
  return out.str();
}

OrderedJson make_envelope(const std::string& command, OrderedJson inputs,
                          const ReportParams& params, OrderedJson results) {
  OrderedJson env;
  env["command"] = command;
  env["inputs"] = std::move(inputs);
  OrderedJson p;
  p["c3"] = params.c3;
  p["c1prime"] = params.c1prime;
  if (params.seed) p["seed"] = *params.seed;
  env["parameters"] = p;
  env["results"] = std::move(results);
  env["version"] = kToolVersion;
  return env;
}

Report report_mprime(unsigned n, const ReportParams& params) {
  const MPrimeFactorization mp = m_prime(n);
  std::ostringstream text;
  text << "M'(" << n << ") = " << mp.value << " = " << mp.factored_string() << "\n";
  for (const auto& [p, u] : mp.factors) text << "  u_" << p << " = " << u << "\n";
  text << params_footer(params);

  OrderedJson inputs;
  inputs["n"] = n;
  OrderedJson results;
  results["value"] = fmt_int(mp.value);
  results["factorization"] = mp.factored_string();
  results["exponents"] = OrderedJson::array();
  for (const auto& [p, u] : mp.factors) {
    OrderedJson e;
    e["p"] = p;
    e["u"] = u;
    results["exponents"].push_back(e);
  }
  return {text.str(), make_envelope("mprime", inputs, params, results)};
}

Report report_decomp(unsigned g, const FieldContext& ctx, const ReportParams& params) {
  const AnalysisResult res = analyze(g, ctx);
  std::ostringstream text;
  text << "decomposition sieve: g = " << g << ", base = " << base_name(ctx)
       << ", n_K = " << ctx.n_K << ", semistable = " << bool_str(ctx.semistable) << "\n";
  text << "profiles considered: " << res.profiles.size() << "\n";
  if (res.survivors.empty()) {
    text << "survivors: none\n";
  } else {
    text << "survivors: " << res.survivors.size() << "\n";
    for (const SurvivorReport& s : res.survivors) {
      text << "  " << s.profile.phi_sum() << "  ->  e = " << s.e << ", m_Q = " << s.m_q
           << ", " << s.constraint.to_string("ell") << "\n";
    }
  }
  text << "eliminated: " << res.eliminated.size() << "\n";
  for (const EliminationRecord& r : res.eliminated) {
    text << "  " << r.profile.phi_sum() << "  [" << r.stage << "]  " << r.detail << "\n";
  }
  text << params_footer(params);

  OrderedJson inputs;
  inputs["g"] = g;
  inputs["base"] = base_name(ctx);
  inputs["n_K"] = ctx.n_K;
  inputs["semistable"] = ctx.semistable;
  OrderedJson results;
  results["profile_count"] = res.profiles.size();
  results["survivors"] = OrderedJson::array();
  for (const SurvivorReport& s : res.survivors) results["survivors"].push_back(survivor_json(s));
  results["eliminated"] = OrderedJson::array();
  for (const EliminationRecord& r : res.eliminated) {
    OrderedJson e;
    e["sum"] = r.profile.phi_sum();
    e["stage"] = r.stage;
    e["detail"] = r.detail;
    results["eliminated"].push_back(e);
  }
  return {text.str(), make_envelope("decomp", inputs, params, results)};
}

Report report_table_g4(const ReportParams& params) {
  AnalysisResult res = analyze(4, FieldContext::make_rational());
  std::sort(res.survivors.begin(), res.survivors.end(),
            [](const SurvivorReport& a, const SurvivorReport& b) {
              return display_less(a.profile, b.profile);
            });

  std::vector<std::pair<std::string, std::string>> rows;
  rows.reserve(res.survivors.size());
  for (const SurvivorReport& s : res.survivors) {
    rows.emplace_back(s.profile.phi_sum(), s.constraint.to_string("ell"));
  }
  std::size_t w1 = std::string("sum").size();
  std::size_t w2 = std::string("congruence").size();
  for (const auto& [sum, cong] : rows) {
    w1 = std::max(w1, sum.size());
    w2 = std::max(w2, cong.size());
  }
  std::ostringstream text;
  text << pad("sum", w1) << "  " << "congruence" << "\n";
  text << std::string(w1, '-') << "  " << std::string(w2, '-') << "\n";
  for (const auto& [sum, cong] : rows) text << pad(sum, w1) << "  " << cong << "\n";
  text << params_footer(params);

  OrderedJson results;
  results["rows"] = OrderedJson::array();
  for (const SurvivorReport& s : res.survivors) results["rows"].push_back(survivor_json(s));
  return {text.str(), make_envelope("table-g4", OrderedJson::object(), params, results)};
}

Report report_threshold(unsigned g, const Int& q0, unsigned e_lambda,
                        const ReportParams& params) {
  const Int threshold = a2_threshold({.g = g, .q0 = q0, .e_lambda = e_lambda});
  const Int least_prime = next_prime_int(threshold);
  std::ostringstream text;
  text << "trace-window threshold: g = " << g << ", q0 = " << q0
       << ", e_lambda = " << e_lambda << "\n";
  text << "threshold = " << threshold << "\n";
  text << "least prime above threshold = " << least_prime << "\n";
  text << params_footer(params);

  OrderedJson inputs;
  inputs["g"] = g;
  inputs["q0"] = fmt_int(q0);
  inputs["e_lambda"] = e_lambda;
  OrderedJson results;
  results["threshold"] = fmt_int(threshold);
  results["least_prime_above"] = fmt_int(least_prime);
  return {text.str(), make_envelope("threshold", inputs, params, results)};
}

Report report_bounds_c7(unsigned g, unsigned n_K, const ReportParams& params) {
  const Magnitude value = c7(g, n_K);
  const Int exponent = Int(2) * g * n_K * n_K * m_prime(2 * g).value;
  std::ostringstream text;
  text << "C7 bound: g = " << g << ", n_K = " << n_K << "\n";
  text << "exponent 2*g*n_K^2*M'(2g) = " << exponent << "\n";
  text << "C7 = " << value.to_string() << "\n";
  text << "log10(C7) = " << fmt_double(value.log10_value()) << "\n";
  text << params_footer(params);

  OrderedJson inputs;
  inputs["g"] = g;
  inputs["n_K"] = n_K;
  OrderedJson results;
  results["exponent"] = fmt_int(exponent);
  results["value"] = magnitude_json(value);
  return {text.str(), make_envelope("bounds c7", inputs, params, results)};
}

Report report_bounds_c6(const ChebParams& cheb, const Int& ell_prime,
                        const ReportParams& params) {
  const auto [c4, c5] = c4_c5(cheb);
  const Magnitude corollary = corollary_bound(cheb);
  const Magnitude value = c6(cheb, ell_prime);
  std::ostringstream text;
  text << "C6 bound: m = " << cheb.m << ", g = " << cheb.g << ", n = " << cheb.n
       << ", n_K = " << cheb.n_K << ", log_disc = " << fmt_double(cheb.log_disc)
       << ", ell_prime = " << ell_prime << "\n";
  text << "C4 = " << fmt_double(c4) << ", C5 = " << c5 << "\n";
  text << "corollary bound = " << corollary.to_string() << "\n";
  text << "C6 = " << value.to_string() << "\n";
  text << "log10(C6) = " << fmt_double(value.log10_value()) << "\n";
  text << params_footer(params);

  OrderedJson inputs;
  inputs["m"] = cheb.m;
  inputs["g"] = cheb.g;
  inputs["n"] = cheb.n;
  inputs["n_K"] = cheb.n_K;
  inputs["log_disc"] = cheb.log_disc;
  inputs["ell_prime"] = fmt_int(ell_prime);
  OrderedJson results;
  results["c4"] = c4;
  results["c5"] = fmt_int(c5);
  results["corollary"] = magnitude_json(corollary);
  results["value"] = magnitude_json(value);
  return {text.str(), make_envelope("bounds c6", inputs, params, results)};
}

Report report_bounds_c8(unsigned g, double eps, const ReportParams& params) {
  const Magnitude value = c8(g, eps, params.c1prime);
  std::ostringstream text;
  text << "C8 bound: g = " << g << ", eps = " << fmt_double(eps) << "\n";
  text << "C8 = " << value.to_string() << "\n";
  text << "log10(C8) = " << fmt_double(value.log10_value()) << "\n";
  text << params_footer(params);

  OrderedJson inputs;
  inputs["g"] = g;
  inputs["eps"] = eps;
  OrderedJson results;
  results["value"] = magnitude_json(value);
  return {text.str(), make_envelope("bounds c8", inputs, params, results)};
}

Report report_bounds_n_uniform(unsigned g, unsigned n, unsigned n_F,
                               const ChebParams& field_params, const Int& ell_prime,
                               const ReportParams& params) {
  const std::vector<Int> divisor_set = n_uniform_divisors(g, n, n_F);
  const Magnitude value = n_uniform(g, n, n_F, field_params, ell_prime);
  std::ostringstream text;
  text << "uniform threshold: g = " << g << ", n = " << n << ", n_F = " << n_F
       << ", log_disc = " << fmt_double(field_params.log_disc)
       << ", ell_prime = " << ell_prime << "\n";
  text << "divisor set:";
  for (const Int& d : divisor_set) text << " " << d;
  text << "\n";
  text << "N = " << value.to_string() << "\n";
  text << "log10(N) = " << fmt_double(value.log10_value()) << "\n";
  text << params_footer(params);

  OrderedJson inputs;
  inputs["g"] = g;
  inputs["n"] = n;
  inputs["n_F"] = n_F;
  inputs["log_disc"] = field_params.log_disc;
  inputs["ell_prime"] = fmt_int(ell_prime);
  OrderedJson results;
  results["divisors"] = OrderedJson::array();
  for (const Int& d : divisor_set) results["divisors"].push_back(fmt_int(d));
  results["value"] = magnitude_json(value);
  return {text.str(), make_envelope("bounds n-uniform", inputs, params, results)};
}

Report report_lambertw(double x, const ReportParams& params) {
  const double w = lambert_w_m1(x);
  const double lower = lambert_lower_bound(x);
  const double residual = std::abs(w * std::exp(w) - x);
  std::ostringstream text;
  text << "Lambert W, branch -1: x = " << fmt_double(x) << "\n";
  text << "W = " << fmt_double(w) << "\n";
  text << "lower bound = " << fmt_double(lower) << "\n";
  text << "residual = " << fmt_double(residual) << "\n";
  text << params_footer(params);

  OrderedJson inputs;
  inputs["x"] = x;
  OrderedJson results;
  results["w"] = w;
  results["lower_bound"] = lower;
  results["residual"] = residual;
  return {text.str(), make_envelope("lambertw", inputs, params, results)};
}

Report report_x0(double c, double N, const ReportParams& params) {
  const double x0 = x0_crossing(c, N);
  const double ceiling = c * std::pow(N, 2 * N);
  std::ostringstream text;
  text << "final crossing of x^(1/N) = log(c*x): c = " << fmt_double(c)
       << ", N = " << fmt_double(N) << "\n";
  text << "x0 = " << fmt_double(x0) << "\n";
  text << "ceiling c*N^(2N) = " << fmt_double(ceiling) << "\n";
  text << params_footer(params);

  OrderedJson inputs;
  inputs["c"] = c;
  inputs["N"] = N;
  OrderedJson results;
  results["x0"] = x0;
  results["ceiling"] = ceiling;
  return {text.str(), make_envelope("x0", inputs, params, results)};
}

Report report_residue(std::uint64_t m, std::uint64_t ell, const ReportParams& params) {
  const std::uint64_t p_min = smallest_prime_mth_residue(m, ell);
  std::ostringstream text;
  text << "smallest prime m-th power residue: m = " << m << ", ell = " << ell << "\n";
  text << "p_min = " << p_min << "\n";
  text << params_footer(params);

  OrderedJson inputs;
  inputs["m"] = m;
  inputs["ell"] = ell;
  OrderedJson results;
  results["p_min"] = p_min;
  return {text.str(), make_envelope("residue", inputs, params, results)};
}

Report report_elliott(unsigned m, std::uint64_t lo, std::uint64_t hi, double eps,
                      std::uint64_t limit, const ReportParams& params) {
  require(limit >= 1, "limit must be at least 1");
  const ElliottScan scan = elliott_scan(m, lo, hi, eps);
  const std::size_t shown = std::min<std::size_t>(scan.rows.size(), limit);

  std::size_t w1 = 3, w2 = 5;
  for (std::size_t i = 0; i < shown; ++i) {
    w1 = std::max(w1, std::to_string(scan.rows[i].ell).size());
    w2 = std::max(w2, std::to_string(scan.rows[i].p_min).size());
  }
  std::ostringstream text;
  text << "Elliott scan: m = " << m << ", ell in [" << lo << ", " << hi
       << "], eps = " << fmt_double(eps) << "\n";
  text << pad("ell", w1) << "  " << pad("p_min", w2) << "  ratio\n";
  for (std::size_t i = 0; i < shown; ++i) {
    text << pad(std::to_string(scan.rows[i].ell), w1) << "  "
         << pad(std::to_string(scan.rows[i].p_min), w2) << "  "
         << fmt_double(scan.rows[i].ratio) << "\n";
  }
  text << "rows: " << scan.rows.size();
  if (shown < scan.rows.size()) text << " (showing first " << shown << ")";
  text << "\n";
  text << "max ratio = " << fmt_double(scan.max_ratio) << " at ell = " << scan.max_ratio_ell
       << "\n";
  text << params_footer(params);

  OrderedJson inputs;
  inputs["m"] = m;
  inputs["lo"] = lo;
  inputs["hi"] = hi;
  inputs["eps"] = eps;
  inputs["limit"] = limit;
  OrderedJson results;
  results["rows"] = OrderedJson::array();
  for (std::size_t i = 0; i < shown; ++i) {
    OrderedJson row;
    row["ell"] = scan.rows[i].ell;
    row["p_min"] = scan.rows[i].p_min;
    row["ratio"] = scan.rows[i].ratio;
    results["rows"].push_back(row);
  }
  results["total_rows"] = scan.rows.size();
  results["max_ratio"] = scan.max_ratio;
  results["max_ratio_ell"] = scan.max_ratio_ell;
  return {text.str(), make_envelope("elliott-scan", inputs, params, results)};
}

Report report_goldfeld(std::uint64_t ell, const Int& disc, const ReportParams& params) {
  const QuadraticField K = QuadraticField::from_disc(disc);
  const Int star = ell_star(ell);
  const GoldfeldVerdict verdict = goldfeld_check(-star, K, {});
  const bool nprime = nprime_member(ell, K);
  std::ostringstream text;
  text << "Goldfeld membership: ell = " << ell << ", field disc = " << disc << "\n";
  text << "ell_star = " << star << ", N = -ell_star = " << verdict.N << "\n";
  text << "go1 (-N is a fundamental discriminant): " << bool_str(verdict.go1) << "\n";
  text << "go2 (small split primes are non-residues): " << bool_str(verdict.go2) << "\n";
  text << "witnesses:";
  if (verdict.witnesses.empty()) {
    text << " none";
  } else {
    for (const std::uint64_t w : verdict.witnesses) text << " " << w;
  }
  text << "\n";
  text << "member: " << bool_str(verdict.member()) << "\n";
  text << "nprime_member: " << bool_str(nprime)
       << " (agrees: " << bool_str(nprime == verdict.member()) << ")\n";
  text << "constant C2(K): ineffective placeholder (existence only; not computed)\n";
  text << params_footer(params);

  OrderedJson inputs;
  inputs["ell"] = ell;
  inputs["disc"] = fmt_int(disc);
  OrderedJson results;
  results["ell_star"] = fmt_int(star);
  results["go1"] = verdict.go1;
  results["go2"] = verdict.go2;
  results["witnesses"] = verdict.witnesses;
  results["member"] = verdict.member();
  results["nprime_member"] = nprime;
  results["nprime_agrees"] = nprime == verdict.member();
  results["ineffective_constants"] = OrderedJson::array({"C2"});
  return {text.str(), make_envelope("goldfeld", inputs, params, results)};
}

Report report_weil_power(const IntPolynomial& P, unsigned e, const ReportParams& params) {
  const IntPolynomial Q = power_charpoly(P, e);
  std::ostringstream text;
  text << "power characteristic polynomial: P = " << P.to_string() << ", e = " << e << "\n";
  text << "Q = " << Q.to_string() << "\n";
  text << params_footer(params);

  OrderedJson inputs;
  inputs["poly"] = poly_json(P);
  inputs["e"] = e;
  OrderedJson results;
  results["power_poly"] = poly_json(Q);
  return {text.str(), make_envelope("weil power-charpoly", inputs, params, results)};
}

Report report_weil_forcing(const IntPolynomial& P, const Int& q0, unsigned e_lambda,
                           const Int& ell, const ReportParams& params) {
  const Int threshold = a2_threshold({.g = P.degree() / 2, .q0 = q0, .e_lambda = e_lambda});
  const ForcingVerdict verdict = a2_forcing_check(P, q0, e_lambda, ell);
  std::ostringstream text;
  text << "congruence forcing: P = " << P.to_string() << ", q0 = " << q0
       << ", e_lambda = " << e_lambda << ", ell = " << ell << "\n";
  text << "threshold = " << threshold << "\n";
  text << "power polynomial = " << verdict.power_poly.to_string() << "\n";
  if (verdict.forced) {
    text << "verdict: forced, exponents j = (";
    for (std::size_t i = 0; i < verdict.exponents.size(); ++i) {
      if (i > 0) text << ", ";
      text << verdict.exponents[i];
    }
    text << ")\n";
  } else {
    text << "verdict: refuted (no congruent exponent vector exists)\n";
  }
  text << params_footer(params);

  OrderedJson inputs;
  inputs["poly"] = poly_json(P);
  inputs["q0"] = fmt_int(q0);
  inputs["e_lambda"] = e_lambda;
  inputs["ell"] = fmt_int(ell);
  OrderedJson results;
  results["threshold"] = fmt_int(threshold);
  results["power_poly"] = poly_json(verdict.power_poly);
  results["forced"] = verdict.forced;
  results["exponents"] = verdict.exponents;
  return {text.str(), make_envelope("weil forcing", inputs, params, results)};
}

Report report_weil_mazur(unsigned g, const Int& q, unsigned f_odd, const Int& ell,
                         const ReportParams& params) {
  const Certificate cert = mazur_contradiction(g, q, f_odd, ell);
  std::ostringstream text;
  text << "Mazur window certificate: g = " << g << ", q = " << q << ", f = " << f_odd
       << ", ell = " << ell << "\n";
  text << render_certificate(cert);
  text << params_footer(params);

  OrderedJson inputs;
  inputs["g"] = g;
  inputs["q"] = fmt_int(q);
  inputs["f"] = f_odd;
  inputs["ell"] = fmt_int(ell);
  OrderedJson results;
  results["certificate"] = certificate_json(cert);
  return {text.str(), make_envelope("weil mazur", inputs, params, results)};
}

Report report_weil_sixth(unsigned g, const Int& p, const Int& ell,
                         const ReportParams& params) {
  const Certificate cert = sixth_root_analysis(g, p, ell);
  std::ostringstream text;
  text << "sixth-root certificate: g = " << g << ", p = " << p << ", ell = " << ell << "\n";
  text << render_certificate(cert);
  text << params_footer(params);

  OrderedJson inputs;
  inputs["g"] = g;
  inputs["p"] = fmt_int(p);
  inputs["ell"] = fmt_int(ell);
  OrderedJson results;
  results["certificate"] = certificate_json(cert);
  return {text.str(), make_envelope("weil sixth-root", inputs, params, results)};
}

Report report_weil_cubic(const Int& q, const Int& ell, const ReportParams& params) {
  const Certificate cert = cubic_contradiction(q, ell);
  std::ostringstream text;
  text << "cubic residue-degree certificate: q = " << q << ", ell = " << ell << "\n";
  text << render_certificate(cert);
  text << "constant C10: ineffective placeholder (existence only; not computed)\n";
  text << params_footer(params);

  OrderedJson inputs;
  inputs["q"] = fmt_int(q);
  inputs["ell"] = fmt_int(ell);
  OrderedJson results;
  results["certificate"] = certificate_json(cert);
  results["ineffective_constants"] = OrderedJson::array({"C10"});
  return {text.str(), make_envelope("weil cubic", inputs, params, results)};
}

Report report_family(unsigned count, const ReportParams& params) {
  require(count >= 1, "count must be at least 1");
  std::ostringstream text;
  text << "Legendre unit family: count = " << count << "\n";
  OrderedJson members = OrderedJson::array();
  for (unsigned i = 0; i < count; ++i) {
    const QuadRat eps = epsilon(i);
    const UnitConditions conditions = verify_unit_conditions(i);
    const QuadRat j = j_invariant(LegendreCurve::make(eps));
    text << "  i = " << i << ": epsilon = " << eps.to_string() << ", unit conditions = ("
         << bool_str(conditions.eps_unit) << ", " << bool_str(conditions.eps_minus_one_2unit)
         << "), j = " << j.to_string() << "\n";
    OrderedJson member;
    member["i"] = i;
    member["epsilon"] = quadrat_json(eps);
    OrderedJson uc;
    uc["eps_unit"] = conditions.eps_unit;
    uc["eps_minus_one_2unit"] = conditions.eps_minus_one_2unit;
    member["unit_conditions"] = uc;
    member["j"] = quadrat_json(j);
    members.push_back(member);
  }
  const bool distinct = distinct_family_check(count);
  text << "pairwise distinct j-invariants: " << bool_str(distinct) << "\n";
  text << params_footer(params);

  OrderedJson inputs;
  inputs["count"] = count;
  OrderedJson results;
  results["members"] = std::move(members);
  results["distinct"] = distinct;
  return {text.str(), make_envelope("family", inputs, params, results)};
}

}  // namespace avtk
