#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"

#include "avtk/bounds.hpp"
#include "avtk/profiles.hpp"
#include "avtk/quadratic_family.hpp"
#include "avtk/residues.hpp"
#include "avtk/weil.hpp"

namespace avtk {

inline constexpr const char* kToolVersion = "0.1.0";

using OrderedJson = nlohmann::ordered_json;

// Runtime knobs recorded in every report. c3 and c1prime parameterize the
// bounds that depend on otherwise unspecified constants; every envelope and
// every text report carries them so results are conditional on record.
struct ReportParams {
  double c3 = 1.0;
  double c1prime = 1.0;
  std::optional<std::uint64_t> seed;
};

// One subcommand's output: the human-readable block (newline-terminated)
// and the machine envelope with deterministic field order
// command, inputs, parameters, results, version.
struct Report {
  std::string text;
  OrderedJson envelope;
};

OrderedJson make_envelope(const std::string& command, OrderedJson inputs,
                          const ReportParams& params, OrderedJson results);

// Shared scalar renderings: doubles print with 15 significant digits,
// big integers and rationals in decimal.
std::string fmt_double(double x);
std::string fmt_int(const Int& n);
std::string fmt_rat(const Rat& r);
OrderedJson magnitude_json(const Magnitude& m);
OrderedJson congruence_json(const CongruenceClass& c);
OrderedJson certificate_json(const Certificate& cert);
std::string render_certificate(const Certificate& cert);

Report report_mprime(unsigned n, const ReportParams& params);
Report report_decomp(unsigned g, const FieldContext& ctx, const ReportParams& params);
Report report_table_g4(const ReportParams& params);
Report report_threshold(unsigned g, const Int& q0, unsigned e_lambda,
                        const ReportParams& params);
Report report_bounds_c7(unsigned g, unsigned n_K, const ReportParams& params);
Report report_bounds_c6(const ChebParams& cheb, const Int& ell_prime,
                        const ReportParams& params);
Report report_bounds_c8(unsigned g, double eps, const ReportParams& params);
Report report_bounds_n_uniform(unsigned g, unsigned n, unsigned n_F,
                               const ChebParams& field_params, const Int& ell_prime,
                               const ReportParams& params);
Report report_lambertw(double x, const ReportParams& params);
Report report_x0(double c, double N, const ReportParams& params);
Report report_residue(std::uint64_t m, std::uint64_t ell, const ReportParams& params);
Report report_elliott(unsigned m, std::uint64_t lo, std::uint64_t hi, double eps,
                      std::uint64_t limit, const ReportParams& params);
Report report_goldfeld(std::uint64_t ell, const Int& disc, const ReportParams& params);
Report report_weil_power(const IntPolynomial& P, unsigned e, const ReportParams& params);
Report report_weil_forcing(const IntPolynomial& P, const Int& q0, unsigned e_lambda,
                           const Int& ell, const ReportParams& params);
Report report_weil_mazur(unsigned g, const Int& q, unsigned f_odd, const Int& ell,
                         const ReportParams& params);
Report report_weil_sixth(unsigned g, const Int& p, const Int& ell,
                         const ReportParams& params);
Report report_weil_cubic(const Int& q, const Int& ell, const ReportParams& params);
Report report_family(unsigned count, const ReportParams& params);

}  // namespace avtk
