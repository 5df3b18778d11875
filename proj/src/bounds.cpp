#include "avtk/bounds.hpp"

#include <cmath>
#include <limits>

#include "avtk/group_orders.hpp"
#include "avtk/lambert.hpp"

namespace avtk {

void ChebParams::validate() const {
  require(c3 >= 1.0, "ChebParams requires c3 >= 1");
  require(log_disc >= 0.0, "ChebParams requires log_disc >= 0");
  require(m >= 1 && g >= 1 && n >= 1 && n_K >= 1, "ChebParams requires m, g, n, n_K >= 1");
}

std::pair<double, Int> c4_c5(const ChebParams& params) {
  params.validate();
  const double c4 = static_cast<double>(params.m) * params.log_disc;
  Int c5 = Int(params.m - 1) * factorial(params.n_K);
  if (c5 < 1) c5 = 1;
  return {c4, c5};
}

void A2Input::validate() const {
  require(g >= 1, "A2Input requires g >= 1");
  require(q0 >= 2, "A2Input requires q0 >= 2");
  require(e_lambda >= 1, "A2Input requires e_lambda >= 1");
}

Int a2_threshold(const A2Input& inp) {
  inp.validate();
  Int best = 0;
  for (unsigned k = 1; k <= 2 * inp.g; ++k) {
    const unsigned long exponent = static_cast<unsigned long>(inp.e_lambda) * k;
    const Int whole = pow_int(inp.q0, exponent);
    Int half;
    if (exponent % 2 == 0) {
      half = pow_int(inp.q0, exponent / 2);
    } else {
      const Int root = isqrt_floor(whole);
      half = root * root == whole ? root : root + 1;  // ceiling is sound for a lower threshold
    }
    const Int term = binomial(2 * inp.g, k) * (whole + half);
    if (term > best) best = term;
  }
  return best;
}

Magnitude c7(unsigned g, unsigned n_K) {
  require(g >= 1 && n_K >= 1, "c7 requires g, n_K >= 1");
  const Int exponent = Int(2) * g * n_K * n_K * m_prime(2 * g).value;
  const Int front = 2 * binomial(2 * g, g);
  const double log_e = log_int(front) + exponent.convert_to<double>() * std::log(3.0);
  if (exponent <= 10'000) {
    auto result = Magnitude::from_exact(front * pow_int(Int(3), exponent.convert_to<unsigned long>()));
    return result;
  }
  return Magnitude::from_log(log_e);
}

double c1(unsigned m, unsigned g, double eps, double c1_prime) {
  require(m >= 1 && m <= 4, "c1 requires 1 <= m <= 4");
  require(g >= 1, "c1 requires g >= 1");
  require(eps > 0.0 && eps < 0.25, "c1 requires 0 < eps < 1/4");
  require(c1_prime > 0.0, "c1 requires c1_prime > 0");
  const double exponent = 4.0 / ((5.0 - m) - 4.0 * eps);
  return std::pow(4.0 * g * c1_prime, exponent);
}

bool c1_gap_inequality(const Int& ell, unsigned m, unsigned g, double eps, double c1_prime) {
  require(ell >= 2, "c1_gap_inequality requires ell >= 2");
  require(m >= 1 && m <= 4, "c1_gap_inequality requires 1 <= m <= 4");
  require(g >= 1, "c1_gap_inequality requires g >= 1");
  require(eps > 0.0 && eps < 0.25, "c1_gap_inequality requires 0 < eps < 1/4");
  require(c1_prime > 0.0, "c1_gap_inequality requires c1_prime > 0");
  const double log_ell = log_int(ell);
  const double lhs = std::log(c1_prime) + ((m - 1.0) / 4.0 + eps) * log_ell;
  const double rhs = log_ell - std::log(4.0 * g);
  return lhs < rhs;
}

Magnitude corollary_bound(const ChebParams& params) {
  const auto [c4, c5] = c4_c5(params);
  const unsigned n = params.n;
  const double log_e = std::log(16.0) + 2.0 * std::log(static_cast<double>(params.g)) +
                       2.0 * n * std::log(params.c3) + 4.0 * n * log_int(c5) +
                       4.0 * n * std::log(2.0 * n) + c4 / c5.convert_to<double>();
  if (c4 == 0.0 && params.c3 == std::floor(params.c3) && params.c3 <= 1e15) {
    const Int c3_int = Int(static_cast<long long>(params.c3));
    const Int exact = Int(16) * params.g * params.g * pow_int(c3_int, 2 * n) * pow_int(c5, 4 * n) *
                      pow_int(Int(2) * n, 4 * n);
    return Magnitude::from_exact(exact);
  }
  return Magnitude::from_log(log_e);
}

double crossing_ell(const ChebParams& params) {
  const auto [c4, c5] = c4_c5(params);
  const unsigned n = params.n;
  const double scale = 4.0 * params.g * std::pow(params.c3, static_cast<double>(n)) *
                       std::pow(c5.convert_to<double>(), 2.0 * n);
  const double c = scale * std::exp(c4 / c5.convert_to<double>());
  require(std::isfinite(c), "crossing_ell requires parameters within floating range");
  return scale * x0_crossing(c, 2.0 * n);
}

Magnitude c6(const ChebParams& params, const Int& ell_prime) {
  params.validate();
  require(!(params.m == 1 && params.n_K == 1), "c6 rejects m = 1 over a degree-1 field");
  require(ell_prime >= 1, "c6 requires ell_prime >= 1");
  return max_magnitude(Magnitude::from_exact(ell_prime), corollary_bound(params));
}

std::vector<Int> n_uniform_divisors(unsigned g, unsigned n, unsigned n_F) {
  require(g >= 1 && n >= 1 && n_F >= 1, "n_uniform_divisors requires g, n, n_F >= 1");
  return divisors(m_prime(2 * g).value / 2 * n_F * n);
}

Magnitude n_uniform(unsigned g, unsigned n, unsigned n_F, const ChebParams& field_params,
                    const Int& ell_prime) {
  Magnitude best = c7(g, n_F * n);
  for (const Int& m : n_uniform_divisors(g, n, n_F)) {
    Magnitude term;
    if (m == 1 && n_F == 1) {
      term = Magnitude::from_exact(Int(4) * g * pow_int(Int(2), n));
    } else {
      require(m <= Int(std::numeric_limits<std::uint64_t>::max()),
              "n_uniform divisor exceeds the 64-bit range");
      ChebParams params = field_params;
      params.m = m.convert_to<std::uint64_t>();
      params.g = g;
      params.n = n;
      params.n_K = n_F;
      term = c6(params, ell_prime);
    }
    best = max_magnitude(best, term);
  }
  return best;
}

Int q0_bound(unsigned n_K, bool ell_is_2) {
  require(n_K >= 1, "q0_bound requires n_K >= 1");
  return pow_int(Int(ell_is_2 ? 3 : 2), n_K);
}

Magnitude c8(unsigned g, double eps, double c1_prime) {
  require(g >= 1, "c8 requires g >= 1");
  require(eps > 0.0 && eps < 1.0 / 12.0, "c8 requires 0 < eps < 1/12");
  require(c1_prime > 0.0, "c8 requires c1_prime > 0");
  Magnitude best = c7(g, 1);
  best = max_magnitude(best, Magnitude::from_log(std::log(c1(2, g, eps, c1_prime))));
  best = max_magnitude(best, Magnitude::from_log(std::log(c1(4, g, eps, c1_prime))));
  const double fourth =
      4.0 / (1.0 - 12.0 * eps) * std::log(4.0 * g * c1_prime * c1_prime * c1_prime);
  return max_magnitude(best, Magnitude::from_log(fourth));
}

}  // namespace avtk
