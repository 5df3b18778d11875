#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "avtk/integers.hpp"
#include "avtk/magnitude.hpp"

namespace avtk {

// Parameter block for the Chebotarev-style explicit estimates: the scaling
// constant c3 >= 1, the log-discriminant of the relevant field, the residue
// order m, the dimension g, and the field degrees n and n_K.
struct ChebParams {
  double c3 = 1.0;
  double log_disc = 0.0;
  std::uint64_t m = 1;
  unsigned g = 1;
  unsigned n = 1;
  unsigned n_K = 1;

  void validate() const;
};

// C4 = m * log_disc and C5 = max{1, (m - 1) * n_K!}.
std::pair<double, Int> c4_c5(const ChebParams& params);

// Input block for the trace-window threshold: dimension g, minimal field
// size q0 >= 2, and eigenvalue exponent e_lambda >= 1.
struct A2Input {
  unsigned g = 1;
  Int q0 = 2;
  unsigned e_lambda = 1;

  void validate() const;
};

// Exact max over 1 <= k <= 2g of binom(2g, k) * (q0^(e_lambda k) + h) where
// h is q0^(e_lambda k / 2) for even exponents and its exact-or-ceiling value
// otherwise; rounding up keeps the threshold an upper bound.
Int a2_threshold(const A2Input& inp);

// C7 = 2 * binom(2g, g) * 3^(2 g n_K^2 M'(2g)); exact when the exponent
// stays at most 10^4, log magnitude always.
Magnitude c7(unsigned g, unsigned n_K);

// C1 = (4 g c1_prime)^(4 / ((5 - m) - 4 eps)) for 1 <= m <= 4, 0 < eps < 1/4.
double c1(unsigned m, unsigned g, double eps, double c1_prime);

// Whether c1_prime * ell^((m-1)/4 + eps) < ell / (4g); holds exactly when
// ell > c1(m, g, eps, c1_prime).
bool c1_gap_inequality(const Int& ell, unsigned m, unsigned g, double eps, double c1_prime);

// 16 g^2 C3^(2n) C5^(4n) (2n)^(4n) exp(C4 / C5); exact when C4 = 0 and C3
// is integral, log magnitude always.
Magnitude corollary_bound(const ChebParams& params);

// The true threshold the closed bound dominates: the final crossing of
// (ell / 4g)^(1/n) = C3 (C4 + C5 log ell)^2, via the x0 machinery with
// N = 2n and c = 4 g C3^n C5^(2n) exp(C4 / C5).
double crossing_ell(const ChebParams& params);

// C6 = max{ell_prime, corollary_bound}; the combination m = 1 with a degree-1
// base field is rejected. ell_prime is the largest prime divisor of the field
// discriminant (1 when there is none).
Magnitude c6(const ChebParams& params, const Int& ell_prime);

// The divisor set over which the uniform threshold maximizes:
// divisors of (1/2) M'(2g) * n_F * n.
std::vector<Int> n_uniform_divisors(unsigned g, unsigned n, unsigned n_F);

// max{ max_m C6(m, ...), C7(g, n_F n) } over that divisor set, with the
// degree-1 base and m = 1 contributing the exact term 4g * 2^n instead.
Magnitude n_uniform(unsigned g, unsigned n, unsigned n_F, const ChebParams& field_params,
                    const Int& ell_prime);

// Largest field size forced at the bottom of the tower: 3^n_K when ell = 2,
// otherwise 2^n_K.
Int q0_bound(unsigned n_K, bool ell_is_2);

// C8 = max{C7(g,1), C1(2,g,eps), C1(4,g,eps), (4 g c1_prime^3)^(4/(1-12 eps))}
// for 0 < eps < 1/12, compared through log magnitudes.
Magnitude c8(unsigned g, double eps, double c1_prime);

}  // namespace avtk
