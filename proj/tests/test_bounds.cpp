#include "avtk/bounds.hpp"

#include <cmath>
#include <random>

#include "avtk/group_orders.hpp"
#include "avtk/lambert.hpp"
#include "doctest.h"

using avtk::A2Input;
using avtk::ChebParams;
using avtk::Int;

namespace {

// Oracle for the true threshold: bisect (ell/4g)^(1/n) - C3 (C4 + C5 log ell)^2
// upward from the scaled minimum of the reduced single-log form.
double threshold_by_bisection(const ChebParams& params) {
  const auto [c4, c5] = avtk::c4_c5(params);
  const double c5d = c5.convert_to<double>();
  const auto h = [&](double ell) {
    return std::pow(ell / (4.0 * params.g), 1.0 / params.n) -
           params.c3 * std::pow(c4 + c5d * std::log(ell), 2.0);
  };
  const double scale = 4.0 * params.g * std::pow(params.c3, static_cast<double>(params.n)) *
                       std::pow(c5d, 2.0 * params.n);
  double lo = scale * std::pow(2.0 * params.n, 2.0 * params.n);  // h <= 0 here
  double hi = 2.0 * lo;
  while (h(hi) <= 0.0) hi *= 2.0;
  for (int i = 0; i < 500 && hi - lo > 1e-12 * lo; ++i) {
    const double mid = 0.5 * (lo + hi);
    (h(mid) <= 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("the paired constants track the residue order and field degree") {
  CHECK(avtk::c4_c5({1.0, 100.0, 1, 1, 1, 5}) == std::pair<double, Int>{100.0, 1});
  CHECK(avtk::c4_c5({1.0, 0.0, 2, 1, 1, 2}) == std::pair<double, Int>{0.0, 2});
  CHECK(avtk::c4_c5({1.0, 3.0, 4, 1, 1, 3}) == std::pair<double, Int>{12.0, 18});
  CHECK_THROWS_AS(avtk::c4_c5({0.5, 0.0, 1, 1, 1, 1}), avtk::precondition_error);
  CHECK_THROWS_AS(avtk::c4_c5({1.0, -1.0, 1, 1, 1, 1}), avtk::precondition_error);
}

TEST_CASE("the trace-window threshold maximizes over all binomial terms") {
  CHECK(avtk::a2_threshold({1, 2, 4}) == 272);
  CHECK(avtk::a2_threshold({1, 2, 2}) == 20);
  // k = 3 gives binom(4,3)(2^6 + 2^3) = 288, beating the k = 4 term 272.
  CHECK(avtk::a2_threshold({2, 2, 2}) == 288);
  // Odd exponents round the half power up: k=1 term 2*(2 + ceil(sqrt 2)) = 8.
  CHECK(avtk::a2_threshold({1, 2, 1}) == 8);
  for (unsigned g = 1; g <= 4; ++g) {
    for (unsigned e = 1; e <= 4; ++e) {
      CHECK(avtk::a2_threshold({g, 2, e}) > 2 * g + 1);
    }
  }
  // A perfect-square field size keeps odd half powers exact: 4^(3/2) = 8.
  CHECK(avtk::a2_threshold({1, 4, 3}) == avtk::binomial(2, 2) * (avtk::pow_int(Int(4), 6) + 64));
  CHECK_THROWS_AS(avtk::a2_threshold({1, 1, 1}), avtk::precondition_error);
}

TEST_CASE("the tower constant is exact at small exponents and logged beyond") {
  const auto small = avtk::c7(1, 1);
  REQUIRE(small.exact.has_value());
  CHECK(*small.exact == 4 * avtk::pow_int(Int(3), 96));
  CHECK(small.log10_value() == doctest::Approx(46.41).epsilon(1e-3));
  const auto wider = avtk::c7(1, 2);
  REQUIRE(wider.exact.has_value());  // exponent 384 is still small
  CHECK(wider.log10_value() == doctest::Approx(183.8).epsilon(1e-3));
  const auto huge = avtk::c7(4, 1);
  CHECK_FALSE(huge.exact.has_value());  // exponent ~1.8e11
  CHECK(huge.log10_value() == doctest::Approx(8.5e10).epsilon(1e-2));
}

TEST_CASE("the gap constant and its inequality agree exactly") {
  CHECK(avtk::c1(1, 1, 0.1, 1.0) == doctest::Approx(std::pow(4.0, 4.0 / 3.6)).epsilon(1e-12));
  CHECK(avtk::c1(1, 1, 0.1, 1.0) == doctest::Approx(4.66).epsilon(1e-2));
  CHECK(avtk::c1(4, 1, 0.1, 1.0) == doctest::Approx(10321.0).epsilon(1e-3));
  CHECK_THROWS_AS(avtk::c1(5, 1, 0.1, 1.0), avtk::precondition_error);
  CHECK_THROWS_AS(avtk::c1(2, 1, 0.25, 1.0), avtk::precondition_error);

  const Int big = Int(static_cast<long long>(std::ceil(avtk::c1(2, 1, 0.1, 1.0)))) + 10'000;
  CHECK(avtk::c1_gap_inequality(big, 2, 1, 0.1, 1.0));

  std::mt19937_64 rng(611);
  for (int trial = 0; trial < 500; ++trial) {
    const unsigned m = 1 + rng() % 4;
    const unsigned g = 1 + rng() % 4;
    const double eps = 0.01 + 0.23 * (rng() % 1000) / 1000.0;
    const double c1p = 0.5 + (rng() % 100) / 10.0;
    const double threshold = avtk::c1(m, g, eps, c1p);
    const Int ell = 2 + Int(rng() % 1'000'000);
    const double ell_d = ell.convert_to<double>();
    if (std::abs(ell_d - threshold) < 1e-6 * threshold) continue;  // skip the knife edge
    CHECK(avtk::c1_gap_inequality(ell, m, g, eps, c1p) == (ell_d > threshold));
  }
}

TEST_CASE("the closed bound dominates the true crossing everywhere sampled") {
  const ChebParams base{1.0, 0.0, 1, 1, 1, 1};
  const auto simplest = avtk::corollary_bound(base);
  REQUIRE(simplest.exact.has_value());
  CHECK(*simplest.exact == 256);
  CHECK(avtk::crossing_ell(base) == doctest::Approx(74.2).epsilon(1e-3));

  ChebParams shifted = base;
  shifted.log_disc = 1.0;  // C4 = 1, C5 = 1
  const auto scaled = avtk::corollary_bound(shifted);
  CHECK_FALSE(scaled.exact.has_value());
  CHECK(scaled.log_e == doctest::Approx(std::log(256.0) + 1.0).epsilon(1e-12));

  std::mt19937_64 rng(20260817);
  for (int trial = 0; trial < 100; ++trial) {
    ChebParams p;
    p.c3 = 1.0 + 9.0 * (rng() % 1000) / 1000.0;
    p.log_disc = 20.0 * (rng() % 1000) / 1000.0;
    p.m = 2 + rng() % 24;  // keeps C5 = (m-1) n_K! within the draw plan
    p.g = 1 + rng() % 4;
    p.n = 1 + rng() % 3;
    p.n_K = 1;
    const double crossing = avtk::crossing_ell(p);
    const double oracle = threshold_by_bisection(p);
    CHECK(crossing == doctest::Approx(oracle).epsilon(1e-8));
    CHECK(avtk::corollary_bound(p).log_e >= std::log(crossing) - 1e-9);
  }
}

TEST_CASE("the composite threshold takes the larger of its two sources") {
  const ChebParams p{1.0, 0.0, 2, 1, 1, 1};
  const auto small_prime = avtk::c6(p, Int(2));
  REQUIRE(small_prime.exact.has_value());
  CHECK(*small_prime.exact == 256);
  const auto large_prime = avtk::c6(p, Int(1'000'000));
  REQUIRE(large_prime.exact.has_value());
  CHECK(*large_prime.exact == 1'000'000);
  CHECK_THROWS_AS(avtk::c6({1.0, 0.0, 1, 1, 1, 1}, Int(2)), avtk::precondition_error);

  ChebParams composed{1.0, 2.0, 2, 1, 1, 2};
  const auto bound = avtk::c6(composed, Int(3));
  CHECK(bound.log_e >= std::log(avtk::crossing_ell(composed)) - 1e-9);
}

TEST_CASE("the uniform threshold maximizes over the stated divisor set") {
  const auto set_q = avtk::n_uniform_divisors(1, 1, 1);
  CHECK(set_q.size() == avtk::divisors(Int(24)).size());
  CHECK(set_q.front() == 1);
  CHECK(set_q.back() == 24);
  const auto set_cubic = avtk::n_uniform_divisors(1, 3, 1);
  CHECK(set_cubic.back() == 72);

  const ChebParams field{1.0, 0.0, 1, 1, 1, 1};
  const auto n_q = avtk::n_uniform(1, 1, 1, field, Int(1));
  const auto dominant = avtk::c7(1, 1);
  CHECK_FALSE(avtk::definitely_less(n_q, dominant));
  CHECK_FALSE(avtk::definitely_less(dominant, n_q));  // the tower constant dominates

  ChebParams quad_field{1.0, std::log(5.0), 1, 1, 1, 2};
  const auto n_quad = avtk::n_uniform(1, 1, 2, quad_field, Int(5));
  CHECK(n_quad.log_e >= avtk::c7(1, 2).log_e - 1e-9);
}

TEST_CASE("the bottom field size bound depends only on the residue prime") {
  CHECK(avtk::q0_bound(1, true) == 3);
  CHECK(avtk::q0_bound(1, false) == 2);
  CHECK(avtk::q0_bound(3, false) == 8);
  CHECK(avtk::q0_bound(4, true) == 81);
  CHECK_THROWS_AS(avtk::q0_bound(0, true), avtk::precondition_error);
}

TEST_CASE("the isogeny threshold is dominated by the tower constant at unit scale") {
  for (unsigned g = 1; g <= 4; ++g) {
    for (double eps : {0.01, 0.05, 0.07}) {
      const auto value = avtk::c8(g, eps, 1.0);
      const auto tower = avtk::c7(g, 1);
      CHECK(value.log_e == doctest::Approx(tower.log_e).epsilon(1e-12));
    }
  }
  // Close to the eps ceiling the final term blows up past the tower constant:
  // at g = 1, eps = 0.08 it is 4^100 against 4 * 3^96.
  CHECK(avtk::c8(1, 0.08, 1.0).log_e == doctest::Approx(100.0 * std::log(4.0)).epsilon(1e-12));
  // (g=1, eps=0.05, c1' = 1000): the quartic-in-c1' term reaches (4e9)^10.
  const auto big = avtk::c8(1, 0.05, 1000.0);
  CHECK(big.log_e >= 10.0 * std::log(4e9) - 1e-6);
  // Monotone nondecreasing in c1_prime.
  double prev = 0.0;
  for (double c1p : {1.0, 10.0, 100.0, 1000.0, 1e6}) {
    const double cur = avtk::c8(2, 0.07, c1p).log_e;
    CHECK(cur >= prev - 1e-12);
    prev = cur;
  }
  CHECK_THROWS_AS(avtk::c8(1, 1.0 / 12.0, 1.0), avtk::precondition_error);
  CHECK_THROWS_AS(avtk::c8(1, 0.0, 1.0), avtk::precondition_error);
}
