#include "avtk/weil.hpp"

#include <random>
#include <vector>

#include "avtk/bounds.hpp"
#include "doctest.h"

using avtk::Certificate;
using avtk::Int;
using avtk::IntPolynomial;
using avtk::Rat;
using avtk::WeilConfig;

namespace {

IntPolynomial poly(std::vector<long long> ascending) {
  std::vector<Int> c(ascending.begin(), ascending.end());
  return IntPolynomial::from_coeffs(std::move(c));
}

// Exact determinant by Bareiss fraction-free elimination.
Int det_bareiss(std::vector<std::vector<Int>> a) {
  const std::size_t n = a.size();
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return Int(0);
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return Int(sign) * a[n - 1][n - 1];
}

// Res_x(f, g) via the Sylvester matrix; coefficients ascending.
Int resultant(const std::vector<Int>& f, const std::vector<Int>& g) {
  const std::size_t n = f.size() - 1, m = g.size() - 1;
  std::vector<std::vector<Int>> syl(n + m, std::vector<Int>(n + m, Int(0)));
  for (std::size_t row = 0; row < m; ++row) {
    for (std::size_t i = 0; i <= n; ++i) syl[row][row + i] = f[n - i];
  }
  for (std::size_t row = 0; row < n; ++row) {
    for (std::size_t i = 0; i <= m; ++i) syl[m + row][row + i] = g[m - i];
  }
  return det_bareiss(std::move(syl));
}

// Independent oracle: the charpoly of the e-th powers is
// (-1)^n Res_x(P(x), x^e - t) as a polynomial in t, recovered by exact
// Lagrange interpolation from the values at t = 0..n.
IntPolynomial oracle_power_poly(const IntPolynomial& P, unsigned e) {
  const unsigned n = P.degree();
  std::vector<Rat> acc(n + 1, Rat(0));
  for (unsigned i = 0; i <= n; ++i) {
    std::vector<Int> g(e + 1, Int(0));
    g[e] = 1;
    g[0] = -Int(i);
    Rat value{resultant(P.c, g)};
    if (n % 2 == 1) value = -value;
    // value * prod_{j != i} (t - j) / (i - j), accumulated in coefficient form
    std::vector<Rat> basis{Rat(1)};
    Rat denom{1};
    for (unsigned j = 0; j <= n; ++j) {
      if (j == i) continue;
      std::vector<Rat> next(basis.size() + 1, Rat(0));
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] -= Rat(j) * basis[k];
      }
      basis = std::move(next);
      denom *= Rat(i) - Rat(j);
    }
    for (std::size_t k = 0; k <= n; ++k) acc[k] += value * basis[k] / denom;
  }
  std::vector<Int> out(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    REQUIRE(boost::multiprecision::denominator(acc[k]) == 1);
    out[k] = boost::multiprecision::numerator(acc[k]);
  }
  return IntPolynomial::from_coeffs(std::move(out));
}

Int first_prime_above(const Int& bound) {
  return Int(avtk::next_prime_after(static_cast<std::uint64_t>(bound)));
}

}  // namespace

TEST_CASE("monic polynomial plumbing and printing") {
  CHECK_THROWS_AS(IntPolynomial::from_coeffs({Int(2), Int(3)}), avtk::precondition_error);
  CHECK_THROWS_AS(IntPolynomial::from_coeffs({Int(1)}), avtk::precondition_error);
  CHECK(poly({2, -1, 1}).to_string() == "T^2 - T + 2");
  CHECK(poly({4, 0, 2, 0, 1}).to_string() == "T^4 + 2T^2 + 4");
  CHECK(poly({0, 1}).to_string() == "T");
  CHECK(poly({-3, 1}).to_string() == "T - 3");
}

TEST_CASE("admissibility is the functional equation plus root moduli") {
  CHECK(avtk::weil_admissible(poly({2, -1, 1}), Int(2)));
  CHECK(avtk::weil_admissible(poly({2, 0, 1}), Int(2)));
  CHECK(avtk::weil_admissible(poly({4, 3, 1}), Int(4)));
  CHECK_FALSE(avtk::weil_admissible(poly({2, -5, 1}), Int(2)));   // trace too large
  CHECK_FALSE(avtk::weil_admissible(poly({3, -1, 1}), Int(2)));   // wrong constant term
  CHECK_FALSE(avtk::weil_admissible(poly({0, 0, 1}), Int(2)));    // roots at 0
  CHECK_FALSE(avtk::weil_admissible(poly({2, 0, 0, 1}), Int(2))); // odd degree
  // (T^2 - T + 2)^2 and (T^2 - 2)^2 pass the quartic (numeric) path.
  CHECK(avtk::weil_admissible(poly({4, -4, 5, -2, 1}), Int(2)));
  CHECK(avtk::weil_admissible(poly({4, 0, -4, 0, 1}), Int(2)));
  CHECK(avtk::weil_admissible(poly({4, 0, 0, 0, 1}), Int(2)));  // roots +-1 +- i
  // (T^2 - 2T + 2)(T^2 - 4T + 2) obeys the functional equation but has a
  // root of modulus 2 + sqrt(2).
  CHECK_FALSE(avtk::weil_admissible(poly({4, -12, 12, -6, 1}), Int(2)));
  CHECK_THROWS_AS(avtk::weil_admissible(poly({2, 0, 1}), Int(1)), avtk::precondition_error);
}

TEST_CASE("power sums round-trip through Newton's identities") {
  std::mt19937_64 rng(20260817);
  std::uniform_int_distribution<long long> coeff(-20, 20);
  for (int trial = 0; trial < 200; ++trial) {
    const unsigned degree = 1 + static_cast<unsigned>(rng() % 5);
    std::vector<Int> c(degree + 1);
    for (unsigned i = 0; i < degree; ++i) c[i] = coeff(rng);
    c[degree] = 1;
    const auto P = IntPolynomial::from_coeffs(std::move(c));
    CHECK(avtk::from_power_sums(avtk::power_sums(P, degree), degree) == P);
    CHECK(avtk::power_charpoly(P, 1) == P);
  }
  // Power sums that no integer polynomial produces are rejected.
  CHECK_THROWS_AS(avtk::from_power_sums({Int(1), Int(2)}, 2), std::logic_error);
}

TEST_CASE("power characteristic polynomials match the resultant oracle") {
  CHECK(avtk::power_charpoly(poly({2, -1, 1}), 2) == poly({4, 3, 1}));
  CHECK(avtk::power_charpoly(poly({3, -2, 1}), 3) == oracle_power_poly(poly({3, -2, 1}), 3));

  std::mt19937_64 rng(611);
  std::uniform_int_distribution<long long> coeff(-20, 20);
  std::uniform_int_distribution<unsigned> e_dist(1, 6);
  for (int trial = 0; trial < 500; ++trial) {
    const unsigned degree = (trial % 2 == 0) ? 2 : 4;
    std::vector<Int> c(degree + 1);
    for (unsigned i = 0; i < degree; ++i) c[i] = coeff(rng);
    c[degree] = 1;
    const auto P = IntPolynomial::from_coeffs(std::move(c));
    const unsigned e = e_dist(rng);
    CHECK(avtk::power_charpoly(P, e) == oracle_power_poly(P, e));
    const unsigned a = 1 + static_cast<unsigned>(rng() % 4);
    const unsigned b = 1 + static_cast<unsigned>(rng() % 4);
    CHECK(avtk::power_charpoly(avtk::power_charpoly(P, a), b) ==
          avtk::power_charpoly(P, a * b));
  }
}

TEST_CASE("the congruence forcing lands on the halfway exponent or refutes") {
  // Supersingular T^2 + 2 over F_2: the squares are both -2, never a power
  // of 2, so e_lambda = 2 refutes; the fourth powers are both 4 = q^2.
  const auto super = poly({2, 0, 1});
  const auto v2 = avtk::a2_forcing_check(super, Int(2), 2, Int(23));
  CHECK_FALSE(v2.forced);
  CHECK(v2.power_poly == poly({4, 4, 1}));
  const auto v4 = avtk::a2_forcing_check(super, Int(2), 4, Int(277));
  CHECK(v4.forced);
  CHECK(v4.exponents == std::vector<unsigned>{2, 2});
  CHECK(v4.power_poly == poly({16, -8, 1}));

  // Ordinary T^2 - T + 2 refutes at every admissible power.
  CHECK_FALSE(avtk::a2_forcing_check(poly({2, -1, 1}), Int(2), 2, Int(23)).forced);
  CHECK_FALSE(avtk::a2_forcing_check(poly({2, -1, 1}), Int(2), 4, Int(277)).forced);

  // Abelian-surface versions of the same dichotomy.
  CHECK_FALSE(avtk::a2_forcing_check(poly({4, -4, 5, -2, 1}), Int(2), 2, Int(293)).forced);
  const auto vs = avtk::a2_forcing_check(poly({4, 0, -4, 0, 1}), Int(2), 2, Int(293));
  CHECK(vs.forced);
  CHECK(vs.exponents == std::vector<unsigned>{1, 1, 1, 1});

  CHECK_THROWS_AS(avtk::a2_forcing_check(super, Int(2), 2, Int(19)),
                  avtk::precondition_error);  // below the threshold
  CHECK_THROWS_AS(avtk::a2_forcing_check(poly({2, -3, 1}), Int(2), 2, Int(23)),
                  avtk::precondition_error);  // inadmissible polynomial

  // All elliptic possibilities over F_2 and F_3 at the least safe prime:
  // forcing succeeds exactly when the power polynomial collapses to
  // (T - q^{e/2})^2.
  for (const int q : {2, 3}) {
    for (const unsigned e : {2u, 4u}) {
      const Int ell = first_prime_above(avtk::a2_threshold({.g = 1, .q0 = Int(q), .e_lambda = e}));
      for (long long a = -4; a <= 4; ++a) {
        if (a * a > 4 * q) continue;
        const auto P = poly({q, -a, 1});
        const auto verdict = avtk::a2_forcing_check(P, Int(q), e, ell);
        const Int half = avtk::pow_int(Int(q), e / 2);
        const auto collapsed =
            IntPolynomial::from_coeffs({half * half, Int(-2) * half, Int(1)});
        CHECK(verdict.forced == (verdict.power_poly == collapsed));
        if (verdict.forced) {
          CHECK(verdict.exponents == std::vector<unsigned>{e / 2, e / 2});
        }
      }
    }
  }
}

TEST_CASE("order lcm invariants of the character exponents") {
  const auto v13 = avtk::ExponentVector::make(13, {2, 11});
  CHECK(avtk::mq_from_exponents(v13) == std::pair<std::uint64_t, std::uint64_t>{4, 4});
  const auto v5 = avtk::ExponentVector::make(5, {1, 0});
  CHECK(avtk::mq_from_exponents(v5) == std::pair<std::uint64_t, std::uint64_t>{4, 4});

  for (const std::uint64_t ell : {5ull, 13ull}) {
    for (std::uint64_t i1 = 0; i1 < ell - 1; ++i1) {
      for (std::uint64_t i2 = 0; i2 < ell - 1; ++i2) {
        const auto [m0, m] = avtk::mq_from_exponents(avtk::ExponentVector::make(ell, {i1, i2}));
        CHECK(m0 == m);
        CHECK(avtk::v_p(Int(m), 2) == avtk::v_p(Int(ell - 1), 2));
      }
    }
  }
  for (std::uint64_t i1 = 0; i1 < 4; ++i1) {
    for (std::uint64_t i2 = 0; i2 < 4; ++i2) {
      for (std::uint64_t i3 = 0; i3 < 4; ++i3) {
        for (std::uint64_t i4 = 0; i4 < 4; ++i4) {
          const auto [m0, m] =
              avtk::mq_from_exponents(avtk::ExponentVector::make(5, {i1, i2, i3, i4}));
          CHECK(m0 == m);
        }
      }
    }
  }

  const auto v = avtk::ExponentVector::make(13, {2, 3});
  CHECK(v.within_delta_range(3));
  CHECK_FALSE(v.within_delta_range(4));  // 3 * 4 reaches ell - 1
  CHECK(avtk::ExponentVector::make(13, {14, 2}).i == std::vector<std::uint64_t>{2, 2});
  CHECK_THROWS_AS(avtk::ExponentVector::make(4, {1, 2}), avtk::precondition_error);
  CHECK_THROWS_AS(avtk::ExponentVector::make(13, {1, 2, 3}), avtk::precondition_error);
  CHECK_THROWS_AS(avtk::ExponentVector::make(13, {}), avtk::precondition_error);
}

TEST_CASE("the trace window pins its midpoint") {
  CHECK(avtk::mazur_forced_trace(1, Int(3), Int(17)) == 6);
  CHECK(avtk::mazur_forced_trace(1, Int(2), Int(11)) == 4);
  CHECK(avtk::mazur_forced_trace(2, Int(2), Int(37)) == 8);
  CHECK_THROWS_AS(avtk::mazur_forced_trace(1, Int(5), Int(17)), avtk::precondition_error);
  CHECK_THROWS_AS(avtk::mazur_forced_trace(2, Int(2), Int(13)), avtk::precondition_error);

  // Window property: exactly one integer in [-2gq, 2gq] is congruent to
  // 2gq mod ell, namely 2gq itself.
  for (unsigned g = 1; g <= 3; ++g) {
    for (long long q = 2; q <= 10; ++q) {
      Int ell = first_prime_above(Int(4 * g * q));
      for (int step = 0; step < 3; ++step, ell = first_prime_above(ell)) {
        const Int forced = avtk::mazur_forced_trace(g, Int(q), ell);
        unsigned hits = 0;
        for (Int a = -Int(2 * g * q); a <= Int(2 * g * q); ++a) {
          if ((a - Int(2 * g * q)) % ell == 0) {
            ++hits;
            CHECK(a == forced);
          }
        }
        CHECK(hits == 1);
      }
    }
  }
}

TEST_CASE("odd residue degree certificates end in a failed divisibility") {
  const auto c1 = avtk::mazur_contradiction(1, Int(2), 1, Int(11));
  REQUIRE(c1.steps.size() == 4);
  CHECK(c1.steps[0].holds);
  CHECK(c1.steps[1].holds);
  CHECK(c1.steps[2].holds);
  CHECK(c1.steps[3].claim ==
        "the trivial-order hypothesis requires ell | 4g^2*q, i.e. 11 | 8");
  CHECK_FALSE(c1.steps[3].holds);
  CHECK(c1.contradiction());

  const auto c2 = avtk::mazur_contradiction(1, Int(8), 3, Int(53));
  CHECK(c2.contradiction());
  CHECK(c2.steps[3].claim.find("53 | 32") != std::string::npos);
  const auto c3 = avtk::mazur_contradiction(2, Int(3), 1, Int(97));
  CHECK(c3.contradiction());
  CHECK(c3.steps[3].claim.find("97 | 48") != std::string::npos);

  CHECK_THROWS_AS(avtk::mazur_contradiction(1, Int(4), 2, Int(37)), avtk::precondition_error);
  CHECK_THROWS_AS(avtk::mazur_contradiction(1, Int(6), 1, Int(29)), avtk::precondition_error);
  CHECK_THROWS_AS(avtk::mazur_contradiction(1, Int(2), 3, Int(53)), avtk::precondition_error);
  CHECK_THROWS_AS(avtk::mazur_contradiction(1, Int(2), 1, Int(7)), avtk::precondition_error);
}

TEST_CASE("eigenvalue arrangements know their symmetry and traces") {
  CHECK_THROWS_AS(WeilConfig::make(Int(6), {{2}}), avtk::precondition_error);
  CHECK_THROWS_AS(WeilConfig::make(Int(4), {{1, 1, 1}}), avtk::precondition_error);
  CHECK_THROWS_AS(WeilConfig::make(Int(4), {{}}), avtk::precondition_error);

  // kappa_0 = kappa_3 = 1 in sixth-root indexing: positions 0 and 6.
  std::array<unsigned, 12> pm{};
  pm[0] = pm[6] = 1;
  const auto plus_minus = WeilConfig::make(Int(5), pm);
  CHECK(plus_minus.two_g() == 2);
  CHECK(plus_minus.mu6_supported());
  CHECK(plus_minus.galois_stable());
  CHECK(avtk::trace(plus_minus, 1).is_zero());

  // Fully balanced sixth roots, 2g = 6: the squared traces also vanish.
  std::array<unsigned, 12> balanced{};
  for (unsigned t = 0; t < 12; t += 2) balanced[t] = 1;
  const auto six = WeilConfig::make(Int(5), balanced);
  CHECK(six.galois_stable());
  const auto t2 = avtk::trace(six, 2);
  CHECK(t2.is_zero());
  CHECK(t2.is_rational());

  // Galois-stable arrangements have zero odd traces and integer even traces.
  for (unsigned k0 = 0; k0 <= 2; ++k0) {
    for (unsigned k1 = 0; k1 <= 2; ++k1) {
      if (k0 + 2 * k1 == 0) continue;
      std::array<unsigned, 12> kappa{};
      kappa[0] = kappa[6] = k0;
      kappa[2] = kappa[4] = kappa[8] = kappa[10] = k1;
      const auto cfg = WeilConfig::make(Int(7), kappa);
      CHECK(cfg.galois_stable());
      for (unsigned n = 1; n <= 9; n += 2) CHECK(avtk::trace(cfg, n).is_zero());
      for (unsigned n = 2; n <= 8; n += 2) {
        const auto even = avtk::trace(cfg, n);
        CHECK(even.is_rational());
        CHECK(boost::multiprecision::denominator(even.rational_value()) == 1);
      }
    }
  }

  // A lopsided arrangement is neither stable nor trace-free.
  std::array<unsigned, 12> lopsided{};
  lopsided[0] = 2;
  const auto skew = WeilConfig::make(Int(4), lopsided);
  CHECK_FALSE(skew.galois_stable());
  const auto t1 = avtk::trace(skew, 1);
  CHECK_FALSE(t1.is_zero());
  CHECK(t1.is_rational());  // sqrt(4) = 2 is rational
  CHECK(t1.rational_value() == 4);
  CHECK(avtk::trace(WeilConfig::make(Int(2), lopsided), 1).is_rational() == false);

  // Angular part 2*sqrt(3) against base 3: the product is rational.
  std::array<unsigned, 12> tilted{};
  tilted[1] = 4;
  tilted[9] = 2;
  const auto r3cfg = WeilConfig::make(Int(3), tilted);
  const auto tr = avtk::trace(r3cfg, 1);
  CHECK_FALSE(tr.is_zero());
  CHECK(tr.is_rational());
  CHECK(tr.rational_value() == 6);
  CHECK(avtk::trace(r3cfg, 1).to_string() == "(4z - 2z^3) * sqrt(3)");
}

TEST_CASE("sixth-root certificates balance the eigenvalues before refuting") {
  const auto c1 = avtk::sixth_root_analysis(1, Int(2), Int(103));
  REQUIRE(c1.steps.size() == 4);
  CHECK(c1.contradiction());
  CHECK(c1.steps[0].claim.find("a_6 = 2g*p^3 = 16") != std::string::npos);
  CHECK(c1.steps[2].claim.find("exactly 1 are Galois-stable") != std::string::npos);
  CHECK(c1.steps[3].claim.find("103 | 4") != std::string::npos);
  CHECK_FALSE(c1.steps[3].holds);

  const auto c2 = avtk::sixth_root_analysis(1, Int(3), Int(1009));
  CHECK(c2.contradiction());
  CHECK(c2.steps[3].claim.find("1009 | 6") != std::string::npos);
  const auto c3 = avtk::sixth_root_analysis(2, Int(2), Int(193));
  CHECK(c3.contradiction());
  CHECK(c3.steps[2].claim.find("exactly 2 are Galois-stable") != std::string::npos);
  CHECK(c3.steps[3].claim.find("193 | 8") != std::string::npos);

  CHECK_THROWS_AS(avtk::sixth_root_analysis(1, Int(2), Int(101)),
                  avtk::precondition_error);  // 6 does not divide 100
  CHECK_THROWS_AS(avtk::sixth_root_analysis(1, Int(3), Int(103)),
                  avtk::precondition_error);  // 4 * 27 exceeds 103
  CHECK_THROWS_AS(avtk::sixth_root_analysis(1, Int(4), Int(103)), avtk::precondition_error);
  CHECK_THROWS_AS(avtk::sixth_root_analysis(0, Int(2), Int(103)), avtk::precondition_error);
  CHECK_THROWS_AS(avtk::sixth_root_analysis(17, Int(2), Int(1021)), avtk::precondition_error);
}

TEST_CASE("exact-order-3 certificates collapse onto degree-4 eigenvalues") {
  const auto c1 = avtk::cubic_contradiction(Int(2), Int(13));
  REQUIRE(c1.steps.size() == 4);
  CHECK(c1.contradiction());
  CHECK(c1.steps[0].claim.find("pins a_2 = -2") != std::string::npos);
  CHECK(c1.steps[1].claim.find("T^2 + 2T + 4") != std::string::npos);
  CHECK(c1.steps[2].holds);
  CHECK_FALSE(c1.steps[3].holds);

  CHECK(avtk::cubic_contradiction(Int(8), Int(37)).contradiction());
  CHECK(avtk::cubic_contradiction(Int(3), Int(17)).contradiction());
  CHECK(avtk::cubic_contradiction(Int(2), Int(11)).contradiction());  // no 3 | ell - 1 needed

  CHECK_THROWS_AS(avtk::cubic_contradiction(Int(4), Int(37)),
                  avtk::precondition_error);  // square q
  CHECK_THROWS_AS(avtk::cubic_contradiction(Int(6), Int(37)), avtk::precondition_error);
  CHECK_THROWS_AS(avtk::cubic_contradiction(Int(2), Int(7)), avtk::precondition_error);
}
