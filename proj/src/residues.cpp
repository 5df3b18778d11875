#include "avtk/residues.hpp"

#include <cmath>

#include "avtk/congruences.hpp"

namespace avtk {

bool is_fundamental_discriminant(const Int& D) {
  require(D != 0 && D != 1, "is_fundamental_discriminant rejects 0 and 1");
  const Int mod4 = ((D % 4) + 4) % 4;
  if (mod4 == 1) return is_squarefree(D < 0 ? -D : D);
  if (mod4 != 0) return false;
  const Int m = D / 4;
  const Int m_mod4 = ((m % 4) + 4) % 4;
  if (m_mod4 != 2 && m_mod4 != 3) return false;
  return is_squarefree(m < 0 ? -m : m);
}

QuadraticField QuadraticField::from_disc(const Int& disc) {
  QuadraticField K{disc};
  K.validate();
  return K;
}

void QuadraticField::validate() const {
  require(is_fundamental_discriminant(disc), "QuadraticField requires a fundamental discriminant");
}

SplitType splitting_in(const QuadraticField& K, std::uint64_t p) {
  require(is_prime(p), "splitting_in requires p prime");
  const int symbol = kronecker(K.disc, Int(p));
  if (symbol == 1) return SplitType::split;
  if (symbol == -1) return SplitType::inert;
  return SplitType::ramified;
}

GoldfeldVerdict goldfeld_check(const Int& N, const QuadraticField& K,
                               const std::set<std::uint64_t>& S) {
  K.validate();
  const Int abs_N = N < 0 ? -N : N;
  require(abs_N >= 3, "goldfeld_check requires |N| >= 3");
  require(abs_N <= 400'000'000, "goldfeld_check scan guard: |N| <= 4e8");
  GoldfeldVerdict verdict;
  verdict.N = N;
  verdict.go1 = is_fundamental_discriminant(-N);
  verdict.go2 = true;
  const std::uint64_t p_max = (abs_N.convert_to<std::uint64_t>() - 1) / 4;  // p < |N|/4
  for (std::uint64_t p : primes_up_to(p_max)) {
    if (S.contains(p)) continue;
    if (splitting_in(K, p) != SplitType::split) continue;
    if (kronecker(-N, Int(p)) == 1) {
      verdict.go2 = false;
      verdict.witnesses.push_back(p);
    }
  }
  return verdict;
}

Int ell_star(std::uint64_t ell) {
  require(ell >= 3 && ell % 2 == 1 && is_prime(ell), "ell_star requires an odd prime");
  return ell % 4 == 1 ? Int(ell) : -Int(ell);
}

bool nprime_member(std::uint64_t ell, const QuadraticField& K) {
  require(ell >= 3 && ell % 2 == 1 && is_prime(ell), "nprime_member requires an odd prime");
  K.validate();
  for (std::uint64_t p : primes_up_to((ell - 1) / 4)) {  // p < ell/4
    if (splitting_in(K, p) != SplitType::split) continue;
    if (mod_pow(p, (ell - 1) / 2, ell) == 1) return false;  // Euler: (p | ell) = 1
  }
  return true;
}

ElliottScan elliott_scan(unsigned m, std::uint64_t lo, std::uint64_t hi, double eps) {
  require(m >= 1 && m <= 8, "elliott_scan requires 1 <= m <= 8");
  require(lo <= hi, "elliott_scan requires lo <= hi");
  require(hi <= 1'000'000, "elliott_scan range guard: hi <= 1e6");
  require(eps > 0.0, "elliott_scan requires eps > 0");
  ElliottScan scan;
  scan.m = m;
  scan.eps = eps;
  const double exponent = (m - 1.0) / 4.0 + eps;
  for (std::uint64_t ell : primes_up_to(hi)) {
    if (ell < lo || ell < 3) continue;
    const std::uint64_t p_min = smallest_prime_mth_residue(m, ell);
    const double ratio = p_min / std::pow(static_cast<double>(ell), exponent);
    scan.rows.push_back({ell, p_min, ratio});
    if (ratio > scan.max_ratio) {
      scan.max_ratio = ratio;
      scan.max_ratio_ell = ell;
    }
  }
  return scan;
}

}  // namespace avtk
