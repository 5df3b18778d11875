#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "avtk/integers.hpp"

namespace avtk {

// True iff D is the discriminant of a quadratic field: D = 1 (mod 4) and
// squarefree, or D = 4m with m = 2, 3 (mod 4) squarefree. Rejects 0 and 1.
bool is_fundamental_discriminant(const Int& D);

struct QuadraticField {
  Int disc;  // fundamental discriminant, never 0 or 1

  static QuadraticField from_disc(const Int& disc);
  void validate() const;
};

enum class SplitType { split, inert, ramified };

// Factorization type of p in the quadratic field, read off the Kronecker
// symbol (disc | p): +1 split, -1 inert, 0 ramified.
SplitType splitting_in(const QuadraticField& K, std::uint64_t p);

// Outcome of the two membership conditions for -N against the field K:
// go1 is the discriminant condition on -N, go2 the non-split condition on
// small primes, with every violating prime collected.
struct GoldfeldVerdict {
  Int N;
  bool go1 = false;
  bool go2 = false;
  std::vector<std::uint64_t> witnesses;

  bool member() const { return go1 && go2; }
};

// go1: -N is a fundamental discriminant. go2: every prime p < |N|/4 outside
// S that splits in K has Kronecker (-N | p) != 1. Requires |N| >= 3.
GoldfeldVerdict goldfeld_check(const Int& N, const QuadraticField& K,
                               const std::set<std::uint64_t>& S);

// (-1)^((ell-1)/2) * ell for an odd prime: ell when ell = 1 (mod 4),
// -ell when ell = 3 (mod 4). Always = 1 (mod 4).
Int ell_star(std::uint64_t ell);

// True iff every prime p < ell/4 that splits in K is a quadratic
// non-residue mod ell. Agrees with goldfeld_check(-ell_star, K, {}) by
// quadratic reciprocity.
bool nprime_member(std::uint64_t ell, const QuadraticField& K);

struct ElliottRow {
  std::uint64_t ell;
  std::uint64_t p_min;
  double ratio;
};

struct ElliottScan {
  unsigned m;
  double eps;
  std::vector<ElliottRow> rows;
  double max_ratio = 0.0;
  std::uint64_t max_ratio_ell = 0;
};

// For each prime ell in [lo, hi] (from 3 up), p_min is the smallest prime
// m-th power residue mod ell and ratio = p_min / ell^((m-1)/4 + eps); the
// running maximum is an empirical floor for the gap constant. m <= 8,
// hi <= 10^6.
ElliottScan elliott_scan(unsigned m, std::uint64_t lo, std::uint64_t hi, double eps);

}  // namespace avtk
