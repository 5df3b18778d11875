#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "avtk/cyclotomic.hpp"
#include "avtk/integers.hpp"

namespace avtk {

// Monic integer polynomial; c[i] multiplies T^i and c.back() == 1.
struct IntPolynomial {
  std::vector<Int> c;

  static IntPolynomial from_coeffs(std::vector<Int> coeffs);
  unsigned degree() const { return static_cast<unsigned>(c.size()) - 1; }
  bool operator==(const IntPolynomial&) const = default;
  std::string to_string() const;  // e.g. "T^2 - T + 2"
};

// True iff P has even degree, satisfies the functional equation
// c_i = q^{g-i} c_{2g-i}, and all complex roots have modulus sqrt(q)
// (exact for degree 2, numeric with relative tolerance 1e-6 above).
bool weil_admissible(const IntPolynomial& P, const Int& q);

// Power sums p_1..p_count of the roots, by Newton's identities; exact.
std::vector<Int> power_sums(const IntPolynomial& P, unsigned count);

// Monic degree-n polynomial with the given root power sums p_1..p_n.
// Throws logic_error if the implied coefficients are not integers.
IntPolynomial from_power_sums(const std::vector<Int>& sums, unsigned degree);

// Characteristic polynomial of the e-th power of the root multiset.
IntPolynomial power_charpoly(const IntPolynomial& P, unsigned e);

// Result of the congruence-forcing search over exponent vectors.
struct ForcingVerdict {
  bool forced = false;
  std::vector<unsigned> exponents;  // the unique matching j-vector when forced
  IntPolynomial power_poly;         // charpoly of the e_lambda-th power action
};

// Searches nondecreasing j in [0, e_lambda]^{2g} whose power multiset
// {q0^{j_r}} matches the e_lambda-th power charpoly of P coefficientwise
// mod ell.  Above the threshold any match is unique, holds with equality
// over the integers, and has every j_r = e_lambda / 2; these consequences
// are verified and a violation throws logic_error.
ForcingVerdict a2_forcing_check(const IntPolynomial& P, const Int& q0,
                                unsigned e_lambda, const Int& ell);

// Exponent vector of a mod-ell character tuple; entries reduced mod ell-1.
struct ExponentVector {
  std::uint64_t ell = 0;
  std::vector<std::uint64_t> i;

  static ExponentVector make(std::uint64_t ell, std::vector<std::uint64_t> i);
  // Every entry below (ell-1)/delta.
  bool within_delta_range(std::uint64_t delta) const;
};

// (m0, m): lcm of the orders of chi^{2 i_r - 1}, and of chi^{i_r + i_s - 1}
// over all pairs r <= s, inside the cyclic group of order ell - 1.
std::pair<std::uint64_t, std::uint64_t> mq_from_exponents(const ExponentVector& v);

// The unique integer congruent to 2gq mod ell in the window [-2gq, 2gq];
// requires 4gq < ell, which makes that integer 2gq itself.
Int mazur_forced_trace(unsigned g, const Int& q, const Int& ell);

// One step of a derivation: the inequality or congruence used, and whether
// it holds.  A certificate ends in a required step that fails.
struct CertStep {
  std::string claim;
  bool holds = false;
  bool operator==(const CertStep&) const = default;
};

struct Certificate {
  std::vector<CertStep> steps;
  bool contradiction() const { return !steps.empty() && !steps.back().holds; }
};

// Derivation refuting the order-1 hypothesis at a place of odd residue
// degree: the forced trace 2gq collapses the eigenvalues, kills a_1, and
// demands ell | 4g^2 q, impossible for ell > 4gq.
Certificate mazur_contradiction(unsigned g, const Int& q, unsigned f_odd, const Int& ell);

// Multiset of 2g eigenvalues z^t sqrt(q), kappa[t] of each.
struct WeilConfig {
  Int q;
  std::array<unsigned, 12> kappa{};

  static WeilConfig make(Int q, std::array<unsigned, 12> kappa);
  unsigned two_g() const;
  bool mu6_supported() const;  // mass only on even positions
  // Invariant under t -> 5t, 7t, 11t and t -> t + 6.
  bool galois_stable() const;
};

// Exact trace of the n-th power action: angular * q^(n/2) * sqrt(q)^(n mod 2).
struct TraceValue {
  Int q;
  unsigned n = 0;
  CycloElement angular;  // sum of kappa_t z^{tn}

  bool is_zero() const { return angular.is_zero(); }
  bool is_rational() const;
  Rat rational_value() const;  // requires is_rational()
  std::string to_string() const;
};

TraceValue trace(const WeilConfig& config, unsigned n);

// Derivation refuting the order-dividing-6 hypothesis: the forced sixth
// trace 2gp^3 turns eigenvalues into sixth roots of unity times sqrt(p),
// Galois stability balances them, and the surviving demand ell | 2gp fails.
// Enumerates all eigenvalue arrangements, so g is capped at 16.
Certificate sixth_root_analysis(unsigned g, const Int& p, const Int& ell);

// Derivation refuting the exact-order-3 hypothesis for a two-dimensional
// action: the forced trace -q makes the squared eigenvalues primitive cube
// roots of unity times q, whose square roots all have minimal degree 4.
// Requires q a prime power with odd exponent and 4q < ell.
Certificate cubic_contradiction(const Int& q, const Int& ell);

}  // namespace avtk
