#pragma once

#include <string>
#include <vector>

#include "avtk/integers.hpp"

namespace avtk {

// Element a + b*sqrt(d) of a real quadratic field, exact coordinates.
// d is squarefree and > 1, so the representation is unique and norm zero
// only at the zero element; binary arithmetic requires matching fields.
struct QuadRat {
  Rat a;
  Rat b;
  Int d;

  // Validates that d > 1 is squarefree (full factorization).
  static QuadRat make(Rat a, Rat b, Int d);
  void validate() const;

  bool is_zero() const { return a == 0 && b == 0; }
  bool is_rational() const { return b == 0; }
  QuadRat conjugate() const;
  // a^2 - b^2 d; zero iff the element is zero.
  Rat norm() const;
  // Monic minimal polynomial over the rationals, ascending coefficients:
  // {-a, 1} for rational elements, {norm, -2a, 1} otherwise.
  std::vector<Rat> minimal_polynomial() const;

  QuadRat operator-() const;
  QuadRat& operator+=(const QuadRat& rhs);
  QuadRat& operator-=(const QuadRat& rhs);
  QuadRat& operator*=(const QuadRat& rhs);
  // Exact division; the divisor must be nonzero.
  QuadRat& operator/=(const QuadRat& rhs);
  friend QuadRat operator+(QuadRat lhs, const QuadRat& rhs) { return lhs += rhs; }
  friend QuadRat operator-(QuadRat lhs, const QuadRat& rhs) { return lhs -= rhs; }
  friend QuadRat operator*(QuadRat lhs, const QuadRat& rhs) { return lhs *= rhs; }
  friend QuadRat operator/(QuadRat lhs, const QuadRat& rhs) { return lhs /= rhs; }

  // Equality as real numbers: rational elements compare across fields,
  // irrational ones only within the same field.
  friend bool operator==(const QuadRat& lhs, const QuadRat& rhs);

  std::string to_string() const;
};

// Legendre-form curve y^2 = x(x - 1)(x - lambda); lambda outside {0, 1}.
struct LegendreCurve {
  QuadRat lambda;

  static LegendreCurve make(QuadRat lambda);
};

struct UnitConditions {
  bool eps_unit = false;
  bool eps_minus_one_2unit = false;
};

// The unit -2^i + sqrt(2^{2i} + 1), a root of x^2 + 2^{i+1} x - 1, as an
// exact element of the field with d = squarefree part of 2^{2i} + 1.
// i <= 64; the factorization cost grows with i (trial division resolves
// every i <= 19, larger i fall back to Pollard rho).
QuadRat epsilon(unsigned i);

// eps_unit: the minimal polynomial of epsilon(i) has constant term +-1.
// eps_minus_one_2unit: the minimal polynomial of epsilon(i) - 1 has
// constant term of the form +-2^k.
UnitConditions verify_unit_conditions(unsigned i);

// 2^8 (lambda^2 - lambda + 1)^3 / (lambda^2 (lambda - 1)^2), exact.
QuadRat j_invariant(const LegendreCurve& curve);

// 16 lambda^2 (lambda - 1)^2, the discriminant of the Legendre model.
QuadRat model_discriminant(const LegendreCurve& curve);

// True iff the j-invariants of the curves with lambda = epsilon(0), ...,
// epsilon(count - 1) are pairwise distinct as algebraic numbers, decided
// through minimal polynomials (equal minimal polynomials leave only the
// conjugate ambiguity, settled coordinatewise). count <= 20.
bool distinct_family_check(unsigned count);

}  // namespace avtk
