#pragma once

#include <array>
#include <string>

#include "avtk/integers.hpp"

namespace avtk {

// Exact element of the field Q(z) with z a primitive 12th root of unity,
// stored in the power basis 1, z, z^2, z^3 with the reduction z^4 = z^2 - 1.
class CycloElement {
 public:
  CycloElement() = default;  // zero
  explicit CycloElement(Rat rational);
  explicit CycloElement(std::array<Rat, 4> coords);

  static CycloElement zeta_power(unsigned t);  // z^t, any t, reduced mod 12
  static CycloElement zeta3();                 // z^4, a primitive cube root of unity
  static CycloElement sqrt3();                 // 2z - z^3, the positive square root of 3

  const std::array<Rat, 4>& coords() const { return coords_; }
  bool is_zero() const;
  bool is_rational() const;  // all coordinates above the constant vanish
  Rat rational_part() const;  // requires is_rational()

  // Field automorphism z -> z^k; requires k in {1, 5, 7, 11}.
  CycloElement galois(unsigned k) const;

  CycloElement operator-() const;
  CycloElement& operator+=(const CycloElement& o);
  CycloElement& operator-=(const CycloElement& o);
  CycloElement& operator*=(const CycloElement& o);
  friend CycloElement operator+(CycloElement a, const CycloElement& b) { return a += b; }
  friend CycloElement operator-(CycloElement a, const CycloElement& b) { return a -= b; }
  friend CycloElement operator*(CycloElement a, const CycloElement& b) { return a *= b; }
  bool operator==(const CycloElement& o) const { return coords_ == o.coords_; }

  std::string to_string() const;  // e.g. "1 - z^2", "0", "2z - z^3"

 private:
  std::array<Rat, 4> coords_{Rat(0), Rat(0), Rat(0), Rat(0)};
};

// Degree over Q of the minimal polynomial of z^t * sqrt(q), q >= 1, computed
// by exact linear algebra in Q(z) or, when sqrt(q) lies outside it, in the
// quadratic extension Q(z)[y]/(y^2 - d) for the squarefree part d of q.
unsigned min_poly_degree(unsigned t, const Int& q);

}  // namespace avtk
