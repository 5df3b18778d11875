#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "avtk/integers.hpp"

namespace avtk {

// Exponent of p in the universal order M'(n): the exact p-part shared by every
// general linear group of degree n over a prime field of large characteristic.
unsigned universal_exponent(unsigned n, std::uint64_t p);

struct MPrimeFactorization {
  unsigned n = 0;
  std::vector<std::pair<std::uint64_t, unsigned>> factors;  // ascending primes, exponents > 0
  Int value;

  std::string factored_string() const;  // "2^4 * 3"
};

// M'(n) = product over primes p <= n+1 of p^{u_p}.
MPrimeFactorization m_prime(unsigned n);

// #GL_n(F_q) = product over 0 <= i < n of (q^n - q^i); q must be a prime power >= 2.
Int gl_order(unsigned n, const Int& q);

}  // namespace avtk
