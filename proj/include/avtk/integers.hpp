#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace avtk {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Violated documented precondition; the CLI maps these to exit code 1.
class precondition_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Throws precondition_error naming the violated precondition unless ok.
void require(bool ok, const std::string& precondition);

Int pow_int(const Int& base, std::uint64_t exp);
Int isqrt_floor(const Int& n);  // n >= 0
bool is_perfect_square(const Int& n);
Int factorial(std::uint64_t n);
Int binomial(std::uint64_t n, std::uint64_t k);

// Natural log of n >= 1, accurate to a few ulps even when n overflows double.
double log_int(const Int& n);

// Exact p-adic valuation of n >= 1 (p >= 2).
unsigned v_p(Int n, const Int& p);

// All primes <= limit by plain bit sieve; limit capped at 1e8.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

bool is_prime(std::uint64_t n);  // deterministic Miller-Rabin
bool is_prime(const Int& n);
std::uint64_t next_prime_after(std::uint64_t n);

// Sorted (prime, exponent) factorization of n >= 1. Trial division plus
// Pollard-Brent rho; comfortable up to ~128-bit composites.
std::vector<std::pair<Int, unsigned>> factorize(Int n);

// n = s^2 * d with d squarefree; returns (s, d). n >= 1.
std::pair<Int, Int> squarefree_decompose(const Int& n);
bool is_squarefree(const Int& n);

// All positive divisors of n >= 1, sorted ascending.
std::vector<Int> divisors(const Int& n);

// (p, f) with q = p^f, p prime, f >= 1; nullopt if q is not a prime power.
std::optional<std::pair<Int, unsigned>> prime_power_decompose(const Int& q);

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);
std::uint64_t euler_phi(std::uint64_t d);                    // d >= 1
std::uint64_t mult_order(std::uint64_t a, std::uint64_t n);  // gcd(a,n) = 1

// Kronecker symbol (a|n), n != 0; extends the Jacobi and Legendre symbols.
int kronecker(Int a, Int n);

}  // namespace avtk
