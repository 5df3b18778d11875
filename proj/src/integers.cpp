#include "avtk/integers.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace avtk {

void require(bool ok, const std::string& precondition) {
  if (!ok) throw precondition_error(precondition);
}

Int pow_int(const Int& base, std::uint64_t exp) {
  Int result = 1;
  Int b = base;
  while (exp > 0) {
    if (exp & 1) result *= b;
    exp >>= 1;
    if (exp > 0) b *= b;
  }
  return result;
}

Int isqrt_floor(const Int& n) {
  require(n >= 0, "isqrt_floor requires n >= 0");
  return boost::multiprecision::sqrt(n);
}

bool is_perfect_square(const Int& n) {
  if (n < 0) return false;
  Int r = boost::multiprecision::sqrt(n);
  return r * r == n;
}

Int factorial(std::uint64_t n) {
  Int result = 1;
  for (std::uint64_t k = 2; k <= n; ++k) result *= k;
  return result;
}

Int binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  Int result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact: product of i consecutive integers is divisible by i!
  }
  return result;
}

double log_int(const Int& n) {
  require(n >= 1, "log_int requires n >= 1");
  const std::size_t bits = boost::multiprecision::msb(n) + 1;
  if (bits <= 900) return std::log(n.convert_to<double>());
  // Scale down so the mantissa fits a double exactly enough.
  const std::size_t shift = bits - 64;
  const Int top = n >> shift;
  return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

unsigned v_p(Int n, const Int& p) {
  require(n >= 1, "v_p requires n >= 1");
  require(p >= 2, "v_p requires p >= 2");
  unsigned k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  return k;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  require(limit <= 100'000'000ULL, "primes_up_to limited to 1e8");
  std::vector<std::uint64_t> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t p = 2; p * p <= limit; ++p) {
    if (composite[p]) continue;
    for (std::uint64_t q = p * p; q <= limit; q += p) composite[q] = true;
  }
  for (std::uint64_t p = 2; p <= limit; ++p) {
    if (!composite[p]) primes.push_back(p);
  }
  return primes;
}

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

bool miller_rabin_u64(std::uint64_t n, std::uint64_t a) {
  if (a % n == 0) return true;
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  std::uint64_t x = mod_pow(a % n, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < r; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

// Strong pseudoprime test to base a over cpp_int.
bool miller_rabin_int(const Int& n, const Int& a) {
  if (a % n == 0) return true;
  Int d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  Int x = boost::multiprecision::powm(a % n, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < r; ++i) {
    x = x * x % n;
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  require(mod >= 1, "mod_pow requires mod >= 1");
  std::uint64_t result = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, mod);
    base = mul_mod(base, base, mod);
    exp >>= 1;
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  // Deterministic base set for all 64-bit integers.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (!miller_rabin_u64(n, a)) return false;
  }
  return true;
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  if (n <= std::numeric_limits<std::uint64_t>::max()) return is_prime(n.convert_to<std::uint64_t>());
  static const std::uint64_t small[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37,
                                        41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89};
  for (std::uint64_t p : small) {
    if (n % p == 0) return false;
  }
  for (std::uint64_t a : small) {
    if (!miller_rabin_int(n, Int(a))) return false;
  }
  return true;
}

std::uint64_t next_prime_after(std::uint64_t n) {
  std::uint64_t c = n + 1;
  if (c <= 2) return 2;
  if (c % 2 == 0) ++c;
  while (!is_prime(c)) c += 2;
  return c;
}

namespace {

// Pollard-Brent rho; n odd composite, not a prime power of small primes.
Int pollard_brent(const Int& n) {
  if (n % 2 == 0) return 2;
  for (Int c = 1;; ++c) {
    Int x = 2, y = 2, d = 1;
    Int ys = y, q = 1;
    const unsigned m = 128;
    unsigned r = 1;
    auto step = [&](const Int& v) { return (v * v + c) % n; };
    while (d == 1) {
      x = y;
      for (unsigned i = 0; i < r; ++i) y = step(y);
      unsigned k = 0;
      while (k < r && d == 1) {
        ys = y;
        const unsigned chunk = std::min(m, r - k);
        for (unsigned i = 0; i < chunk; ++i) {
          y = step(y);
          q = q * boost::multiprecision::abs(x - y) % n;
        }
        d = boost::multiprecision::gcd(q, n);
        k += chunk;
      }
      r *= 2;
      if (r > (1u << 24)) break;  // defensive restart with a new c
    }
    if (d == n) {
      // Backtrack one step at a time.
      d = 1;
      while (d == 1) {
        ys = step(ys);
        d = boost::multiprecision::gcd(boost::multiprecision::abs(x - ys), n);
      }
    }
    if (d != n && d != 1) return d;
  }
}

void factor_rec(Int n, std::vector<Int>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  Int d = pollard_brent(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

}  // namespace

std::vector<std::pair<Int, unsigned>> factorize(Int n) {
  require(n >= 1, "factorize requires n >= 1");
  std::vector<Int> primes;
  for (std::uint64_t p = 2; p < 100'000ULL && Int(p) * p <= n; p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) {
      primes.emplace_back(p);
      n /= p;
    }
  }
  if (n > 1) factor_rec(n, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<Int, unsigned>> result;
  for (const Int& p : primes) {
    if (!result.empty() && result.back().first == p) {
      ++result.back().second;
    } else {
      result.emplace_back(p, 1u);
    }
  }
  return result;
}

std::pair<Int, Int> squarefree_decompose(const Int& n) {
  require(n >= 1, "squarefree_decompose requires n >= 1");
  Int s = 1, d = 1;
  for (const auto& [p, e] : factorize(n)) {
    s *= pow_int(p, e / 2);
    if (e % 2 == 1) d *= p;
  }
  return {s, d};
}

bool is_squarefree(const Int& n) { return squarefree_decompose(n).first == 1; }

std::vector<Int> divisors(const Int& n) {
  require(n >= 1, "divisors requires n >= 1");
  std::vector<Int> out{1};
  for (const auto& [p, e] : factorize(n)) {
    const std::size_t base = out.size();
    Int power = 1;
    for (unsigned k = 1; k <= e; ++k) {
      power *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::pair<Int, unsigned>> prime_power_decompose(const Int& q) {
  if (q < 2) return std::nullopt;
  auto factors = factorize(q);
  if (factors.size() != 1) return std::nullopt;
  return std::make_pair(factors[0].first, factors[0].second);
}

std::uint64_t euler_phi(std::uint64_t d) {
  require(d >= 1, "euler_phi requires d >= 1");
  std::uint64_t result = d;
  std::uint64_t n = d;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    result -= result / p;
    while (n % p == 0) n /= p;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::uint64_t mult_order(std::uint64_t a, std::uint64_t n) {
  require(n >= 1, "mult_order requires n >= 1");
  require(std::gcd(a, n) == 1, "mult_order requires gcd(a, n) = 1");
  if (n == 1) return 1;
  std::uint64_t x = a % n;
  std::uint64_t k = 1;
  while (x != 1) {
    x = mul_mod(x, a % n, n);
    ++k;
  }
  return k;
}

int kronecker(Int a, Int n) {
  require(n != 0, "kronecker requires n != 0");
  int result = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) result = -result;
  }
  // Factor out 2s of n: (a|2) = 0 for even a, else +-1 by a mod 8.
  while (n % 2 == 0) {
    n /= 2;
    if (a % 2 == 0) return 0;
    const int m8 = ((a % 8) + 8).convert_to<int>() % 8;
    if (m8 == 3 || m8 == 5) result = -result;
  }
  if (n == 1) return result;
  a %= n;
  if (a < 0) a += n;
  // Jacobi symbol loop with quadratic reciprocity.
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      const int m8 = (n % 8).convert_to<int>();
      if (m8 == 3 || m8 == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

}  // namespace avtk
