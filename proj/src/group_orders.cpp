#include "avtk/group_orders.hpp"

#include <sstream>

namespace avtk {

unsigned universal_exponent(unsigned n, std::uint64_t p) {
  require(n >= 1, "universal_exponent requires n >= 1");
  require(is_prime(p), "universal_exponent requires p prime");
  if (p == 2) return v_p(factorial(n), 2) + n + n / 2;
  if (p > static_cast<std::uint64_t>(n) + 1) return 0;
  const unsigned k = n / static_cast<unsigned>(p - 1);
  return v_p(factorial(k), p) + k;
}

std::string MPrimeFactorization::factored_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i > 0) out << " * ";
    out << factors[i].first;
    if (factors[i].second > 1) out << "^" << factors[i].second;
  }
  return out.str();
}

MPrimeFactorization m_prime(unsigned n) {
  require(n >= 1, "m_prime requires n >= 1");
  MPrimeFactorization result;
  result.n = n;
  result.value = 1;
  for (std::uint64_t p = 2; p <= static_cast<std::uint64_t>(n) + 1; p = next_prime_after(p)) {
    const unsigned e = universal_exponent(n, p);
    if (e == 0) continue;
    result.factors.emplace_back(p, e);
    result.value *= pow_int(Int(p), e);
  }
  return result;
}

Int gl_order(unsigned n, const Int& q) {
  require(n >= 1, "gl_order requires n >= 1");
  require(q >= 2, "gl_order requires q >= 2");
  require(prime_power_decompose(q).has_value(), "gl_order requires q a prime power");
  const Int qn = pow_int(q, n);
  Int result = 1;
  Int qi = 1;
  for (unsigned i = 0; i < n; ++i) {
    result *= qn - qi;
    qi *= q;
  }
  return result;
}

}  // namespace avtk
