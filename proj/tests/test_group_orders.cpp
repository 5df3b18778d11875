#include "avtk/group_orders.hpp"

#include <numeric>

#include "doctest.h"

using avtk::Int;

namespace {

// Independent oracle: the shared order content of GL_n over prime fields,
// accumulated as a gcd over odd primes q coprime to 2 * n!.
Int gcd_of_gl_orders(unsigned n, unsigned count) {
  const Int excluded = 2 * avtk::factorial(n);
  Int g = 0;
  std::uint64_t q = 2;
  for (unsigned taken = 0; taken < count;) {
    q = avtk::next_prime_after(q);
    if (excluded % q == 0) continue;
    g = boost::multiprecision::gcd(g, avtk::gl_order(n, Int(q)));
    ++taken;
  }
  return g;
}

}  // namespace

TEST_CASE("gl_order multiplies the point counts of a full flag") {
  CHECK(avtk::gl_order(1, Int(5)) == 4);
  CHECK(avtk::gl_order(2, Int(2)) == 6);    // (4-1)(4-2)
  CHECK(avtk::gl_order(2, Int(3)) == 48);   // (9-1)(9-3)
  CHECK(avtk::gl_order(3, Int(2)) == 168);  // (8-1)(8-2)(8-4)
  CHECK(avtk::gl_order(2, Int(4)) == 180);  // prime power field size
  CHECK_THROWS_AS(avtk::gl_order(0, Int(5)), avtk::precondition_error);
  CHECK_THROWS_AS(avtk::gl_order(2, Int(6)), avtk::precondition_error);
  CHECK_THROWS_AS(avtk::gl_order(2, Int(1)), avtk::precondition_error);
}

TEST_CASE("universal exponents recover the tabulated prime powers") {
  // n = 2: 2^4 * 3; n = 4: 2^9 * 3^2 * 5; n = 6: 2^13 * 3^4 * 5 * 7;
  // n = 8: 2^19 * 3^5 * 5^2 * 7.
  CHECK(avtk::universal_exponent(2, 2) == 4);
  CHECK(avtk::universal_exponent(2, 3) == 1);
  CHECK(avtk::universal_exponent(2, 5) == 0);
  CHECK(avtk::universal_exponent(4, 2) == 9);
  CHECK(avtk::universal_exponent(4, 3) == 2);
  CHECK(avtk::universal_exponent(4, 5) == 1);
  CHECK(avtk::universal_exponent(6, 2) == 13);
  CHECK(avtk::universal_exponent(6, 3) == 4);
  CHECK(avtk::universal_exponent(6, 5) == 1);
  CHECK(avtk::universal_exponent(6, 7) == 1);
  CHECK(avtk::universal_exponent(8, 2) == 19);
  CHECK(avtk::universal_exponent(8, 3) == 5);
  CHECK(avtk::universal_exponent(8, 5) == 2);
  CHECK(avtk::universal_exponent(8, 7) == 1);
  CHECK(avtk::universal_exponent(8, 11) == 0);
}

TEST_CASE("m_prime assembles the factored invariant") {
  const auto m2 = avtk::m_prime(2);
  CHECK(m2.value == 48);
  CHECK(m2.factored_string() == "2^4 * 3");
  const auto m4 = avtk::m_prime(4);
  CHECK(m4.value == 23040);
  CHECK(m4.factored_string() == "2^9 * 3^2 * 5");
  const auto m6 = avtk::m_prime(6);
  CHECK(m6.value == avtk::pow_int(Int(2), 13) * 81 * 5 * 7);
  CHECK(m6.factored_string() == "2^13 * 3^4 * 5 * 7");
  const auto m8 = avtk::m_prime(8);
  CHECK(m8.value == avtk::pow_int(Int(2), 19) * 243 * 25 * 7);
  CHECK(m8.factored_string() == "2^19 * 3^5 * 5^2 * 7");
  for (const auto& [p, e] : m8.factors) CHECK(e == avtk::universal_exponent(8, p));
}

TEST_CASE("m_prime equals the stabilized gcd of linear group orders") {
  for (unsigned n : {1u, 2u, 3u, 4u, 5u, 6u}) {
    const Int expected = avtk::m_prime(n).value;
    const Int after8 = gcd_of_gl_orders(n, 8);
    CHECK(after8 == expected);
    CHECK(gcd_of_gl_orders(n, 10) == expected);  // two more primes change nothing
  }
}
