#include "avtk/quadratic_family.hpp"

#include <sstream>
#include <utility>

namespace avtk {

namespace {

const std::string kSameField = "quadratic field mismatch: operands must share d";

bool is_signed_power_of_two(const Rat& c) {
  if (boost::multiprecision::denominator(c) != 1) return false;
  Int n = boost::multiprecision::numerator(c);
  if (n == 0) return false;
  if (n < 0) n = -n;
  return (n & (n - 1)) == 0;
}

}  // namespace

QuadRat QuadRat::make(Rat a, Rat b, Int d) {
  QuadRat x{std::move(a), std::move(b), std::move(d)};
  x.validate();
  return x;
}

void QuadRat::validate() const {
  require(d > 1, "d must be a squarefree integer > 1");
  require(is_squarefree(d), "d must be a squarefree integer > 1");
}

QuadRat QuadRat::conjugate() const { return QuadRat{a, -b, d}; }

Rat QuadRat::norm() const { return a * a - b * b * Rat(d); }

std::vector<Rat> QuadRat::minimal_polynomial() const {
  if (b == 0) return {-a, Rat(1)};
  return {norm(), Rat(-2) * a, Rat(1)};
}

QuadRat QuadRat::operator-() const { return QuadRat{-a, -b, d}; }

QuadRat& QuadRat::operator+=(const QuadRat& rhs) {
  require(d == rhs.d, kSameField);
  a += rhs.a;
  b += rhs.b;
  return *this;
}

QuadRat& QuadRat::operator-=(const QuadRat& rhs) {
  require(d == rhs.d, kSameField);
  a -= rhs.a;
  b -= rhs.b;
  return *this;
}

QuadRat& QuadRat::operator*=(const QuadRat& rhs) {
  require(d == rhs.d, kSameField);
  const Rat na = a * rhs.a + b * rhs.b * Rat(d);
  const Rat nb = a * rhs.b + b * rhs.a;
  a = na;
  b = nb;
  return *this;
}

QuadRat& QuadRat::operator/=(const QuadRat& rhs) {
  require(d == rhs.d, kSameField);
  require(!rhs.is_zero(), "division by zero");
  // d squarefree keeps the norm of a nonzero element nonzero.
  const Rat n = rhs.norm();
  const Rat na = (a * rhs.a - b * rhs.b * Rat(d)) / n;
  const Rat nb = (b * rhs.a - a * rhs.b) / n;
  a = na;
  b = nb;
  return *this;
}

bool operator==(const QuadRat& lhs, const QuadRat& rhs) {
  if (lhs.d == rhs.d) return lhs.a == rhs.a && lhs.b == rhs.b;
  return lhs.b == 0 && rhs.b == 0 && lhs.a == rhs.a;
}

std::string QuadRat::to_string() const {
  std::ostringstream out;
  const auto sqrt_term = [&](const Rat& coeff) {
    if (coeff != 1) out << coeff << "*";
    out << "sqrt(" << d << ")";
  };
  if (b == 0) {
    out << a;
  } else if (a == 0) {
    if (b < 0) {
      out << "-";
      sqrt_term(-b);
    } else {
      sqrt_term(b);
    }
  } else {
    out << a << (b < 0 ? " - " : " + ");
    sqrt_term(b < 0 ? Rat(-b) : b);
  }
  return out.str();
}

LegendreCurve LegendreCurve::make(QuadRat lambda) {
  lambda.validate();
  require(!lambda.is_zero(), "lambda must avoid 0");
  require(!(lambda.b == 0 && lambda.a == 1), "lambda must avoid 1");
  return LegendreCurve{std::move(lambda)};
}

QuadRat epsilon(unsigned i) {
  require(i <= 64, "i must be at most 64");
  const Int n = pow_int(Int(2), 2 * std::uint64_t{i}) + 1;
  const auto [s, d] = squarefree_decompose(n);
  return QuadRat::make(Rat(-pow_int(Int(2), i)), Rat(s), d);
}

UnitConditions verify_unit_conditions(unsigned i) {
  const QuadRat eps = epsilon(i);
  const QuadRat one{Rat(1), Rat(0), eps.d};
  const Rat unit_term = eps.minimal_polynomial().front();
  const Rat shift_term = (eps - one).minimal_polynomial().front();
  return {.eps_unit = unit_term == 1 || unit_term == -1,
          .eps_minus_one_2unit = is_signed_power_of_two(shift_term)};
}

QuadRat j_invariant(const LegendreCurve& curve) {
  const QuadRat& lam = curve.lambda;
  const QuadRat one{Rat(1), Rat(0), lam.d};
  const QuadRat num = lam * lam - lam + one;
  const QuadRat den = lam * lam * (lam - one) * (lam - one);
  return QuadRat{Rat(256), Rat(0), lam.d} * num * num * num / den;
}

QuadRat model_discriminant(const LegendreCurve& curve) {
  const QuadRat& lam = curve.lambda;
  const QuadRat one{Rat(1), Rat(0), lam.d};
  const QuadRat shift = lam - one;
  return QuadRat{Rat(16), Rat(0), lam.d} * lam * lam * shift * shift;
}

bool distinct_family_check(unsigned count) {
  require(count <= 20, "count must be at most 20");
  std::vector<QuadRat> js;
  js.reserve(count);
  for (unsigned i = 0; i < count; ++i) {
    js.push_back(j_invariant(LegendreCurve::make(epsilon(i))));
  }
  for (unsigned i = 0; i < count; ++i) {
    for (unsigned k = i + 1; k < count; ++k) {
      if (js[i].minimal_polynomial() != js[k].minimal_polynomial()) continue;
      if (js[i] == js[k]) return false;
    }
  }
  return true;
}

}  // namespace avtk
