#include "avtk/magnitude.hpp"

#include <cmath>
#include <sstream>

namespace avtk {

namespace {

double guard_band(double la, double lb) {
  return 1e-9 * std::max({1.0, std::abs(la), std::abs(lb)});
}

}  // namespace

Magnitude Magnitude::from_exact(Int value) {
  require(value >= 1, "Magnitude requires value >= 1");
  Magnitude m;
  m.log_e = log_int(value);
  m.exact = std::move(value);
  return m;
}

Magnitude Magnitude::from_log(double log_e) {
  Magnitude m;
  m.log_e = log_e;
  return m;
}

double Magnitude::log10_value() const { return log_e / std::log(10.0); }

std::string Magnitude::to_string() const {
  std::ostringstream out;
  if (exact) {
    out << *exact;
  } else {
    out.precision(6);
    out << std::fixed << "10^" << log10_value();
  }
  return out.str();
}

Magnitude max_magnitude(const Magnitude& a, const Magnitude& b) {
  if (a.exact && b.exact) return *a.exact >= *b.exact ? a : b;
  const double band = guard_band(a.log_e, b.log_e);
  if (a.log_e > b.log_e + band) return a;
  if (b.log_e > a.log_e + band) return b;
  // Inside the band the values are numerically indistinguishable; prefer the
  // exact representative for determinism.
  if (a.exact) return a;
  if (b.exact) return b;
  return a.log_e >= b.log_e ? a : b;
}

bool definitely_less(const Magnitude& a, const Magnitude& b) {
  if (a.exact && b.exact) return *a.exact < *b.exact;
  return a.log_e + guard_band(a.log_e, b.log_e) < b.log_e;
}

}  // namespace avtk
