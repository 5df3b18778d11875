#include "avtk/lambert.hpp"

#include <cmath>

#include "avtk/integers.hpp"

namespace avtk {

namespace {

double halley_step(double w, double x) {
  const double ew = std::exp(w);
  const double f = w * ew - x;
  const double fp = (1.0 + w) * ew;
  const double fpp = (2.0 + w) * ew;
  return w - f / (fp - f * fpp / (2.0 * fp));
}

}  // namespace

double lambert_w_m1(double x) {
  const double branch_point = -std::exp(-1.0);
  require(x >= branch_point && x < 0.0, "lambert_w_m1 requires -1/e <= x < 0");
  if (x == branch_point) return -1.0;
  // w e^w decreases from -1/e to 0 as w runs from -1 to -infinity, so the
  // root sits in [lo, -1] once lo e^lo has climbed past x.
  double lo = -2.0;
  while (lo * std::exp(lo) < x) lo *= 2.0;
  double hi = -1.0;
  for (int i = 0; i < 200 && hi - lo > 1e-15 * -lo; ++i) {
    const double mid = 0.5 * (lo + hi);
    (mid * std::exp(mid) >= x ? lo : hi) = mid;
  }
  double w = 0.5 * (lo + hi);
  w = halley_step(w, x);
  w = halley_step(w, x);
  return w;
}

double lambert_lower_bound(double x) {
  require(x >= -std::exp(-1.0) && x < 0.0, "lambert_lower_bound requires -1/e <= x < 0");
  if (x < -0.25) return lambert_w_m1(-0.25);
  return 2.0 * std::log(-x);
}

double x0_crossing(double c, double N) {
  require(N > 0.0, "x0_crossing requires N > 0");
  const double floor_c = std::pow(std::exp(1.0) / N, N);
  require(c >= floor_c, "x0_crossing requires c >= (e/N)^N");
  const double arg = -1.0 / (N * std::pow(c, 1.0 / N));
  if (arg <= -std::exp(-1.0)) return std::exp(N) / c;  // tangency
  return std::exp(-N * lambert_w_m1(arg)) / c;
}

}  // namespace avtk
