#pragma once

namespace avtk {

// Secondary real branch of w e^w = x: the solution w <= -1, defined for
// x in [-1/e, 0). Root-finding is bracketed bisection polished by two
// Halley steps; the residual |w e^w - x| stays within 1e-12 relative.
double lambert_w_m1(double x);

// Closed-form lower bound for lambert_w_m1 on [-1/e, 0): the constant
// value at -1/4 on the left piece, 2 log(-x) on the right piece.
double lambert_lower_bound(double x);

// Final crossing x0 of x^(1/N) = log(c x): beyond x0 the power stays
// above the logarithm. Requires N > 0 and c >= (e/N)^N so the curves
// meet. Satisfies x0 <= c N^(2N).
double x0_crossing(double c, double N);

}  // namespace avtk
