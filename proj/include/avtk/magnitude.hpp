#pragma once

#include <optional>
#include <string>

#include "avtk/integers.hpp"

namespace avtk {

// A positive quantity stored exactly when practical, always with its natural
// log. Comparisons run in log space with a relative 1e-9 guard band; exact
// values decide ties inside the band.
struct Magnitude {
  std::optional<Int> exact;
  double log_e = 0.0;

  static Magnitude from_exact(Int value);  // value >= 1
  static Magnitude from_log(double log_e);

  double log10_value() const;
  std::string to_string() const;
};

Magnitude max_magnitude(const Magnitude& a, const Magnitude& b);

// a < b beyond the guard band (so the comparison is numerically safe).
bool definitely_less(const Magnitude& a, const Magnitude& b);

}  // namespace avtk
