#pragma once

// Random eventually periodic sets for property tests. Seeds are fixed per
// test so failures replay.

#include <random>

#include "pws/epset.hpp"
#include "pws/windowset.hpp"

namespace pws::testing {

using Rng = std::mt19937_64;

inline BitWord random_word(Rng& rng, std::size_t len, double density = 0.5) {
  std::bernoulli_distribution bit(density);
  BitWord w(len);
  for (std::size_t i = 0; i < len; ++i) w[i] = bit(rng);
  return w;
}

/// Preperiod length in 0..max_pre, period length in 1..max_per.
inline EpSet random_epset(Rng& rng, std::size_t max_pre, std::size_t max_per, double density = 0.5) {
  std::uniform_int_distribution<std::size_t> pre(0, max_pre), per(1, max_per);
  const std::size_t a = pre(rng);
  const std::size_t p = per(rng);
  return EpSet(random_word(rng, a, density), random_word(rng, p, density));
}

/// Infinite random set (period word forced to contain a member).
inline EpSet random_infinite(Rng& rng, std::size_t max_pre, std::size_t max_per, double density = 0.5) {
  while (true) {
    EpSet s = random_epset(rng, max_pre, max_per, density);
    if (!is_finite(s)) return s;
  }
}

/// Direct pointwise window, independent of materialize().
inline BitWord window_bits(const EpSet& s, std::size_t horizon) {
  BitWord out(horizon);
  for (std::size_t n = 1; n <= horizon; ++n) {
    if (n <= s.preperiod_len()) {
      out[n - 1] = s.preperiod()[n - 1];
    } else {
      out[n - 1] = s.period()[(n - s.preperiod_len() - 1) % s.period_len()];
    }
  }
  return out;
}

}  // namespace pws::testing
