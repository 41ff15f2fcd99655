#pragma once

#include <random>

#include "dhtgb/signal.hpp"

namespace dhtgb::testing {

inline Signal random_signal(std::mt19937_64& rng, Index origin, Index width) {
  std::uniform_real_distribution<double> amp(-1.0, 1.0);
  Vector<double> v(width);
  for (Index i = 0; i < width; ++i) v[i] = amp(rng);
  return Signal(origin, v);
}

inline Index random_index(std::mt19937_64& rng, Index lo, Index hi) {
  return std::uniform_int_distribution<Index>(lo, hi)(rng);
}

}  // namespace dhtgb::testing
