#pragma once

#include <cstdlib>
#include <random>
#include <string>

namespace toriq::testing {

// TORIQ_SEED overrides the default so a failing property run can be replayed.
inline unsigned test_seed(unsigned fallback = 20240611u) {
  if (const char* s = std::getenv("TORIQ_SEED")) return static_cast<unsigned>(std::stoul(s));
  return fallback;
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(test_seed());
  return gen;
}

inline long long uniform_int(long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(rng());
}

inline double uniform_real(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng());
}

}  // namespace toriq::testing
