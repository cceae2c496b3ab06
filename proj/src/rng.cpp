#include "papa/rng.hpp"

#include "papa/errors.hpp"

#include <cmath>
#include <numbers>

namespace papa {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

SplitRng::SplitRng(std::uint64_t seed) : seed_(seed), engine_(splitmix64(seed)) {}

SplitRng SplitRng::child(std::string_view tag) const {
  return SplitRng(splitmix64(seed_ ^ fnv1a64(tag)));
}

double SplitRng::uniform01() {
  // Top 53 bits give a dyadic rational in [0, 1).
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double SplitRng::uniform(double lo, double hi) {
  return lo + (hi - lo) * uniform01();
}

double SplitRng::normal() {
  // Box-Muller on fresh draws each call; u must avoid log(0).
  double u = 0.0;
  do {
    u = uniform01();
  } while (u == 0.0);
  const double v = uniform01();
  return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * std::numbers::pi * v);
}

int SplitRng::uniform_index(int n) {
  if (n < 1) {
    throw ValidationError("uniform_index needs a positive range");
  }
  const std::uint64_t range = static_cast<std::uint64_t>(n);
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
  std::uint64_t x = 0;
  do {
    x = engine_();
  } while (x >= limit);
  return static_cast<int>(x % range);
}

}  // namespace papa
