#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace papa {

/// Deterministic random source with named substreams.
///
/// The standard distributions are implementation-defined, so the draw
/// functions here are written out explicitly on top of the raw mt19937_64
/// output; a given seed yields the same values on every platform.
/// child("tag") derives an independent stream, so adding draws in one part
/// of a computation never shifts the values seen by another.
class SplitRng {
 public:
  explicit SplitRng(std::uint64_t seed);

  /// Stream for a named subtask, decorrelated from this one.
  SplitRng child(std::string_view tag) const;

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1).
  double uniform01();

  /// Uniform on [lo, hi).
  double uniform(double lo, double hi);

  /// Standard normal via Box-Muller (both values used, no state cached).
  double normal();

  double normal(double mean, double stddev) { return mean + stddev * normal(); }

  /// Uniform integer in [0, n), n >= 1, free of modulo bias.
  int uniform_index(int n);

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace papa
