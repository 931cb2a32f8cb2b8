#pragma once

#include <cstdint>
#include <random>

namespace hhc {

/// SplitMix64 finalizer; used to derive independent stream seeds from
/// (seed, index) pairs.
constexpr std::uint64_t mix_seed(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Reproducible uniform doubles. std::mt19937_64's output sequence is fixed
/// by the standard, but the distributions in <random> are not, so the
/// conversion to [0, 1) is done here.
class SeededUniform {
 public:
  explicit SeededUniform(std::uint64_t seed) : engine_(mix_seed(seed)) {}
  SeededUniform(std::uint64_t seed, std::uint64_t stream)
      : engine_(mix_seed(seed ^ mix_seed(stream + 0x632be59bd9b4e019ULL))) {}

  /// Uniform on [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform on [lo, hi]; returns lo when lo == hi.
  double uniform(double lo, double hi) { return lo == hi ? lo : lo + (hi - lo) * unit(); }

  /// Uniform index in [0, n).
  std::uint64_t index(std::uint64_t n) { return static_cast<std::uint64_t>(unit() * static_cast<double>(n)); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace hhc
