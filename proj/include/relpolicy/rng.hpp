#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace relpolicy {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

/// Derive an independent stream seed from (seed, tag, index). Used so that
/// e.g. rollout lanes consume randomness independently of each other.
inline std::uint64_t derive_seed(std::uint64_t seed, const std::string& tag, std::uint64_t index = 0) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(seed);
  for (char c : tag) mix(static_cast<std::uint64_t>(static_cast<unsigned char>(c)));
  mix(index);
  return splitmix64(h);
}

/// Deterministic RNG wrapper. All sampling goes through explicit helpers so
/// trajectories are bitwise reproducible for a fixed seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [0, n).
  int uniform_int(int n) { return n <= 1 ? 0 : static_cast<int>(eng_() % static_cast<std::uint64_t>(n)); }

  /// Standard normal via Box-Muller; one spare cached.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    do {
      u1 = uniform();
    } while (u1 <= 0.0);
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double theta = 2.0 * M_PI * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
  }

  bool bernoulli(double p) { return uniform() < p; }

  /// Index sampled from unnormalized nonnegative weights; last positive
  /// entry absorbs any floating-point remainder.
  template <typename Vec>
  int categorical(const Vec& weights) {
    double total = 0.0;
    for (int i = 0; i < static_cast<int>(weights.size()); ++i) total += static_cast<double>(weights[i]);
    double u = uniform() * total;
    double acc = 0.0;
    int last_positive = -1;
    for (int i = 0; i < static_cast<int>(weights.size()); ++i) {
      double w = static_cast<double>(weights[i]);
      if (w <= 0.0) continue;
      last_positive = i;
      acc += w;
      if (u < acc) return i;
    }
    return last_positive;
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) {
      int j = static_cast<int>(eng_() % static_cast<std::uint64_t>(i + 1));
      std::swap(v[i], v[j]);
    }
  }

 private:
  std::mt19937_64 eng_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace relpolicy
