#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace divbound {

// Seeded generator with library-independent draw functions, so that
// seeded sweeps are byte-identical across standard library versions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  // uniform in [0,1)
  double uniform() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  std::uint64_t integer(std::uint64_t n) { return eng_() % n; }

  // standard exponential via inversion
  double exponential() {
    double u = uniform();
    return -std::log1p(-u);
  }

  // mass vector on the simplex: normalized exponentials
  std::vector<double> simplex(std::size_t n) {
    std::vector<double> m(n);
    double sum = 0.0;
    for (auto& x : m) {
      x = exponential();
      sum += x;
    }
    for (auto& x : m) x /= sum;
    return m;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace divbound
