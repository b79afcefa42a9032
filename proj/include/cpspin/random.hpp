#pragma once

#include <cstdint>
#include <random>

#include "cpspin/scalar.hpp"

namespace cpspin {

// splitmix64 finalizer; derives independent streams from one trial seed.
inline std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

class Rng {
 public:
  Rng(std::uint64_t seed, int max_num = 10, int max_den = 10) : gen_(seed), max_num_(max_num), max_den_(max_den) {}

  // p/q with |p| <= max_num, 1 <= q <= max_den.
  Rational rational() {
    std::uniform_int_distribution<int> num(-max_num_, max_num_);
    std::uniform_int_distribution<int> den(1, max_den_);
    int p = num(gen_);
    int q = den(gen_);
    return Rational(p) / Rational(q);
  }

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
  int max_num_;
  int max_den_;
};

}  // namespace cpspin
