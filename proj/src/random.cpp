// SPDX-License-Identifier: Apache-2.0
#include "conedrift/random.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace conedrift {

double RandomStream::gaussian_at(std::uint64_t key, std::uint64_t index) {
  const double u1 = uniform_at(key, 2 * index);
  const double u2 = uniform_at(key, 2 * index + 1);
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

double RandomStream::exponential(double rate) {
  if (!(rate > 0.0)) throw std::invalid_argument("exponential: rate must be > 0");
  return -std::log(uniform01()) / rate;
}

double RandomStream::normal() {
  const double u1 = uniform01();
  const double u2 = uniform01();
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

double RandomStream::gamma_integer(int shape, double rate) {
  if (shape < 1) throw std::invalid_argument("gamma_integer: shape must be >= 1");
  double acc = 0.0;
  for (int i = 0; i < shape; ++i) acc += exponential(rate);
  return acc;
}

std::uint64_t RandomStream::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("below: bound must be > 0");
  const unsigned __int128 prod =
      static_cast<unsigned __int128>(next_u64()) * bound;
  return static_cast<std::uint64_t>(prod >> 64);
}

}  // namespace conedrift
