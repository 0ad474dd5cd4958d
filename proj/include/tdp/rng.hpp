// Copyright 2026 The temporal-dp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TDP_RNG_HPP_
#define TDP_RNG_HPP_

#include <cmath>
#include <cstdint>

namespace tdp {

// Finalizer step of the splitmix64 generator (Steele, Lea & Flood 2014).
// Used both as the engine's state update and to derive substream seeds.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// splitmix64: a seedable 64-bit generator with a fully specified output
// stream, so results are bit-reproducible across platforms and compilers
// (std::uniform_real_distribution & friends are not). Stream semantics:
// output k of seed s is the finalizer applied to s + k*0x9e3779b97f4a7c15.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~0ULL; }

  result_type operator()() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Independent stream for (seed, index), e.g. one per release timestep.
  // Derivation: state = mix64(seed ^ mix64(index)).
  static SplitMix64 substream(std::uint64_t seed, std::uint64_t index) {
    return SplitMix64(mix64(seed ^ mix64(index)));
  }

  // Uniform double in the open interval (0,1), 53-bit resolution; never
  // returns an exact 0 or 1, so inverse-CDF transforms stay finite.
  double next_unit() {
    return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Laplace(0, scale) via inverse CDF from a single uniform draw.
  double next_laplace(double scale) {
    const double w = next_unit() - 0.5;
    const double mag = -scale * std::log1p(-2.0 * std::fabs(w));
    return w < 0.0 ? -mag : mag;
  }

 private:
  std::uint64_t state_;
};

}  // namespace tdp

#endif  // TDP_RNG_HPP_
