// include/stseg/random.h

// Copyright 2026  The stseg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef STSEG_RANDOM_H_
#define STSEG_RANDOM_H_

#include <cstdint>
#include <random>
#include <string_view>

namespace stseg {

// Seeded generator with a platform-independent integer law. The standard
// distributions are implementation-defined, so draws go through UniformInt.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform on the closed range [lo, hi]; requires lo <= hi.
  std::int64_t UniformInt(std::int64_t lo, std::int64_t hi);

 private:
  std::mt19937_64 engine_;
};

// Order-independent per-item seed: mixes the global seed with the item id.
std::uint64_t DeriveSeed(std::uint64_t seed, std::string_view id);

}  // namespace stseg

#endif  // STSEG_RANDOM_H_
