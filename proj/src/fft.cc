// src/fft.cc

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

#include "fft.h"

#include <cmath>
#include <numbers>

#include "stseg/error.h"

namespace stseg {

Fft::Fft(std::size_t n) : n_(n) {
  if (n < 2 || (n & (n - 1)) != 0)
    Fail(ErrorCode::kInvalidArgument, "FFT size must be a power of two >= 2");
  std::size_t bits = 0;
  while ((std::size_t{1} << bits) < n) ++bits;
  bit_reverse_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t r = 0;
    for (std::size_t b = 0; b < bits; ++b)
      if (i & (std::size_t{1} << b)) r |= std::size_t{1} << (bits - 1 - b);
    bit_reverse_[i] = r;
  }
  twiddles_.resize(n / 2);
  for (std::size_t k = 0; k < n / 2; ++k) {
    const double angle = -2.0 * std::numbers::pi * static_cast<double>(k) / n;
    twiddles_[k] = {std::cos(angle), std::sin(angle)};
  }
}

void Fft::Forward(std::vector<std::complex<double>> *data) const {
  auto &x = *data;
  for (std::size_t i = 0; i < n_; ++i)
    if (i < bit_reverse_[i]) std::swap(x[i], x[bit_reverse_[i]]);
  for (std::size_t len = 2; len <= n_; len <<= 1) {
    const std::size_t half = len / 2;
    const std::size_t stride = n_ / len;
    for (std::size_t start = 0; start < n_; start += len) {
      for (std::size_t k = 0; k < half; ++k) {
        const std::complex<double> t = twiddles_[k * stride] * x[start + k + half];
        x[start + k + half] = x[start + k] - t;
        x[start + k] += t;
      }
    }
  }
}

void Fft::PowerSpectrum(const std::vector<double> &input,
                        std::vector<double> *power) const {
  scratch_.assign(n_, {0.0, 0.0});
  for (std::size_t i = 0; i < input.size() && i < n_; ++i) scratch_[i] = input[i];
  Forward(&scratch_);
  power->resize(n_ / 2 + 1);
  for (std::size_t k = 0; k <= n_ / 2; ++k) (*power)[k] = std::norm(scratch_[k]);
}

}  // namespace stseg
