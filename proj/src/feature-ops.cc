// src/feature-ops.cc

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

#include <algorithm>
#include <cmath>

#include "stseg/error.h"
#include "stseg/features.h"
#include "stseg/random.h"

namespace stseg {

MelMatrix::MelMatrix(std::size_t rows, std::size_t cols,
                     std::vector<double> values, bool normalized)
    : rows_(rows), cols_(cols), values_(std::move(values)), normalized_(normalized) {
  if (values_.size() != rows_ * cols_)
    Fail(ErrorCode::kInvalidArgument, "matrix values do not match rows x cols");
}

MelMatrix ApplyCmvn(const MelMatrix &m) {
  if (m.normalized()) Fail(ErrorCode::kAlreadyNormalized, "CMVN already applied");
  if (m.rows() == 0) Fail(ErrorCode::kEmptyInput, "CMVN needs at least one row");
  const auto n = static_cast<double>(m.rows());
  MelMatrix out = m;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    double mean = 0.0;
    for (std::size_t r = 0; r < m.rows(); ++r) mean += m(r, c);
    mean /= n;
    double var = 0.0;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      const double d = m(r, c) - mean;
      var += d * d;
    }
    var /= n;
    const double scale = 1.0 / std::sqrt(var + kCmvnEpsilon);
    for (std::size_t r = 0; r < m.rows(); ++r) out(r, c) = (m(r, c) - mean) * scale;
  }
  out.set_normalized(true);
  return out;
}

MelMatrix SpecAugment(const MelMatrix &m, const SpecAugmentConfig &config) {
  if (config.max_freq_width < 0 || static_cast<std::size_t>(config.max_freq_width) > m.cols())
    Fail(ErrorCode::kInvalidArgument, "max_freq_width must be in [0, cols]");
  if (config.max_time_width < 0 || config.n_freq_masks < 0 || config.n_time_masks < 0)
    Fail(ErrorCode::kInvalidArgument, "mask counts and widths must be >= 0");
  if (!(config.max_time_fraction >= 0.0 && config.max_time_fraction <= 1.0))
    Fail(ErrorCode::kInvalidArgument, "max_time_fraction must be in [0, 1]");

  MelMatrix out = m;
  Rng rng(config.seed);
  const auto cols = static_cast<std::int64_t>(m.cols());
  const auto rows = static_cast<std::int64_t>(m.rows());
  for (int i = 0; i < config.n_freq_masks; ++i) {
    const std::int64_t w = rng.UniformInt(0, config.max_freq_width);
    const std::int64_t start = rng.UniformInt(0, cols - w);
    for (std::int64_t r = 0; r < rows; ++r)
      for (std::int64_t c = start; c < start + w; ++c)
        out(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = config.mask_value;
  }
  const auto time_cap = std::min<std::int64_t>(
      config.max_time_width,
      static_cast<std::int64_t>(std::floor(config.max_time_fraction * static_cast<double>(rows))));
  for (int i = 0; i < config.n_time_masks; ++i) {
    const std::int64_t w = rng.UniformInt(0, time_cap);
    const std::int64_t start = rng.UniformInt(0, rows - w);
    for (std::int64_t r = start; r < start + w; ++r)
      for (std::int64_t c = 0; c < cols; ++c)
        out(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = config.mask_value;
  }
  return out;
}

bool LengthFilterAccepts(const MelMatrix &m, std::size_t max_frames) {
  return m.rows() <= max_frames;
}

}  // namespace stseg
