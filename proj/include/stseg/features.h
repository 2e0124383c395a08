// include/stseg/features.h

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

#ifndef STSEG_FEATURES_H_
#define STSEG_FEATURES_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "stseg/audio-io.h"

namespace stseg {

struct FbankConfig {
  int win_ms = 25;
  int hop_ms = 10;
  int n_mels = 80;
  double preemphasis = 0.97;
  double mel_low_hz = 20.0;
  double log_floor = 1e-10;
  std::size_t max_frames = 3000;
};

// Row-major frames x bins matrix of log-Mel energies.
class MelMatrix {
 public:
  MelMatrix() = default;
  MelMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), values_(rows * cols, fill) {}
  // Throws kInvalidArgument unless values.size() == rows * cols.
  MelMatrix(std::size_t rows, std::size_t cols, std::vector<double> values,
            bool normalized = false);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool normalized() const { return normalized_; }
  void set_normalized(bool v) { normalized_ = v; }

  double &operator()(std::size_t r, std::size_t c) { return values_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return values_[r * cols_ + c]; }
  const std::vector<double> &values() const { return values_; }

  bool operator==(const MelMatrix &) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> values_;
  bool normalized_ = false;
};

// HTK mel scale, 2595 * log10(1 + hz / 700).
double HzToMel(double hz);
double MelToHz(double mel);

// Triangular filters, evenly spaced in mel between low_hz and Nyquist, laid
// out over the fft_size / 2 + 1 power-spectrum bins.
struct MelBanks {
  std::size_t num_bins = 0;
  // Per filter: first non-zero bin and the weights from there on.
  std::vector<std::size_t> first_bin;
  std::vector<std::vector<double>> weights;

  std::vector<double> Dense(std::size_t filter) const;
};

MelBanks ComputeMelBanks(int n_mels, int sample_rate, std::size_t fft_size,
                         double low_hz);

// Smallest power of two >= n.
std::size_t PaddedFftSize(std::size_t n);

// Number of frames with snip-edges framing: 1 + (N - win) / hop, or 0 when
// the signal is shorter than one window.
std::size_t FbankFrameCount(std::size_t num_samples, const FbankConfig &config,
                            int sample_rate);

// Per frame: mean removal, pre-emphasis (first sample scaled by 1 - coeff),
// Hamming window, zero padding, power spectrum, mel filters, natural log of
// max(energy, log_floor). Throws kTooShort below one window.
MelMatrix ComputeFbank(const AudioBuffer &buffer, const FbankConfig &config);

inline constexpr double kCmvnEpsilon = 1e-8;

// Per-column standardization with population variance. Throws
// kAlreadyNormalized if the matrix is already normalized, kEmptyInput for 0 rows.
MelMatrix ApplyCmvn(const MelMatrix &m);

struct SpecAugmentConfig {
  int n_freq_masks = 2;
  int max_freq_width = 27;
  int n_time_masks = 2;
  int max_time_width = 100;
  double max_time_fraction = 1.0;
  double mask_value = 0.0;
  std::uint64_t seed = 0;
};

// Frequency then time masking drawn from Rng(config.seed).
MelMatrix SpecAugment(const MelMatrix &m, const SpecAugmentConfig &config);

// True when the matrix is kept, i.e. rows <= max_frames.
bool LengthFilterAccepts(const MelMatrix &m, std::size_t max_frames);

// FBNK binary: "FBNK", u32 rows, u32 cols, rows*cols little-endian float32.
std::string EncodeFeatures(const MelMatrix &m);
MelMatrix DecodeFeatures(const std::string &bytes);
void WriteFeatures(const MelMatrix &m, const std::string &path);
MelMatrix ReadFeatures(const std::string &path);

}  // namespace stseg

#endif  // STSEG_FEATURES_H_
