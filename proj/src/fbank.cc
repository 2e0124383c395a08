// src/fbank.cc

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
#include <numbers>

#include "fft.h"
#include "stseg/error.h"
#include "stseg/features.h"

namespace stseg {

namespace {

void CheckConfig(const FbankConfig &config) {
  if (config.n_mels < 1)
    Fail(ErrorCode::kInvalidArgument, "n_mels must be >= 1");
  if (!(config.hop_ms > 0 && config.win_ms > config.hop_ms))
    Fail(ErrorCode::kInvalidArgument, "need win_ms > hop_ms > 0");
  if (!(config.preemphasis >= 0.0 && config.preemphasis < 1.0))
    Fail(ErrorCode::kInvalidArgument, "preemphasis must be in [0, 1)");
  if (!(config.log_floor > 0.0))
    Fail(ErrorCode::kInvalidArgument, "log_floor must be positive");
}

}  // namespace

double HzToMel(double hz) { return 2595.0 * std::log10(1.0 + hz / 700.0); }

double MelToHz(double mel) { return 700.0 * (std::pow(10.0, mel / 2595.0) - 1.0); }

std::vector<double> MelBanks::Dense(std::size_t filter) const {
  std::vector<double> dense(num_bins, 0.0);
  std::copy(weights[filter].begin(), weights[filter].end(),
            dense.begin() + static_cast<std::ptrdiff_t>(first_bin[filter]));
  return dense;
}

MelBanks ComputeMelBanks(int n_mels, int sample_rate, std::size_t fft_size,
                         double low_hz) {
  const double nyquist = sample_rate / 2.0;
  if (n_mels < 1 || !(low_hz >= 0.0 && low_hz < nyquist))
    Fail(ErrorCode::kInvalidArgument, "bad mel filterbank parameters");
  const double mel_low = HzToMel(low_hz);
  const double mel_delta = (HzToMel(nyquist) - mel_low) / (n_mels + 1);

  MelBanks banks;
  banks.num_bins = fft_size / 2 + 1;
  std::vector<double> bin_mel(banks.num_bins);
  for (std::size_t k = 0; k < banks.num_bins; ++k)
    bin_mel[k] = HzToMel(static_cast<double>(k) * sample_rate / fft_size);

  for (int m = 0; m < n_mels; ++m) {
    const double left = mel_low + m * mel_delta;
    const double center = left + mel_delta;
    const double right = center + mel_delta;
    std::size_t first = banks.num_bins;
    std::vector<double> w;
    for (std::size_t k = 0; k < banks.num_bins; ++k) {
      const double mel = bin_mel[k];
      double weight = 0.0;
      if (mel > left && mel <= center)
        weight = (mel - left) / (center - left);
      else if (mel > center && mel < right)
        weight = (right - mel) / (right - center);
      if (weight > 0.0) {
        if (first == banks.num_bins) first = k;
        w.resize(k - first + 1, 0.0);
        w[k - first] = weight;
      }
    }
    if (first == banks.num_bins) first = 0;
    banks.first_bin.push_back(first);
    banks.weights.push_back(std::move(w));
  }
  return banks;
}

std::size_t PaddedFftSize(std::size_t n) {
  std::size_t size = 1;
  while (size < n) size <<= 1;
  return size;
}

std::size_t FbankFrameCount(std::size_t num_samples, const FbankConfig &config,
                            int sample_rate) {
  const std::size_t win = static_cast<std::size_t>(sample_rate) * config.win_ms / 1000;
  const std::size_t hop = static_cast<std::size_t>(sample_rate) * config.hop_ms / 1000;
  if (num_samples < win) return 0;
  return 1 + (num_samples - win) / hop;
}

MelMatrix ComputeFbank(const AudioBuffer &buffer, const FbankConfig &config) {
  CheckConfig(config);
  const int sr = buffer.sample_rate();
  const std::size_t win = static_cast<std::size_t>(sr) * config.win_ms / 1000;
  const std::size_t hop = static_cast<std::size_t>(sr) * config.hop_ms / 1000;
  if (buffer.size() < win)
    Fail(ErrorCode::kTooShort, "signal has " + std::to_string(buffer.size()) +
                                   " samples, one window needs " +
                                   std::to_string(win));
  const std::size_t rows = FbankFrameCount(buffer.size(), config, sr);
  const std::size_t fft_size = PaddedFftSize(win);
  const Fft fft(fft_size);
  const MelBanks banks = ComputeMelBanks(config.n_mels, sr, fft_size, config.mel_low_hz);

  std::vector<double> window(win);
  for (std::size_t n = 0; n < win; ++n)
    window[n] = 0.54 - 0.46 * std::cos(2.0 * std::numbers::pi * static_cast<double>(n) /
                                       static_cast<double>(win - 1));

  MelMatrix out(rows, static_cast<std::size_t>(config.n_mels));
  const auto samples = buffer.samples();
  std::vector<double> frame(win), power;
  for (std::size_t r = 0; r < rows; ++r) {
    double mean = 0.0;
    for (std::size_t n = 0; n < win; ++n) {
      frame[n] = samples[r * hop + n];
      mean += frame[n];
    }
    mean /= static_cast<double>(win);
    for (double &x : frame) x -= mean;
    for (std::size_t n = win - 1; n > 0; --n) frame[n] -= config.preemphasis * frame[n - 1];
    frame[0] -= config.preemphasis * frame[0];
    for (std::size_t n = 0; n < win; ++n) frame[n] *= window[n];

    fft.PowerSpectrum(frame, &power);
    for (std::size_t m = 0; m < banks.weights.size(); ++m) {
      const auto &w = banks.weights[m];
      double energy = 0.0;
      for (std::size_t k = 0; k < w.size(); ++k) energy += w[k] * power[banks.first_bin[m] + k];
      out(r, m) = std::log(std::max(energy, config.log_floor));
    }
  }
  return out;
}

}  // namespace stseg
