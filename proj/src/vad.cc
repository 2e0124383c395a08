// src/vad.cc

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

#include "stseg/vad.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "file-io.h"
#include "stseg/error.h"

namespace stseg {

namespace {

double Percentile10(std::vector<double> window) {
  // Nearest rank: the ceil(0.1 n)-th smallest value.
  const std::size_t rank = (window.size() + 9) / 10;
  auto nth = window.begin() + static_cast<std::ptrdiff_t>(rank - 1);
  std::nth_element(window.begin(), nth, window.end());
  return *nth;
}

bool ParseSize(std::string_view s, std::size_t *out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), *out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

[[noreturn]] void BadFormat(std::size_t line_no, const std::string &why) {
  Fail(ErrorCode::kBadDecisionsFormat,
       "line " + std::to_string(line_no) + ": " + why);
}

}  // namespace

double VadMarginDb(int aggressiveness) {
  switch (aggressiveness) {
    case 0: return 3.0;
    case 1: return 6.0;
    case 2: return 9.0;
    case 3: return 12.0;
  }
  Fail(ErrorCode::kInvalidArgument,
       "aggressiveness " + std::to_string(aggressiveness) + " not in 0..3");
}

std::vector<double> FrameLogEnergies(const AudioBuffer &buffer, int frame_ms) {
  const std::size_t len = FrameLength(buffer.sample_rate(), frame_ms);
  const std::size_t frames = buffer.size() / len;
  std::vector<double> energies(frames);
  const auto samples = buffer.samples();
  for (std::size_t f = 0; f < frames; ++f) {
    double sum = 0.0;
    for (std::size_t i = f * len; i < (f + 1) * len; ++i) {
      const double x = samples[i];
      sum += x * x;
    }
    energies[f] = 10.0 * std::log10(sum / len + 1e-12);
  }
  return energies;
}

VadDecisions DetectVoice(const AudioBuffer &buffer, const VadConfig &config) {
  const double margin = VadMarginDb(config.aggressiveness);
  if (config.hangover_frames < 0)
    Fail(ErrorCode::kInvalidArgument, "hangover_frames must be >= 0");
  const std::vector<double> energy = FrameLogEnergies(buffer, config.frame_ms);
  const double max_rise = kNoiseFloorRiseDbPerSecond * config.frame_ms / 1000.0;

  std::vector<bool> raw(energy.size(), false);
  std::vector<double> window;
  window.reserve(kNoiseFloorWindow);
  double floor = energy.empty() ? 0.0 : energy[0];
  for (std::size_t i = 0; i < energy.size(); ++i) {
    const std::size_t begin = i + 1 >= kNoiseFloorWindow ? i + 1 - kNoiseFloorWindow : 0;
    window.assign(energy.begin() + static_cast<std::ptrdiff_t>(begin),
                  energy.begin() + static_cast<std::ptrdiff_t>(i + 1));
    const double p10 = Percentile10(window);
    floor = (i == 0) ? energy[0] : std::min(p10, floor + max_rise);
    raw[i] = energy[i] > floor + margin;
  }

  VadDecisions out;
  out.frame_ms = config.frame_ms;
  out.total_audio_seconds = buffer.DurationSeconds();
  out.labels = raw;
  const auto hang = static_cast<std::size_t>(config.hangover_frames);
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (!raw[i]) continue;
    for (std::size_t j = i + 1; j <= i + hang && j < raw.size(); ++j)
      out.labels[j] = true;
  }
  return out;
}

std::vector<Pause> ExtractPauses(const VadDecisions &decisions,
                                 std::size_t min_pause_frames) {
  if (min_pause_frames < 1)
    Fail(ErrorCode::kInvalidArgument, "min_pause_frames must be >= 1");
  std::vector<Pause> pauses;
  const auto &labels = decisions.labels;
  std::size_t i = 0;
  while (i < labels.size()) {
    if (labels[i]) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < labels.size() && !labels[j]) ++j;
    if (j - i >= min_pause_frames) pauses.push_back(Pause{i, j});
    i = j;
  }
  return pauses;
}

std::string FormatDecisions(const VadDecisions &decisions) {
  std::string out = "#vad frame_ms=" + std::to_string(decisions.frame_ms) +
                    " frames=" + std::to_string(decisions.size()) + "\n";
  for (std::size_t i = 0; i < decisions.size(); ++i) {
    out += std::to_string(i);
    out += decisions.labels[i] ? "\t1\n" : "\t0\n";
  }
  return out;
}

VadDecisions ParseDecisions(const std::string &text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) BadFormat(1, "missing header");
  constexpr std::string_view kPrefix = "#vad frame_ms=";
  constexpr std::string_view kFrames = " frames=";
  std::string_view header(line);
  const auto frames_pos = header.find(kFrames);
  if (!header.starts_with(kPrefix) || frames_pos == std::string_view::npos)
    BadFormat(1, "missing header");
  std::size_t frame_ms = 0, frames = 0;
  if (!ParseSize(header.substr(kPrefix.size(), frames_pos - kPrefix.size()),
                 &frame_ms) ||
      !ParseSize(header.substr(frames_pos + kFrames.size()), &frames))
    BadFormat(1, "malformed header");
  if (frame_ms != 10 && frame_ms != 20 && frame_ms != 30)
    BadFormat(1, "frame_ms must be 10, 20 or 30");

  VadDecisions out;
  out.frame_ms = static_cast<int>(frame_ms);
  out.labels.reserve(frames);
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tab = line.find('\t');
    std::size_t index = 0;
    if (tab == std::string::npos ||
        !ParseSize(std::string_view(line).substr(0, tab), &index))
      BadFormat(line_no, "expected '<index>\\t<0|1>'");
    if (index != out.labels.size())
      BadFormat(line_no, "frame index " + std::to_string(index) +
                             " out of sequence");
    const std::string_view label = std::string_view(line).substr(tab + 1);
    if (label != "0" && label != "1")
      BadFormat(line_no, "label must be 0 or 1");
    out.labels.push_back(label == "1");
  }
  if (out.labels.size() != frames)
    BadFormat(line_no, "header declares " + std::to_string(frames) +
                           " frames, found " + std::to_string(out.labels.size()));
  out.total_audio_seconds = static_cast<double>(frames) * out.frame_ms / 1000.0;
  return out;
}

void WriteDecisions(const VadDecisions &decisions, const std::string &path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) Fail(ErrorCode::kIo, "cannot write '" + path + "'");
  f << FormatDecisions(decisions);
  if (!f) Fail(ErrorCode::kIo, "write failed for '" + path + "'");
}

VadDecisions ReadDecisions(const std::string &path) {
  return ParseDecisions(ReadFileOrFail(path));
}

}  // namespace stseg
