// include/stseg/vad.h

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

#ifndef STSEG_VAD_H_
#define STSEG_VAD_H_

#include <cstddef>
#include <string>
#include <vector>

#include "stseg/audio-io.h"

namespace stseg {

struct VadConfig {
  int frame_ms = 20;
  int aggressiveness = 2;  // 0..3, higher keeps fewer frames
  int hangover_frames = 4;
};

// Per-frame voiced/non-voiced labels.
struct VadDecisions {
  int frame_ms = 20;
  std::vector<bool> labels;  // true = voiced
  double total_audio_seconds = 0.0;

  std::size_t size() const { return labels.size(); }
  double FrameSeconds() const { return frame_ms / 1000.0; }
};

// Maximal run of non-voiced frames, [start_frame, end_frame).
struct Pause {
  std::size_t start_frame = 0;
  std::size_t end_frame = 0;
  std::size_t length_frames() const { return end_frame - start_frame; }
  bool operator==(const Pause &) const = default;
};

// Energy threshold in dB above the noise floor for each aggressiveness level.
double VadMarginDb(int aggressiveness);

// Per-frame log energy 10*log10(mean(x^2) + 1e-12).
std::vector<double> FrameLogEnergies(const AudioBuffer &buffer, int frame_ms);

// Adaptive-energy detector. The noise floor is the nearest-rank 10th
// percentile of the trailing 100 frames (current frame included), limited to
// rise by at most kNoiseFloorRiseDbPerSecond; it falls without limit. A frame
// is voiced iff its energy exceeds floor + margin; voiced runs are then
// extended right by hangover_frames.
VadDecisions DetectVoice(const AudioBuffer &buffer, const VadConfig &config);

inline constexpr std::size_t kNoiseFloorWindow = 100;
inline constexpr double kNoiseFloorRiseDbPerSecond = 5.0;

// All maximal non-voiced runs of at least min_pause_frames, by start frame.
std::vector<Pause> ExtractPauses(const VadDecisions &decisions,
                                 std::size_t min_pause_frames);

// Text format: "#vad frame_ms=<int> frames=<int>" then "<index>\t<0|1>" lines.
std::string FormatDecisions(const VadDecisions &decisions);
VadDecisions ParseDecisions(const std::string &text);
void WriteDecisions(const VadDecisions &decisions, const std::string &path);
VadDecisions ReadDecisions(const std::string &path);

}  // namespace stseg

#endif  // STSEG_VAD_H_
