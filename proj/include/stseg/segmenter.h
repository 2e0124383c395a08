// include/stseg/segmenter.h

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

#ifndef STSEG_SEGMENTER_H_
#define STSEG_SEGMENTER_H_

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "stseg/vad.h"

namespace stseg {

// How a pause that intersects the admissible cut window is scored.
enum class PauseScoring {
  kFullRun,   // length of the whole pause, including frames outside the window
  kInWindow,  // only the frames inside the window
};

struct SegmenterConfig {
  double min_len_s = 17.0;
  double max_len_s = 20.0;
  PauseScoring scoring = PauseScoring::kFullRun;
};

// Half-open frame interval [begin, end).
struct FrameSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
  bool operator==(const FrameSpan &) const = default;
};

struct Segment {
  double offset_s = 0.0;
  double duration_s = 0.0;
  std::string source;  // wav name
  std::string speaker_id;
};

// Admissible segment lengths in frames: ceil(min/f) and floor(max/f), with
// values within 1e-9 of an integer snapped to it before rounding.
std::size_t MinSegmentFrames(const SegmenterConfig &config, int frame_ms);
std::size_t MaxSegmentFrames(const SegmenterConfig &config, int frame_ms);

// Hybrid length-constrained segmentation. From the current start c, while
// more than Fmax frames remain, candidate cut frames are [c+Fmin, c+Fmax].
// Among pauses that intersect that window the longest wins (earliest start on
// ties) and the cut lands at floor((lo + hi) / 2) of the half-open
// intersection [lo, hi). With no pause the cut is forced at c+Fmax. The
// remainder becomes the last span, so the spans tile [0, F).
std::vector<FrameSpan> HybridSegmentFrames(const VadDecisions &decisions,
                                           const SegmenterConfig &config);

// Pause-only baseline: voiced runs joined across non-voiced gaps shorter than
// min_pause_frames, then spans shorter than min_speech_s dropped. Leading and
// trailing non-voiced frames never belong to a span.
std::vector<FrameSpan> VadSegmentFrames(const VadDecisions &decisions,
                                        std::size_t min_pause_frames,
                                        double min_speech_s);

inline constexpr std::size_t kDefaultMinPauseFrames = 10;
inline constexpr double kDefaultMinSpeechSeconds = 0.5;

std::vector<Segment> SpansToSegments(const std::vector<FrameSpan> &spans,
                                     int frame_ms, const std::string &source,
                                     const std::string &speaker_id);

std::vector<Segment> HybridSegment(const VadDecisions &decisions,
                                   const SegmenterConfig &config,
                                   const std::string &source,
                                   const std::string &speaker_id);

std::vector<Segment> VadSegment(const VadDecisions &decisions,
                                std::size_t min_pause_frames,
                                double min_speech_s, const std::string &source,
                                const std::string &speaker_id);

struct SegmentStats {
  std::size_t count = 0;
  double min_duration_s = 0.0;
  double mean_duration_s = 0.0;
  double max_duration_s = 0.0;
  // histogram[i] counts durations in [i, i+1) seconds.
  std::vector<std::size_t> histogram;
  double covered_s = 0.0;   // union of segment intervals, summed over sources
  double timeline_s = 0.0;  // per source, latest segment end; summed
  double coverage = 0.0;    // covered_s / timeline_s
};

// Throws kEmptyInput for an empty list.
SegmentStats ComputeSegmentStats(const std::vector<Segment> &segments);

// One record per line, sorted by (source, offset):
// "- {duration: D, offset: O, speaker_id: ID, wav: NAME}", D and O with six
// decimals.
std::string FormatManifest(std::vector<Segment> segments);
std::vector<Segment> ParseManifest(const std::string &text);

}  // namespace stseg

#endif  // STSEG_SEGMENTER_H_
