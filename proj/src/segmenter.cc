// src/segmenter.cc

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

#include "stseg/segmenter.h"

#include <algorithm>
#include <cmath>

#include "stseg/error.h"

namespace stseg {

namespace {

double FramesFromSeconds(double seconds, int frame_ms) {
  const double frames = seconds * 1000.0 / frame_ms;
  const double nearest = std::round(frames);
  return std::abs(frames - nearest) < 1e-9 ? nearest : frames;
}

void CheckConfig(const SegmenterConfig &config) {
  if (!(config.min_len_s > 0.0) || !(config.min_len_s < config.max_len_s))
    Fail(ErrorCode::kInvalidArgument,
         "segment lengths must satisfy 0 < min < max");
}

struct Run {
  std::size_t begin;
  std::size_t end;
};

// Maximal non-voiced runs of the label sequence.
std::vector<Run> NonVoicedRuns(const std::vector<bool> &labels) {
  std::vector<Run> runs;
  std::size_t i = 0;
  while (i < labels.size()) {
    if (labels[i]) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < labels.size() && !labels[j]) ++j;
    runs.push_back({i, j});
    i = j;
  }
  return runs;
}

}  // namespace

std::size_t MinSegmentFrames(const SegmenterConfig &config, int frame_ms) {
  FrameLength(kSampleRate, frame_ms);  // validates frame_ms
  return static_cast<std::size_t>(
      std::ceil(FramesFromSeconds(config.min_len_s, frame_ms)));
}

std::size_t MaxSegmentFrames(const SegmenterConfig &config, int frame_ms) {
  FrameLength(kSampleRate, frame_ms);
  return static_cast<std::size_t>(
      std::floor(FramesFromSeconds(config.max_len_s, frame_ms)));
}

std::vector<FrameSpan> HybridSegmentFrames(const VadDecisions &decisions,
                                           const SegmenterConfig &config) {
  CheckConfig(config);
  if (decisions.labels.empty())
    Fail(ErrorCode::kEmptyInput, "no VAD frames to segment");
  const std::size_t fmin = MinSegmentFrames(config, decisions.frame_ms);
  const std::size_t fmax = MaxSegmentFrames(config, decisions.frame_ms);
  if (fmin >= fmax)
    Fail(ErrorCode::kConfigTooTight,
         "minimum and maximum length collapse to " + std::to_string(fmin) +
             " >= " + std::to_string(fmax) + " frames");

  const std::size_t total = decisions.size();
  const std::vector<Run> runs = NonVoicedRuns(decisions.labels);
  std::vector<FrameSpan> spans;
  std::size_t c = 0;
  std::size_t first_run = 0;  // runs ending at or before c are never candidates
  while (total - c > fmax) {
    const std::size_t win_lo = c + fmin;
    const std::size_t win_hi = c + fmax + 1;  // exclusive
    while (first_run < runs.size() && runs[first_run].end <= win_lo) ++first_run;

    std::size_t best_score = 0;
    std::size_t cut = c + fmax;
    for (std::size_t r = first_run; r < runs.size() && runs[r].begin < win_hi; ++r) {
      const std::size_t lo = std::max(runs[r].begin, win_lo);
      const std::size_t hi = std::min(runs[r].end, win_hi);
      const std::size_t score = config.scoring == PauseScoring::kFullRun
                                    ? runs[r].end - runs[r].begin
                                    : hi - lo;
      // Strict comparison keeps the earliest run on ties.
      if (score > best_score) {
        best_score = score;
        cut = (lo + hi) / 2;
      }
    }
    spans.push_back({c, cut});
    c = cut;
  }
  spans.push_back({c, total});
  return spans;
}

std::vector<FrameSpan> VadSegmentFrames(const VadDecisions &decisions,
                                        std::size_t min_pause_frames,
                                        double min_speech_s) {
  if (min_pause_frames < 1)
    Fail(ErrorCode::kInvalidArgument, "min_pause_frames must be >= 1");
  if (!(min_speech_s >= 0.0))
    Fail(ErrorCode::kInvalidArgument, "min_speech_s must be >= 0");
  const auto &labels = decisions.labels;
  std::vector<FrameSpan> merged;
  std::size_t i = 0;
  while (i < labels.size()) {
    if (!labels[i]) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < labels.size() && labels[j]) ++j;
    if (!merged.empty() && i - merged.back().end < min_pause_frames)
      merged.back().end = j;
    else
      merged.push_back({i, j});
    i = j;
  }
  const double min_frames = FramesFromSeconds(min_speech_s, decisions.frame_ms);
  std::vector<FrameSpan> kept;
  for (const FrameSpan &s : merged)
    if (static_cast<double>(s.end - s.begin) >= min_frames) kept.push_back(s);
  return kept;
}

std::vector<Segment> SpansToSegments(const std::vector<FrameSpan> &spans,
                                     int frame_ms, const std::string &source,
                                     const std::string &speaker_id) {
  std::vector<Segment> out;
  out.reserve(spans.size());
  for (const FrameSpan &s : spans) {
    out.push_back(Segment{static_cast<double>(s.begin) * frame_ms / 1000.0,
                          static_cast<double>(s.end - s.begin) * frame_ms / 1000.0,
                          source, speaker_id});
  }
  return out;
}

std::vector<Segment> HybridSegment(const VadDecisions &decisions,
                                   const SegmenterConfig &config,
                                   const std::string &source,
                                   const std::string &speaker_id) {
  return SpansToSegments(HybridSegmentFrames(decisions, config),
                         decisions.frame_ms, source, speaker_id);
}

std::vector<Segment> VadSegment(const VadDecisions &decisions,
                                std::size_t min_pause_frames,
                                double min_speech_s, const std::string &source,
                                const std::string &speaker_id) {
  return SpansToSegments(
      VadSegmentFrames(decisions, min_pause_frames, min_speech_s),
      decisions.frame_ms, source, speaker_id);
}

SegmentStats ComputeSegmentStats(const std::vector<Segment> &segments) {
  if (segments.empty()) Fail(ErrorCode::kEmptyInput, "no segments");
  SegmentStats st;
  st.count = segments.size();
  st.min_duration_s = segments.front().duration_s;
  st.max_duration_s = segments.front().duration_s;
  double sum = 0.0;
  for (const Segment &s : segments) {
    st.min_duration_s = std::min(st.min_duration_s, s.duration_s);
    st.max_duration_s = std::max(st.max_duration_s, s.duration_s);
    sum += s.duration_s;
    const auto bin = static_cast<std::size_t>(std::max(0.0, std::floor(s.duration_s)));
    if (st.histogram.size() <= bin) st.histogram.resize(bin + 1, 0);
    ++st.histogram[bin];
  }
  st.mean_duration_s = sum / static_cast<double>(st.count);

  std::map<std::string, std::vector<std::pair<double, double>>> by_source;
  for (const Segment &s : segments)
    by_source[s.source].emplace_back(s.offset_s, s.offset_s + s.duration_s);
  for (auto &[source, intervals] : by_source) {
    std::sort(intervals.begin(), intervals.end());
    double end = 0.0, cur_lo = intervals.front().first, cur_hi = cur_lo;
    for (const auto &[lo, hi] : intervals) {
      if (lo > cur_hi) {
        st.covered_s += cur_hi - cur_lo;
        cur_lo = lo;
        cur_hi = hi;
      } else {
        cur_hi = std::max(cur_hi, hi);
      }
      end = std::max(end, hi);
    }
    st.covered_s += cur_hi - cur_lo;
    st.timeline_s += end;
  }
  st.coverage = st.timeline_s > 0.0 ? st.covered_s / st.timeline_s : 0.0;
  return st;
}

}  // namespace stseg
