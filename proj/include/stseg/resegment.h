// include/stseg/resegment.h

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

#ifndef STSEG_RESEGMENT_H_
#define STSEG_RESEGMENT_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stseg/random.h"

namespace stseg {

struct WordTiming {
  double start_s = 0.0;
  double end_s = 0.0;
  bool operator==(const WordTiming &) const = default;
};

struct SourceWord {
  std::string token;
  std::optional<WordTiming> timing;  // relative to the sample start
  bool operator==(const SourceWord &) const = default;
};

// Pharaoh "i-j": source word i aligned to target word j.
struct AlignmentLink {
  std::size_t src = 0;
  std::size_t tgt = 0;
  auto operator<=>(const AlignmentLink &) const = default;
};

// One ST training sample with its forced-alignment word timings and its
// source-target word alignment.
struct AlignedSample {
  std::string id;
  std::string wav;
  std::string talk_id;
  double offset_s = 0.0;
  double duration_s = 0.0;
  std::vector<SourceWord> src_words;
  std::vector<std::string> tgt_words;
  std::vector<AlignmentLink> links;

  bool operator==(const AlignedSample &) const = default;
};

// Throws kInvalidArgument when timings are negative, inverted or out of
// order, or a link index is out of range.
void ValidateSample(const AlignedSample &s);

enum class DiscardReason { kMissingTiming, kCrossingAlignment, kEmptySide };
std::string_view DiscardReasonName(DiscardReason reason);

struct SplitOutcome {
  enum class Kind { kSplit, kUnchanged, kDiscarded };
  Kind kind = Kind::kUnchanged;
  AlignedSample left;
  AlignedSample right;
  DiscardReason reason = DiscardReason::kMissingTiming;  // kDiscarded only
  double cut_s = 0.0;               // kSplit only, relative to sample start
  std::size_t target_boundary = 0;  // kSplit only
};

// Uniform interior boundary b in [1, n_words - 1]; nullopt below two words.
std::optional<std::size_t> SampleBoundary(std::size_t n_words, Rng &rng);

// Target boundary consistent with source boundary b: every link (i, j) has
// i < b exactly when j < t*. Unaligned target words take the side of their
// nearest aligned neighbour (the left one on ties). nullopt when no such t*
// exists. With no aligned target words the result is 0.
std::optional<std::size_t> ConsistentTargetBoundary(const AlignedSample &s,
                                                    std::size_t b);

// Splits before source word b; throws kBoundaryOutOfRange unless
// 1 <= b <= n_src - 1.
SplitOutcome SplitSample(const AlignedSample &s, std::size_t b);

inline constexpr double kMergeGapTolerance = 0.1;  // seconds

// Joins b after a when both come from the same talk and a ends within
// kMergeGapTolerance of b's start. b's timings shift by a.duration_s.
std::optional<AlignedSample> MergeAdjacent(const AlignedSample &a,
                                           const AlignedSample &b);

enum class ResegmentMode { kSplitOnly, kMergeThenSplit };

struct ResegmentReport {
  std::size_t manifest_count = 0;  // samples read
  std::size_t merged_count = 0;    // merges performed
  std::size_t input_count = 0;     // units processed after merging
  std::size_t split_count = 0;
  std::size_t unchanged_count = 0;
  std::map<DiscardReason, std::size_t> discarded;
  std::size_t output_count = 0;
  double discard_fraction = 0.0;

  std::size_t DiscardedTotal() const;
};

struct ResegmentResult {
  std::vector<AlignedSample> samples;  // sorted by (talk_id, offset_s, id)
  ResegmentReport report;
};

// Each unit draws its boundary from Rng(DeriveSeed(seed, unit.id)), so the
// result does not depend on input order or num_threads.
ResegmentResult ResegmentCorpus(std::vector<AlignedSample> corpus,
                                std::uint64_t seed, ResegmentMode mode,
                                unsigned num_threads = 1);

// Nine-column TSV: id, wav, talk_id, offset, duration, src_text, src_times,
// tgt_text, links. Errors are kBadManifest with the line number.
std::vector<AlignedSample> ParseAlignedCorpus(const std::string &text);
std::string FormatAlignedSample(const AlignedSample &s);
std::string FormatAlignedCorpus(const std::vector<AlignedSample> &corpus);
std::vector<AlignedSample> ReadAlignedCorpus(const std::string &path);
void WriteAlignedCorpus(const std::vector<AlignedSample> &corpus,
                        const std::string &path);

}  // namespace stseg

#endif  // STSEG_RESEGMENT_H_
