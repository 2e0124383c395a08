// src/resegment.cc

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

#include "stseg/resegment.h"

#include <algorithm>
#include <cmath>
#include <thread>

#include "stseg/error.h"

namespace stseg {

namespace {

enum class Side { kUnknown, kLeft, kRight };

bool SampleLess(const AlignedSample &a, const AlignedSample &b) {
  if (a.talk_id != b.talk_id) return a.talk_id < b.talk_id;
  if (a.offset_s != b.offset_s) return a.offset_s < b.offset_s;
  return a.id < b.id;
}

SplitOutcome Discard(DiscardReason reason) {
  SplitOutcome out;
  out.kind = SplitOutcome::Kind::kDiscarded;
  out.reason = reason;
  return out;
}

}  // namespace

void ValidateSample(const AlignedSample &s) {
  double prev_start = 0.0;
  for (const SourceWord &w : s.src_words) {
    if (!w.timing) continue;
    if (w.timing->start_s < 0.0 || w.timing->end_s < w.timing->start_s)
      Fail(ErrorCode::kInvalidArgument, s.id + ": bad timing for '" + w.token + "'");
    if (w.timing->start_s < prev_start)
      Fail(ErrorCode::kInvalidArgument, s.id + ": word start times decrease");
    prev_start = w.timing->start_s;
  }
  for (const AlignmentLink &l : s.links)
    if (l.src >= s.src_words.size() || l.tgt >= s.tgt_words.size())
      Fail(ErrorCode::kInvalidArgument,
           s.id + ": link " + std::to_string(l.src) + "-" + std::to_string(l.tgt) +
               " out of range");
}

std::string_view DiscardReasonName(DiscardReason reason) {
  switch (reason) {
    case DiscardReason::kMissingTiming: return "missing_timing";
    case DiscardReason::kCrossingAlignment: return "crossing_alignment";
    case DiscardReason::kEmptySide: return "empty_side";
  }
  return "unknown";
}

std::size_t ResegmentReport::DiscardedTotal() const {
  std::size_t total = 0;
  for (const auto &[reason, n] : discarded) total += n;
  return total;
}

std::optional<std::size_t> SampleBoundary(std::size_t n_words, Rng &rng) {
  if (n_words < 2) return std::nullopt;
  return static_cast<std::size_t>(rng.UniformInt(1, static_cast<std::int64_t>(n_words) - 1));
}

std::optional<std::size_t> ConsistentTargetBoundary(const AlignedSample &s,
                                                    std::size_t b) {
  const std::size_t m = s.tgt_words.size();
  std::vector<Side> side(m, Side::kUnknown);
  for (const AlignmentLink &l : s.links) {
    const Side want = l.src < b ? Side::kLeft : Side::kRight;
    if (side[l.tgt] != Side::kUnknown && side[l.tgt] != want) return std::nullopt;
    side[l.tgt] = want;
  }
  std::vector<std::size_t> aligned;
  for (std::size_t j = 0; j < m; ++j)
    if (side[j] != Side::kUnknown) aligned.push_back(j);
  if (aligned.empty()) return 0;

  std::vector<Side> resolved = side;
  for (std::size_t j = 0; j < m; ++j) {
    if (side[j] != Side::kUnknown) continue;
    auto right = std::lower_bound(aligned.begin(), aligned.end(), j);
    if (right == aligned.begin()) {
      resolved[j] = side[*right];
    } else if (right == aligned.end()) {
      resolved[j] = side[*(right - 1)];
    } else {
      const std::size_t l = *(right - 1), r = *right;
      resolved[j] = (j - l <= r - j) ? side[l] : side[r];
    }
  }
  std::size_t t_star = 0;
  while (t_star < m && resolved[t_star] == Side::kLeft) ++t_star;
  for (std::size_t j = t_star; j < m; ++j)
    if (resolved[j] != Side::kRight) return std::nullopt;
  return t_star;
}

SplitOutcome SplitSample(const AlignedSample &s, std::size_t b) {
  const std::size_t n = s.src_words.size();
  if (b < 1 || b + 1 > n)
    Fail(ErrorCode::kBoundaryOutOfRange,
         s.id + ": boundary " + std::to_string(b) + " outside [1, " +
             std::to_string(n == 0 ? 0 : n - 1) + "]");
  const auto &before = s.src_words[b - 1].timing;
  const auto &after = s.src_words[b].timing;
  if (!before || !after) return Discard(DiscardReason::kMissingTiming);

  double cut = (before->end_s + after->start_s) / 2.0;
  if (before->end_s > after->start_s) cut = after->start_s;

  const auto t_star = ConsistentTargetBoundary(s, b);
  if (!t_star) return Discard(DiscardReason::kCrossingAlignment);
  const std::size_t m = s.tgt_words.size();
  if (*t_star == 0 || *t_star >= m || !(cut > 0.0) || !(cut < s.duration_s))
    return Discard(DiscardReason::kEmptySide);

  SplitOutcome out;
  out.kind = SplitOutcome::Kind::kSplit;
  out.cut_s = cut;
  out.target_boundary = *t_star;

  AlignedSample &left = out.left;
  AlignedSample &right = out.right;
  for (AlignedSample *side : {&left, &right}) {
    side->wav = s.wav;
    side->talk_id = s.talk_id;
  }
  left.id = s.id + "_0";
  right.id = s.id + "_1";
  left.offset_s = s.offset_s;
  left.duration_s = cut;
  right.offset_s = s.offset_s + cut;
  right.duration_s = s.duration_s - cut;

  left.src_words.assign(s.src_words.begin(), s.src_words.begin() + static_cast<std::ptrdiff_t>(b));
  for (std::size_t i = b; i < n; ++i) {
    SourceWord w = s.src_words[i];
    if (w.timing) {
      w.timing->start_s -= cut;
      w.timing->end_s -= cut;
    }
    right.src_words.push_back(std::move(w));
  }
  const auto split_at = static_cast<std::ptrdiff_t>(*t_star);
  left.tgt_words.assign(s.tgt_words.begin(), s.tgt_words.begin() + split_at);
  right.tgt_words.assign(s.tgt_words.begin() + split_at, s.tgt_words.end());
  for (const AlignmentLink &l : s.links) {
    if (l.src < b)
      left.links.push_back(l);
    else
      right.links.push_back({l.src - b, l.tgt - *t_star});
  }
  return out;
}

std::optional<AlignedSample> MergeAdjacent(const AlignedSample &a,
                                           const AlignedSample &b) {
  if (a.talk_id != b.talk_id) return std::nullopt;
  if (std::abs(a.offset_s + a.duration_s - b.offset_s) > kMergeGapTolerance + 1e-9)
    return std::nullopt;
  AlignedSample merged;
  merged.id = a.id + "+" + b.id;
  merged.wav = a.wav;
  merged.talk_id = a.talk_id;
  merged.offset_s = a.offset_s;
  merged.duration_s = a.duration_s + b.duration_s;
  merged.src_words = a.src_words;
  for (SourceWord w : b.src_words) {
    if (w.timing) {
      w.timing->start_s += a.duration_s;
      w.timing->end_s += a.duration_s;
    }
    merged.src_words.push_back(std::move(w));
  }
  merged.tgt_words = a.tgt_words;
  merged.tgt_words.insert(merged.tgt_words.end(), b.tgt_words.begin(), b.tgt_words.end());
  merged.links = a.links;
  for (const AlignmentLink &l : b.links)
    merged.links.push_back({l.src + a.src_words.size(), l.tgt + a.tgt_words.size()});
  return merged;
}

ResegmentResult ResegmentCorpus(std::vector<AlignedSample> corpus,
                                std::uint64_t seed, ResegmentMode mode,
                                unsigned num_threads) {
  for (const AlignedSample &s : corpus) ValidateSample(s);
  std::sort(corpus.begin(), corpus.end(), SampleLess);

  ResegmentResult result;
  ResegmentReport &report = result.report;
  report.manifest_count = corpus.size();

  std::vector<AlignedSample> units;
  if (mode == ResegmentMode::kSplitOnly) {
    units = std::move(corpus);
  } else {
    // Pair 1st+2nd, 3rd+4th, ... within each talk.
    std::size_t i = 0;
    while (i < corpus.size()) {
      std::size_t j = i;
      while (j < corpus.size() && corpus[j].talk_id == corpus[i].talk_id) ++j;
      for (std::size_t k = i; k < j; k += 2) {
        if (k + 1 < j) {
          if (auto merged = MergeAdjacent(corpus[k], corpus[k + 1])) {
            units.push_back(std::move(*merged));
            ++report.merged_count;
            continue;
          }
          units.push_back(corpus[k]);
          units.push_back(corpus[k + 1]);
        } else {
          units.push_back(corpus[k]);
        }
      }
      i = j;
    }
  }
  report.input_count = units.size();

  std::vector<SplitOutcome> outcomes(units.size());
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t u = begin; u < end; ++u) {
      Rng rng(DeriveSeed(seed, units[u].id));
      const auto b = SampleBoundary(units[u].src_words.size(), rng);
      if (b) outcomes[u] = SplitSample(units[u], *b);
    }
  };
  const std::size_t threads = std::clamp<std::size_t>(num_threads, 1, std::max<std::size_t>(units.size(), 1));
  if (threads == 1) {
    work(0, units.size());
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (units.size() + threads - 1) / threads;
    for (std::size_t t = 0; t < threads; ++t) {
      const std::size_t begin = std::min(units.size(), t * chunk);
      const std::size_t end = std::min(units.size(), begin + chunk);
      pool.emplace_back(work, begin, end);
    }
    for (auto &th : pool) th.join();
  }

  for (std::size_t u = 0; u < units.size(); ++u) {
    SplitOutcome &o = outcomes[u];
    switch (o.kind) {
      case SplitOutcome::Kind::kSplit:
        ++report.split_count;
        result.samples.push_back(std::move(o.left));
        result.samples.push_back(std::move(o.right));
        break;
      case SplitOutcome::Kind::kUnchanged:
        ++report.unchanged_count;
        result.samples.push_back(std::move(units[u]));
        break;
      case SplitOutcome::Kind::kDiscarded:
        ++report.discarded[o.reason];
        break;
    }
  }
  std::sort(result.samples.begin(), result.samples.end(), SampleLess);
  report.output_count = result.samples.size();
  report.discard_fraction =
      report.input_count == 0
          ? 0.0
          : static_cast<double>(report.DiscardedTotal()) / static_cast<double>(report.input_count);
  return result;
}

}  // namespace stseg
