// src/report-json.cc

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

#include "stseg/report-json.h"

#include "json.hpp"

namespace stseg {

using nlohmann::ordered_json;

std::string SegmentStatsJson(const SegmentStats &stats) {
  ordered_json j;
  j["count"] = stats.count;
  j["min_duration_s"] = stats.min_duration_s;
  j["mean_duration_s"] = stats.mean_duration_s;
  j["max_duration_s"] = stats.max_duration_s;
  j["histogram_1s"] = stats.histogram;
  j["covered_s"] = stats.covered_s;
  j["timeline_s"] = stats.timeline_s;
  j["coverage"] = stats.coverage;
  return j.dump();
}

std::string ResegmentReportJson(const ResegmentReport &report) {
  ordered_json discarded = ordered_json::object();
  for (DiscardReason r : {DiscardReason::kMissingTiming, DiscardReason::kCrossingAlignment,
                          DiscardReason::kEmptySide}) {
    const auto it = report.discarded.find(r);
    discarded[std::string(DiscardReasonName(r))] = it == report.discarded.end() ? 0 : it->second;
  }
  ordered_json j;
  j["manifest_count"] = report.manifest_count;
  j["merged_count"] = report.merged_count;
  j["input_count"] = report.input_count;
  j["split_count"] = report.split_count;
  j["unchanged_count"] = report.unchanged_count;
  j["discarded"] = discarded;
  j["output_count"] = report.output_count;
  j["discard_fraction"] = report.discard_fraction;
  return j.dump();
}

std::string CleanReportJson(const CleanReport &report) {
  ordered_json j;
  j["total"] = report.total;
  j["kept"] = report.kept;
  j["removed"] = {{"chars", report.removed_chars}, {"language", report.removed_language}};
  j["removal_fraction"] = report.removal_fraction;
  return j.dump();
}

}  // namespace stseg
