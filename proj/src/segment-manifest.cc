// src/segment-manifest.cc

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
#include <charconv>
#include <cstdio>
#include <sstream>

#include "stseg/error.h"
#include "stseg/segmenter.h"

namespace stseg {

namespace {

std::string Fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

[[noreturn]] void BadLine(std::size_t line_no, const std::string &why) {
  Fail(ErrorCode::kBadManifest, "line " + std::to_string(line_no) + ": " + why);
}

}  // namespace

std::string FormatManifest(std::vector<Segment> segments) {
  std::stable_sort(segments.begin(), segments.end(),
                   [](const Segment &a, const Segment &b) {
                     if (a.source != b.source) return a.source < b.source;
                     return a.offset_s < b.offset_s;
                   });
  std::string out;
  for (const Segment &s : segments) {
    out += "- {duration: " + Fixed6(s.duration_s) +
           ", offset: " + Fixed6(s.offset_s) +
           ", speaker_id: " + s.speaker_id + ", wav: " + s.source + "}\n";
  }
  return out;
}

std::vector<Segment> ParseManifest(const std::string &text) {
  std::vector<Segment> out;
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = Trim(raw);
    if (line.empty()) continue;
    if (!line.starts_with("- {") || !line.ends_with("}"))
      BadLine(line_no, "expected '- {duration: ..., offset: ..., speaker_id: ..., wav: ...}'");
    line = line.substr(3, line.size() - 4);
    Segment seg;
    bool have_duration = false, have_offset = false, have_wav = false;
    while (!line.empty()) {
      const auto comma = line.find(',');
      std::string_view field = Trim(line.substr(0, comma));
      line = comma == std::string_view::npos ? std::string_view() : line.substr(comma + 1);
      const auto colon = field.find(':');
      if (colon == std::string_view::npos) BadLine(line_no, "field without ':'");
      const std::string_view key = Trim(field.substr(0, colon));
      const std::string_view value = Trim(field.substr(colon + 1));
      if (key == "duration" || key == "offset") {
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
        if (ec != std::errc() || ptr != value.data() + value.size())
          BadLine(line_no, "bad number for " + std::string(key));
        if (key == "duration") {
          seg.duration_s = v;
          have_duration = true;
        } else {
          seg.offset_s = v;
          have_offset = true;
        }
      } else if (key == "speaker_id") {
        seg.speaker_id = value;
      } else if (key == "wav") {
        seg.source = value;
        have_wav = true;
      } else {
        BadLine(line_no, "unknown key '" + std::string(key) + "'");
      }
    }
    if (!have_duration || !have_offset || !have_wav)
      BadLine(line_no, "record needs duration, offset and wav");
    if (seg.offset_s < 0.0 || seg.duration_s <= 0.0)
      BadLine(line_no, "offset must be >= 0 and duration > 0");
    out.push_back(std::move(seg));
  }
  return out;
}

}  // namespace stseg
