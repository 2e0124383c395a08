// src/aligned-corpus.cc

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

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "file-io.h"
#include "stseg/error.h"
#include "stseg/resegment.h"

namespace stseg {

namespace {

std::vector<std::string_view> Split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::vector<std::string> Tokens(std::string_view s) {
  std::vector<std::string> out;
  for (std::string_view t : Split(s, ' '))
    if (!t.empty()) out.emplace_back(t);
  return out;
}

bool ParseDouble(std::string_view s, double *out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), *out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

bool ParseIndex(std::string_view s, std::size_t *out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), *out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

std::string Fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
  return buf;
}

[[noreturn]] void BadLine(std::size_t line_no, const std::string &why) {
  Fail(ErrorCode::kBadManifest, "line " + std::to_string(line_no) + ": " + why);
}

AlignedSample ParseLine(std::string_view line, std::size_t line_no) {
  const auto cols = Split(line, '\t');
  if (cols.size() != 9)
    BadLine(line_no, "expected 9 tab-separated columns, found " + std::to_string(cols.size()));
  AlignedSample s;
  s.id = cols[0];
  s.wav = cols[1];
  s.talk_id = cols[2];
  if (s.id.empty()) BadLine(line_no, "empty id");
  if (!ParseDouble(cols[3], &s.offset_s) || s.offset_s < 0.0)
    BadLine(line_no, "bad offset");
  if (!ParseDouble(cols[4], &s.duration_s) || !(s.duration_s > 0.0))
    BadLine(line_no, "bad duration");

  const auto src_tokens = Tokens(cols[5]);
  std::vector<std::string_view> times;
  if (!cols[6].empty()) times = Split(cols[6], ';');
  if (times.size() != src_tokens.size())
    BadLine(line_no, std::to_string(src_tokens.size()) + " source tokens but " +
                         std::to_string(times.size()) + " timings");
  for (std::size_t i = 0; i < src_tokens.size(); ++i) {
    SourceWord w{src_tokens[i], std::nullopt};
    if (times[i] != "-") {
      // start-end; both values are non-negative so the first '-' separates.
      const auto dash = times[i].find('-', 1);
      WordTiming t;
      if (dash == std::string_view::npos || !ParseDouble(times[i].substr(0, dash), &t.start_s) ||
          !ParseDouble(times[i].substr(dash + 1), &t.end_s))
        BadLine(line_no, "bad timing '" + std::string(times[i]) + "'");
      w.timing = t;
    }
    s.src_words.push_back(std::move(w));
  }
  s.tgt_words = Tokens(cols[7]);
  for (std::string_view pair : Split(cols[8], ' ')) {
    if (pair.empty()) continue;
    const auto dash = pair.find('-');
    AlignmentLink l;
    if (dash == std::string_view::npos || !ParseIndex(pair.substr(0, dash), &l.src) ||
        !ParseIndex(pair.substr(dash + 1), &l.tgt))
      BadLine(line_no, "bad link '" + std::string(pair) + "'");
    s.links.push_back(l);
  }
  try {
    ValidateSample(s);
  } catch (const Error &e) {
    BadLine(line_no, e.what());
  }
  return s;
}

}  // namespace

std::vector<AlignedSample> ParseAlignedCorpus(const std::string &text) {
  std::vector<AlignedSample> out;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    out.push_back(ParseLine(line, line_no));
  }
  return out;
}

std::string FormatAlignedSample(const AlignedSample &s) {
  std::string out = s.id + "\t" + s.wav + "\t" + s.talk_id + "\t" + Fixed(s.offset_s, 6) +
                    "\t" + Fixed(s.duration_s, 6) + "\t";
  for (std::size_t i = 0; i < s.src_words.size(); ++i) {
    if (i) out += ' ';
    out += s.src_words[i].token;
  }
  out += '\t';
  for (std::size_t i = 0; i < s.src_words.size(); ++i) {
    if (i) out += ';';
    const auto &t = s.src_words[i].timing;
    out += t ? Fixed(t->start_s, 3) + "-" + Fixed(t->end_s, 3) : "-";
  }
  out += '\t';
  for (std::size_t i = 0; i < s.tgt_words.size(); ++i) {
    if (i) out += ' ';
    out += s.tgt_words[i];
  }
  out += '\t';
  for (std::size_t i = 0; i < s.links.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(s.links[i].src) + "-" + std::to_string(s.links[i].tgt);
  }
  return out;
}

std::string FormatAlignedCorpus(const std::vector<AlignedSample> &corpus) {
  std::string out;
  for (const AlignedSample &s : corpus) {
    out += FormatAlignedSample(s);
    out += '\n';
  }
  return out;
}

std::vector<AlignedSample> ReadAlignedCorpus(const std::string &path) {
  return ParseAlignedCorpus(ReadFileOrFail(path));
}

void WriteAlignedCorpus(const std::vector<AlignedSample> &corpus,
                        const std::string &path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) Fail(ErrorCode::kIo, "cannot write '" + path + "'");
  f << FormatAlignedCorpus(corpus);
  if (!f) Fail(ErrorCode::kIo, "write failed for '" + path + "'");
}

}  // namespace stseg
