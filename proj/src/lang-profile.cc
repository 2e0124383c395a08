// src/lang-profile.cc

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
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "file-io.h"
#include "stseg/corpus-clean.h"
#include "stseg/error.h"

namespace stseg {

namespace {

constexpr char32_t kReplacement = 0xFFFD;

bool IsCont(unsigned char c) { return (c & 0xC0) == 0x80; }

char32_t ToLower(char32_t c) {
  if (c >= U'A' && c <= U'Z') return c + 32;
  if (c >= 0xC0 && c <= 0xDE && c != 0xD7) return c + 32;
  // Latin Extended-A pairs upper/lower, switching parity around U+0138/U+0178.
  if ((c >= 0x100 && c <= 0x137) || (c >= 0x14A && c <= 0x177))
    return (c % 2 == 0) ? c + 1 : c;
  if ((c >= 0x139 && c <= 0x148) || (c >= 0x179 && c <= 0x17E))
    return (c % 2 == 1) ? c + 1 : c;
  if (c == 0x178) return 0xFF;
  if (c >= 0x391 && c <= 0x3A9 && c != 0x3A2) return c + 32;
  if (c >= 0x410 && c <= 0x42F) return c + 32;
  if (c >= 0x400 && c <= 0x40F) return c + 80;
  return c;
}

bool IsLetter(char32_t c) {
  if ((c >= U'a' && c <= U'z') || (c >= U'A' && c <= U'Z')) return true;
  if (c < 0xC0) return false;
  if (c == 0xD7 || c == 0xF7) return false;
  if (c >= 0x2000 && c <= 0x2BFF) return false;  // punctuation, symbols, arrows
  if (c >= 0x3000 && c <= 0x303F) return false;
  if (c >= 0xFE00 && c <= 0xFE6F) return false;
  if (c >= 0xFF00 && c <= 0xFF20) return false;
  if (c == kReplacement || IsDisallowedCodePoint(c)) return false;
  return true;
}

}  // namespace

std::u32string DecodeUtf8Lenient(std::string_view text) {
  std::u32string out;
  out.reserve(text.size());
  const auto *s = reinterpret_cast<const unsigned char *>(text.data());
  const std::size_t n = text.size();
  std::size_t i = 0;
  while (i < n) {
    const unsigned char c = s[i];
    if (c < 0x80) {
      out.push_back(c);
      ++i;
      continue;
    }
    std::size_t len = 0;
    unsigned char lo = 0x80, hi = 0xBF;
    char32_t cp = 0;
    if (c >= 0xC2 && c <= 0xDF) {
      len = 2;
      cp = c & 0x1F;
    } else if (c >= 0xE0 && c <= 0xEF) {
      len = 3;
      cp = c & 0x0F;
      if (c == 0xE0) lo = 0xA0;
      if (c == 0xED) hi = 0x9F;  // excludes encoded surrogates
    } else if (c >= 0xF0 && c <= 0xF4) {
      len = 4;
      cp = c & 0x07;
      if (c == 0xF0) lo = 0x90;
      if (c == 0xF4) hi = 0x8F;
    }
    bool ok = len > 0 && i + len <= n && s[i + 1] >= lo && s[i + 1] <= hi;
    for (std::size_t k = 2; ok && k < len; ++k) ok = IsCont(s[i + k]);
    if (!ok) {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    for (std::size_t k = 1; k < len; ++k) cp = (cp << 6) | (s[i + k] & 0x3F);
    out.push_back(cp);
    i += len;
  }
  return out;
}

std::string EncodeUtf8(std::u32string_view text) {
  std::string out;
  for (char32_t cp : text) {
    if (cp < 0x80) {
      out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
  }
  return out;
}

std::vector<std::string> RankedTrigrams(std::string_view text, std::size_t k) {
  const std::u32string decoded = DecodeUtf8Lenient(text);
  std::map<std::u32string, std::size_t> counts;
  std::u32string word;
  auto flush = [&] {
    if (word.empty()) return;
    const std::u32string padded = U"_" + word + U"_";
    for (std::size_t i = 0; i + 3 <= padded.size(); ++i) ++counts[padded.substr(i, 3)];
    word.clear();
  };
  for (char32_t c : decoded) {
    if (IsLetter(c))
      word.push_back(ToLower(c));
    else
      flush();
  }
  flush();

  std::vector<std::pair<std::u32string, std::size_t>> items(counts.begin(), counts.end());
  // counts is code-point ordered, so a stable sort on count keeps the tie rule.
  std::stable_sort(items.begin(), items.end(),
                   [](const auto &a, const auto &b) { return a.second > b.second; });
  if (items.size() > k) items.resize(k);
  std::vector<std::string> ranked;
  ranked.reserve(items.size());
  for (const auto &[gram, count] : items) ranked.push_back(EncodeUtf8(gram));
  return ranked;
}

LangProfile::LangProfile(std::string language, std::size_t k,
                         std::vector<std::string> ranked)
    : language_(std::move(language)), k_(k), ranked_(std::move(ranked)) {
  if (ranked_.empty()) Fail(ErrorCode::kBadProfile, "profile '" + language_ + "' is empty");
  if (k_ < ranked_.size())
    Fail(ErrorCode::kBadProfile, "profile '" + language_ + "' has more than k trigrams");
  for (std::size_t r = 0; r < ranked_.size(); ++r) {
    if (!index_.emplace(ranked_[r], r).second)
      Fail(ErrorCode::kBadProfile, "duplicate trigram '" + ranked_[r] + "'");
  }
}

LangProfile LangProfile::Build(std::string_view text, std::string language,
                               std::size_t k) {
  return LangProfile(std::move(language), k, RankedTrigrams(text, k));
}

std::size_t LangProfile::RankOf(const std::string &trigram) const {
  const auto it = index_.find(trigram);
  return it == index_.end() ? k_ : it->second;
}

double LanguageScore(std::string_view text, const LangProfile &profile) {
  if (profile.ranked_trigrams().empty())
    Fail(ErrorCode::kBadProfile, "empty language profile");
  const std::vector<std::string> ranked = RankedTrigrams(text, profile.k());
  if (ranked.empty()) Fail(ErrorCode::kEmptyText, "text has no letters to score");
  double score = 0.0;
  for (std::size_t r = 0; r < ranked.size(); ++r) {
    const std::size_t pr = profile.RankOf(ranked[r]);
    score += pr == profile.k() ? static_cast<double>(profile.k())
                               : std::abs(static_cast<double>(r) - static_cast<double>(pr));
  }
  return score;
}

std::string FormatProfile(const LangProfile &profile) {
  std::string out = "#langprofile " + profile.language() + " k=" + std::to_string(profile.k()) + "\n";
  for (const std::string &g : profile.ranked_trigrams()) out += g + "\n";
  return out;
}

LangProfile ParseProfile(const std::string &text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || !line.starts_with("#langprofile "))
    Fail(ErrorCode::kBadProfile, "line 1: missing '#langprofile' header");
  std::istringstream header(line.substr(13));
  std::string code, kfield;
  header >> code >> kfield;
  char *end = nullptr;
  const unsigned long k = kfield.starts_with("k=") ? std::strtoul(kfield.c_str() + 2, &end, 10) : 0;
  if (code.empty() || k == 0 || end == nullptr || *end != '\0')
    Fail(ErrorCode::kBadProfile, "line 1: malformed header");
  std::vector<std::string> ranked;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (DecodeUtf8Lenient(line).size() != 3)
      Fail(ErrorCode::kBadProfile, "line " + std::to_string(line_no) + ": not a trigram");
    ranked.push_back(line);
  }
  return LangProfile(code, k, std::move(ranked));
}

LangProfile ReadProfile(const std::string &path) {
  return ParseProfile(ReadFileOrFail(path));
}

void WriteProfile(const LangProfile &profile, const std::string &path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) Fail(ErrorCode::kIo, "cannot write '" + path + "'");
  f << FormatProfile(profile);
  if (!f) Fail(ErrorCode::kIo, "write failed for '" + path + "'");
}

}  // namespace stseg
