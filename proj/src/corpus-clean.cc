// src/corpus-clean.cc

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
#include <sstream>

#include "stseg/corpus-clean.h"
#include "stseg/error.h"

namespace stseg {

bool IsDisallowedCodePoint(char32_t cp) {
  if (cp < 0x20 || (cp >= 0x7F && cp <= 0x9F)) return true;  // C0, DEL, C1
  if (cp == 0xFFFD) return true;
  if (cp >= 0xD800 && cp <= 0xDFFF) return true;
  if (cp >= 0xFDD0 && cp <= 0xFDEF) return true;
  if ((cp & 0xFFFE) == 0xFFFE) return true;  // U+xxFFFE, U+xxFFFF
  if (cp >= 0xE000 && cp <= 0xF8FF) return true;
  if (cp >= 0xF0000) return true;  // planes 15-16 are private use
  return false;
}

bool HasDisallowedChars(std::string_view utf8) {
  const std::u32string decoded = DecodeUtf8Lenient(utf8);
  return std::any_of(decoded.begin(), decoded.end(), IsDisallowedCodePoint);
}

CleanResult CleanCorpus(const std::vector<SentencePair> &pairs,
                        const LangProfile &expected,
                        const std::vector<LangProfile> &contrast) {
  if (contrast.empty())
    Fail(ErrorCode::kInvalidArgument, "at least one contrast profile is required");
  CleanResult result;
  for (const SentencePair &p : pairs) {
    if (HasDisallowedChars(p.src) || HasDisallowedChars(p.tgt)) {
      result.removed.emplace_back(p.line_no, RemovalReason::kChars);
      ++result.report.removed_chars;
      continue;
    }
    bool foreign = false;
    try {
      const double own = LanguageScore(p.tgt, expected);
      double best_other = LanguageScore(p.tgt, contrast.front());
      for (std::size_t i = 1; i < contrast.size(); ++i)
        best_other = std::min(best_other, LanguageScore(p.tgt, contrast[i]));
      foreign = own > best_other;
    } catch (const Error &e) {
      if (e.code() != ErrorCode::kEmptyText) throw;
    }
    if (foreign) {
      result.removed.emplace_back(p.line_no, RemovalReason::kLanguage);
      ++result.report.removed_language;
      continue;
    }
    result.kept.push_back(p);
  }
  result.report.total = pairs.size();
  result.report.kept = result.kept.size();
  result.report.removal_fraction =
      pairs.empty() ? 0.0
                    : static_cast<double>(pairs.size() - result.kept.size()) /
                          static_cast<double>(pairs.size());
  return result;
}

std::vector<SentencePair> ParseParallelCorpus(const std::string &text) {
  std::vector<SentencePair> out;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto tab = line.find('\t');
    if (tab == std::string::npos)
      Fail(ErrorCode::kBadCorpus, "line " + std::to_string(line_no) + ": expected 'src\\ttgt'");
    out.push_back(SentencePair{line.substr(0, tab), line.substr(tab + 1), line_no});
  }
  return out;
}

std::string FormatParallelCorpus(const std::vector<SentencePair> &pairs) {
  std::string out;
  for (const SentencePair &p : pairs) out += p.src + "\t" + p.tgt + "\n";
  return out;
}

}  // namespace stseg
