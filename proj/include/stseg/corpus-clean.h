// include/stseg/corpus-clean.h

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

#ifndef STSEG_CORPUS_CLEAN_H_
#define STSEG_CORPUS_CLEAN_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace stseg {

// Decodes UTF-8, mapping every malformed sequence (overlong forms, encoded
// surrogates, truncations, values above U+10FFFF) to U+FFFD.
std::u32string DecodeUtf8Lenient(std::string_view text);
std::string EncodeUtf8(std::u32string_view text);

// Control characters (C0 including TAB/LF/CR, DEL, C1), U+FFFD,
// noncharacters and private-use code points.
bool IsDisallowedCodePoint(char32_t cp);
bool HasDisallowedChars(std::string_view utf8);

inline constexpr std::size_t kDefaultProfileSize = 300;

// Padded character trigrams of the lower-cased letter runs of text, ranked by
// descending count with ties in code-point order, truncated to k.
std::vector<std::string> RankedTrigrams(std::string_view text, std::size_t k);

// Character-trigram language profile with out-of-place scoring.
class LangProfile {
 public:
  LangProfile() = default;
  // Throws kBadProfile on duplicate or empty trigram lists.
  LangProfile(std::string language, std::size_t k, std::vector<std::string> ranked);

  static LangProfile Build(std::string_view text, std::string language,
                           std::size_t k = kDefaultProfileSize);

  const std::string &language() const { return language_; }
  std::size_t k() const { return k_; }
  const std::vector<std::string> &ranked_trigrams() const { return ranked_; }
  // Rank of a trigram, or k() when absent.
  std::size_t RankOf(const std::string &trigram) const;

 private:
  std::string language_;
  std::size_t k_ = kDefaultProfileSize;
  std::vector<std::string> ranked_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Sum over the text's ranked trigrams of |rank_text - rank_profile|, with k
// for trigrams the profile lacks. Lower means closer. Throws kEmptyText when
// the text has no letters.
double LanguageScore(std::string_view text, const LangProfile &profile);

// "#langprofile <code> k=<int>" then one trigram per line in rank order.
std::string FormatProfile(const LangProfile &profile);
LangProfile ParseProfile(const std::string &text);
LangProfile ReadProfile(const std::string &path);
void WriteProfile(const LangProfile &profile, const std::string &path);

struct SentencePair {
  std::string src;
  std::string tgt;
  std::size_t line_no = 0;
};

enum class RemovalReason { kChars, kLanguage };

struct CleanReport {
  std::size_t total = 0;
  std::size_t kept = 0;
  std::size_t removed_chars = 0;
  std::size_t removed_language = 0;
  double removal_fraction = 0.0;
};

struct CleanResult {
  std::vector<SentencePair> kept;  // input order
  std::vector<std::pair<std::size_t, RemovalReason>> removed;  // (line_no, reason)
  CleanReport report;
};

// Drops a pair when either side has disallowed characters, or else when the
// target scores worse against `expected` than against the best contrast
// profile. Targets without letters pass the language rule.
CleanResult CleanCorpus(const std::vector<SentencePair> &pairs,
                        const LangProfile &expected,
                        const std::vector<LangProfile> &contrast);

// "src\ttgt" per line, split at the first tab. Lines without a tab are
// kBadCorpus errors naming the line.
std::vector<SentencePair> ParseParallelCorpus(const std::string &text);
std::string FormatParallelCorpus(const std::vector<SentencePair> &pairs);

}  // namespace stseg

#endif  // STSEG_CORPUS_CLEAN_H_
