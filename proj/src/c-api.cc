// src/c-api.cc

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

#include "stseg/stseg.h"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <new>
#include <string>

#include "file-io.h"
#include "stseg/audio-io.h"
#include "stseg/corpus-clean.h"
#include "stseg/error.h"
#include "stseg/features.h"
#include "stseg/report-json.h"
#include "stseg/resegment.h"
#include "stseg/segmenter.h"
#include "stseg/vad.h"

struct stseg_audio {
  stseg::AudioBuffer buffer;
};
struct stseg_decisions {
  stseg::VadDecisions decisions;
};
struct stseg_segments {
  std::vector<stseg::Segment> segments;
};
struct stseg_features {
  stseg::MelMatrix matrix;
};
struct stseg_corpus {
  std::vector<stseg::AlignedSample> samples;
};
struct stseg_profile {
  stseg::LangProfile profile;
};
struct stseg_parallel {
  std::vector<stseg::SentencePair> pairs;
};

namespace {

thread_local std::string g_last_error;

stseg_status ToStatus(stseg::ErrorCode code) {
  using stseg::ErrorCode;
  switch (code) {
    case ErrorCode::kInvalidArgument: return STSEG_ERR_INVALID_ARGUMENT;
    case ErrorCode::kIo: return STSEG_ERR_IO;
    case ErrorCode::kNotWav: return STSEG_ERR_NOT_WAV;
    case ErrorCode::kUnsupportedEncoding: return STSEG_ERR_UNSUPPORTED_ENCODING;
    case ErrorCode::kUnsupportedChannels: return STSEG_ERR_UNSUPPORTED_CHANNELS;
    case ErrorCode::kUnsupportedRate: return STSEG_ERR_UNSUPPORTED_RATE;
    case ErrorCode::kTruncatedFile: return STSEG_ERR_TRUNCATED_FILE;
    case ErrorCode::kBadFrameDuration: return STSEG_ERR_BAD_FRAME_DURATION;
    case ErrorCode::kIndexOutOfRange: return STSEG_ERR_INDEX_OUT_OF_RANGE;
    case ErrorCode::kBadDecisionsFormat: return STSEG_ERR_BAD_DECISIONS_FORMAT;
    case ErrorCode::kConfigTooTight: return STSEG_ERR_CONFIG_TOO_TIGHT;
    case ErrorCode::kEmptyInput: return STSEG_ERR_EMPTY_INPUT;
    case ErrorCode::kBadManifest: return STSEG_ERR_BAD_MANIFEST;
    case ErrorCode::kTooShort: return STSEG_ERR_TOO_SHORT;
    case ErrorCode::kAlreadyNormalized: return STSEG_ERR_ALREADY_NORMALIZED;
    case ErrorCode::kBadFeatureFile: return STSEG_ERR_BAD_FEATURE_FILE;
    case ErrorCode::kBoundaryOutOfRange: return STSEG_ERR_BOUNDARY_OUT_OF_RANGE;
    case ErrorCode::kEmptyText: return STSEG_ERR_EMPTY_TEXT;
    case ErrorCode::kBadProfile: return STSEG_ERR_BAD_PROFILE;
    case ErrorCode::kBadCorpus: return STSEG_ERR_BAD_CORPUS;
  }
  return STSEG_ERR_INTERNAL;
}

stseg_status Failure(stseg_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

template <class F>
stseg_status Guard(F &&body) {
  try {
    body();
    return STSEG_OK;
  } catch (const stseg::Error &e) {
    return Failure(ToStatus(e.code()), e.what());
  } catch (const std::bad_alloc &) {
    return Failure(STSEG_ERR_INTERNAL, "out of memory");
  } catch (const std::exception &e) {
    return Failure(STSEG_ERR_INTERNAL, e.what());
  } catch (...) {
    return Failure(STSEG_ERR_INTERNAL, "unknown error");
  }
}

#define STSEG_REQUIRE(cond)                                                \
  do {                                                                     \
    if (!(cond)) return Failure(STSEG_ERR_INVALID_ARGUMENT,                \
                                std::string(__func__) + ": " #cond " failed"); \
  } while (0)

char *CopyString(const std::string &s) {
  char *out = static_cast<char *>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void WriteText(const std::string &content, const char *path) {
  const std::string p(path);
  if (p == "-") {
    std::cout.write(content.data(), static_cast<std::streamsize>(content.size()));
    std::cout.flush();
    if (!std::cout) stseg::Fail(stseg::ErrorCode::kIo, "write to stdout failed");
    return;
  }
  std::ofstream f(p, std::ios::binary);
  if (!f) stseg::Fail(stseg::ErrorCode::kIo, "cannot write '" + p + "'");
  f.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!f) stseg::Fail(stseg::ErrorCode::kIo, "write failed for '" + p + "'");
}

std::string ReadText(const char *path) {
  return stseg::ReadFileOrFail(path);
}

std::string OrEmpty(const char *s) { return s ? std::string(s) : std::string(); }

}  // namespace

extern "C" {

const char *stseg_status_name(stseg_status status) {
  switch (status) {
    case STSEG_OK: return "ok";
    case STSEG_ERR_INTERNAL: return "internal";
    default: break;
  }
  for (int c = 0; c <= static_cast<int>(stseg::ErrorCode::kBadCorpus); ++c) {
    const auto code = static_cast<stseg::ErrorCode>(c);
    if (ToStatus(code) == status) return stseg::ErrorCodeName(code).data();
  }
  return "unknown";
}

const char *stseg_last_error(void) { return g_last_error.c_str(); }

void stseg_string_free(char *s) { std::free(s); }

const char *stseg_version(void) { return "0.1.0"; }

// ---- audio

stseg_status stseg_audio_read_wav(const char *path, stseg_audio **out) {
  STSEG_REQUIRE(path && out);
  return Guard([&] { *out = new stseg_audio{stseg::ReadWav(path)}; });
}

stseg_status stseg_audio_from_samples(const float *samples, size_t n, int sample_rate,
                                      stseg_audio **out) {
  STSEG_REQUIRE(out && (samples || n == 0));
  return Guard([&] {
    *out = new stseg_audio{
        stseg::AudioBuffer(sample_rate, std::vector<float>(samples, samples + n))};
  });
}

stseg_status stseg_audio_write_wav(const stseg_audio *audio, const char *path) {
  STSEG_REQUIRE(audio && path);
  return Guard([&] { stseg::WriteWav(audio->buffer, path); });
}

void stseg_audio_free(stseg_audio *audio) { delete audio; }

size_t stseg_audio_num_samples(const stseg_audio *audio) {
  return audio ? audio->buffer.size() : 0;
}

int stseg_audio_sample_rate(const stseg_audio *audio) {
  return audio ? audio->buffer.sample_rate() : 0;
}

const float *stseg_audio_samples(const stseg_audio *audio) {
  return audio ? audio->buffer.samples().data() : nullptr;
}

stseg_status stseg_audio_frame_count(const stseg_audio *audio, int frame_ms, size_t *out) {
  STSEG_REQUIRE(audio && out);
  return Guard([&] { *out = stseg::FrameCount(audio->buffer, frame_ms); });
}

// ---- vad

stseg_vad_config stseg_vad_config_default(void) {
  const stseg::VadConfig c;
  return {c.frame_ms, c.aggressiveness, c.hangover_frames};
}

stseg_status stseg_vad_detect(const stseg_audio *audio, const stseg_vad_config *config,
                              stseg_decisions **out) {
  STSEG_REQUIRE(audio && config && out);
  return Guard([&] {
    const stseg::VadConfig c{config->frame_ms, config->aggressiveness, config->hangover_frames};
    *out = new stseg_decisions{stseg::DetectVoice(audio->buffer, c)};
  });
}

stseg_status stseg_decisions_create(int frame_ms, const uint8_t *labels, size_t n,
                                    stseg_decisions **out) {
  STSEG_REQUIRE(out && (labels || n == 0));
  return Guard([&] {
    stseg::FrameLength(stseg::kSampleRate, frame_ms);
    stseg::VadDecisions d;
    d.frame_ms = frame_ms;
    d.labels.reserve(n);
    for (size_t i = 0; i < n; ++i) d.labels.push_back(labels[i] != 0);
    d.total_audio_seconds = static_cast<double>(n) * frame_ms / 1000.0;
    *out = new stseg_decisions{std::move(d)};
  });
}

stseg_status stseg_decisions_read(const char *path, stseg_decisions **out) {
  STSEG_REQUIRE(path && out);
  return Guard([&] { *out = new stseg_decisions{stseg::ReadDecisions(path)}; });
}

stseg_status stseg_decisions_write(const stseg_decisions *d, const char *path) {
  STSEG_REQUIRE(d && path);
  return Guard([&] { WriteText(stseg::FormatDecisions(d->decisions), path); });
}

void stseg_decisions_free(stseg_decisions *d) { delete d; }

size_t stseg_decisions_num_frames(const stseg_decisions *d) {
  return d ? d->decisions.size() : 0;
}

int stseg_decisions_frame_ms(const stseg_decisions *d) { return d ? d->decisions.frame_ms : 0; }

int stseg_decisions_label(const stseg_decisions *d, size_t index) {
  if (!d || index >= d->decisions.size()) return -1;
  return d->decisions.labels[index] ? 1 : 0;
}

stseg_status stseg_decisions_pauses(const stseg_decisions *d, size_t min_pause_frames,
                                    stseg_span *spans, size_t capacity, size_t *count) {
  STSEG_REQUIRE(d && count && (spans || capacity == 0));
  return Guard([&] {
    const auto pauses = stseg::ExtractPauses(d->decisions, min_pause_frames);
    for (size_t i = 0; i < pauses.size() && i < capacity; ++i)
      spans[i] = {pauses[i].start_frame, pauses[i].end_frame};
    *count = pauses.size();
  });
}

// ---- segmentation

stseg_segmenter_config stseg_segmenter_config_default(void) {
  const stseg::SegmenterConfig c;
  return {c.min_len_s, c.max_len_s, STSEG_PAUSE_FULL_RUN};
}

stseg_status stseg_segment_hybrid(const stseg_decisions *d,
                                  const stseg_segmenter_config *config, const char *wav,
                                  const char *speaker_id, stseg_segments **out) {
  STSEG_REQUIRE(d && config && out);
  STSEG_REQUIRE(config->pause_scoring == STSEG_PAUSE_FULL_RUN ||
                config->pause_scoring == STSEG_PAUSE_IN_WINDOW);
  return Guard([&] {
    stseg::SegmenterConfig c;
    c.min_len_s = config->min_len_s;
    c.max_len_s = config->max_len_s;
    c.scoring = config->pause_scoring == STSEG_PAUSE_IN_WINDOW ? stseg::PauseScoring::kInWindow
                                                               : stseg::PauseScoring::kFullRun;
    *out = new stseg_segments{
        stseg::HybridSegment(d->decisions, c, OrEmpty(wav), OrEmpty(speaker_id))};
  });
}

stseg_status stseg_segment_vad(const stseg_decisions *d, size_t min_pause_frames,
                               double min_speech_s, const char *wav, const char *speaker_id,
                               stseg_segments **out) {
  STSEG_REQUIRE(d && out);
  return Guard([&] {
    *out = new stseg_segments{stseg::VadSegment(d->decisions, min_pause_frames, min_speech_s,
                                                OrEmpty(wav), OrEmpty(speaker_id))};
  });
}

stseg_status stseg_segments_read_manifest(const char *path, stseg_segments **out) {
  STSEG_REQUIRE(path && out);
  return Guard([&] { *out = new stseg_segments{stseg::ParseManifest(ReadText(path))}; });
}

stseg_status stseg_segments_write_manifest(const stseg_segments *s, const char *path) {
  STSEG_REQUIRE(s && path);
  return Guard([&] { WriteText(stseg::FormatManifest(s->segments), path); });
}

void stseg_segments_free(stseg_segments *s) { delete s; }

size_t stseg_segments_count(const stseg_segments *s) { return s ? s->segments.size() : 0; }

stseg_status stseg_segments_get(const stseg_segments *s, size_t index, double *offset_s,
                                double *duration_s) {
  STSEG_REQUIRE(s && offset_s && duration_s);
  if (index >= s->segments.size())
    return Failure(STSEG_ERR_INDEX_OUT_OF_RANGE, "segment index out of range");
  *offset_s = s->segments[index].offset_s;
  *duration_s = s->segments[index].duration_s;
  return STSEG_OK;
}

stseg_status stseg_segments_stats_json(const stseg_segments *s, char **out_json) {
  STSEG_REQUIRE(s && out_json);
  return Guard([&] {
    *out_json = CopyString(stseg::SegmentStatsJson(stseg::ComputeSegmentStats(s->segments)));
  });
}

// ---- features

stseg_fbank_config stseg_fbank_config_default(void) {
  const stseg::FbankConfig c;
  return {c.win_ms, c.hop_ms, c.n_mels, c.preemphasis, c.mel_low_hz, c.log_floor, c.max_frames};
}

stseg_specaugment_config stseg_specaugment_config_default(void) {
  const stseg::SpecAugmentConfig c;
  return {c.n_freq_masks, c.max_freq_width, c.n_time_masks, c.max_time_width,
          c.max_time_fraction, c.mask_value, c.seed};
}

stseg_status stseg_fbank_compute(const stseg_audio *audio, const stseg_fbank_config *config,
                                 stseg_features **out) {
  STSEG_REQUIRE(audio && config && out);
  return Guard([&] {
    stseg::FbankConfig c;
    c.win_ms = config->win_ms;
    c.hop_ms = config->hop_ms;
    c.n_mels = config->n_mels;
    c.preemphasis = config->preemphasis;
    c.mel_low_hz = config->mel_low_hz;
    c.log_floor = config->log_floor;
    c.max_frames = config->max_frames;
    *out = new stseg_features{stseg::ComputeFbank(audio->buffer, c)};
  });
}

stseg_status stseg_features_apply_cmvn(stseg_features *f) {
  STSEG_REQUIRE(f);
  return Guard([&] { f->matrix = stseg::ApplyCmvn(f->matrix); });
}

stseg_status stseg_features_apply_specaugment(stseg_features *f,
                                              const stseg_specaugment_config *config) {
  STSEG_REQUIRE(f && config);
  return Guard([&] {
    stseg::SpecAugmentConfig c;
    c.n_freq_masks = config->n_freq_masks;
    c.max_freq_width = config->max_freq_width;
    c.n_time_masks = config->n_time_masks;
    c.max_time_width = config->max_time_width;
    c.max_time_fraction = config->max_time_fraction;
    c.mask_value = config->mask_value;
    c.seed = config->seed;
    const bool normalized = f->matrix.normalized();
    f->matrix = stseg::SpecAugment(f->matrix, c);
    f->matrix.set_normalized(normalized);
  });
}

int stseg_features_length_ok(const stseg_features *f, size_t max_frames) {
  return f && stseg::LengthFilterAccepts(f->matrix, max_frames) ? 1 : 0;
}

size_t stseg_features_rows(const stseg_features *f) { return f ? f->matrix.rows() : 0; }

size_t stseg_features_cols(const stseg_features *f) { return f ? f->matrix.cols() : 0; }

int stseg_features_normalized(const stseg_features *f) {
  return f && f->matrix.normalized() ? 1 : 0;
}

double stseg_features_value(const stseg_features *f, size_t row, size_t col) {
  if (!f || row >= f->matrix.rows() || col >= f->matrix.cols()) return 0.0;
  return f->matrix(row, col);
}

stseg_status stseg_features_write(const stseg_features *f, const char *path) {
  STSEG_REQUIRE(f && path);
  return Guard([&] { WriteText(stseg::EncodeFeatures(f->matrix), path); });
}

stseg_status stseg_features_read(const char *path, stseg_features **out) {
  STSEG_REQUIRE(path && out);
  return Guard([&] { *out = new stseg_features{stseg::ReadFeatures(path)}; });
}

void stseg_features_free(stseg_features *f) { delete f; }

// ---- re-segmentation

stseg_status stseg_corpus_read(const char *path, stseg_corpus **out) {
  STSEG_REQUIRE(path && out);
  return Guard([&] { *out = new stseg_corpus{stseg::ReadAlignedCorpus(path)}; });
}

stseg_status stseg_corpus_parse(const char *text, stseg_corpus **out) {
  STSEG_REQUIRE(text && out);
  return Guard([&] { *out = new stseg_corpus{stseg::ParseAlignedCorpus(text)}; });
}

stseg_status stseg_corpus_write(const stseg_corpus *c, const char *path) {
  STSEG_REQUIRE(c && path);
  return Guard([&] { WriteText(stseg::FormatAlignedCorpus(c->samples), path); });
}

size_t stseg_corpus_count(const stseg_corpus *c) { return c ? c->samples.size() : 0; }

void stseg_corpus_free(stseg_corpus *c) { delete c; }

stseg_status stseg_resegment(const stseg_corpus *in, uint64_t seed, int mode,
                             unsigned num_threads, stseg_corpus **out, char **report_json) {
  STSEG_REQUIRE(in && out);
  STSEG_REQUIRE(mode == STSEG_RESEGMENT_SPLIT_ONLY || mode == STSEG_RESEGMENT_MERGE_THEN_SPLIT);
  return Guard([&] {
    auto result = stseg::ResegmentCorpus(
        in->samples, seed,
        mode == STSEG_RESEGMENT_SPLIT_ONLY ? stseg::ResegmentMode::kSplitOnly
                                           : stseg::ResegmentMode::kMergeThenSplit,
        num_threads);
    char *json = report_json ? CopyString(stseg::ResegmentReportJson(result.report)) : nullptr;
    *out = new stseg_corpus{std::move(result.samples)};
    if (report_json) *report_json = json;
  });
}

// ---- cleaning

stseg_status stseg_profile_read(const char *path, stseg_profile **out) {
  STSEG_REQUIRE(path && out);
  return Guard([&] { *out = new stseg_profile{stseg::ReadProfile(path)}; });
}

stseg_status stseg_profile_build(const char *text, const char *language, size_t k,
                                 stseg_profile **out) {
  STSEG_REQUIRE(text && language && out && k > 0);
  return Guard([&] { *out = new stseg_profile{stseg::LangProfile::Build(text, language, k)}; });
}

stseg_status stseg_profile_write(const stseg_profile *p, const char *path) {
  STSEG_REQUIRE(p && path);
  return Guard([&] { WriteText(stseg::FormatProfile(p->profile), path); });
}

const char *stseg_profile_language(const stseg_profile *p) {
  return p ? p->profile.language().c_str() : "";
}

stseg_status stseg_profile_score(const stseg_profile *p, const char *text, double *out) {
  STSEG_REQUIRE(p && text && out);
  return Guard([&] { *out = stseg::LanguageScore(text, p->profile); });
}

void stseg_profile_free(stseg_profile *p) { delete p; }

int stseg_has_disallowed_chars(const char *text, size_t len) {
  if (!text) return 0;
  return stseg::HasDisallowedChars(std::string_view(text, len)) ? 1 : 0;
}

stseg_status stseg_parallel_read(const char *path, stseg_parallel **out) {
  STSEG_REQUIRE(path && out);
  return Guard([&] { *out = new stseg_parallel{stseg::ParseParallelCorpus(ReadText(path))}; });
}

stseg_status stseg_parallel_write(const stseg_parallel *p, const char *path) {
  STSEG_REQUIRE(p && path);
  return Guard([&] { WriteText(stseg::FormatParallelCorpus(p->pairs), path); });
}

size_t stseg_parallel_count(const stseg_parallel *p) { return p ? p->pairs.size() : 0; }

void stseg_parallel_free(stseg_parallel *p) { delete p; }

stseg_status stseg_clean(const stseg_parallel *in, const stseg_profile *expected,
                         const stseg_profile *const *contrast, size_t n_contrast,
                         stseg_parallel **kept, char **report_json) {
  STSEG_REQUIRE(in && expected && kept && contrast && n_contrast > 0);
  for (size_t i = 0; i < n_contrast; ++i) STSEG_REQUIRE(contrast[i]);
  return Guard([&] {
    std::vector<stseg::LangProfile> others;
    for (size_t i = 0; i < n_contrast; ++i) others.push_back(contrast[i]->profile);
    auto result = stseg::CleanCorpus(in->pairs, expected->profile, others);
    char *json = report_json ? CopyString(stseg::CleanReportJson(result.report)) : nullptr;
    *kept = new stseg_parallel{std::move(result.kept)};
    if (report_json) *report_json = json;
  });
}

}  // extern "C"
