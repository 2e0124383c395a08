/* include/stseg/stseg.h */

/* Copyright 2026  The stseg Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/*
 * C interface to the stseg speech-translation segmentation toolkit.
 *
 * Objects are opaque handles created by stseg_*_read / _create / _compute
 * calls and released with the matching stseg_*_free. Every fallible call
 * returns a stseg_status; on failure a one-line description is available
 * from stseg_last_error() on the calling thread until its next failing call.
 * Strings returned through char** are owned by the caller and released with
 * stseg_string_free. Paths given to *_write functions may be "-" for stdout.
 * Handles are immutable unless a function says otherwise, so const handles
 * can be shared between threads.
 */

#ifndef STSEG_STSEG_H_
#define STSEG_STSEG_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(STSEG_BUILDING_LIBRARY)
#    define STSEG_API __declspec(dllexport)
#  else
#    define STSEG_API __declspec(dllimport)
#  endif
#else
#  define STSEG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum stseg_status {
  STSEG_OK = 0,
  STSEG_ERR_INVALID_ARGUMENT = 1,
  STSEG_ERR_IO = 2,
  STSEG_ERR_NOT_WAV = 3,
  STSEG_ERR_UNSUPPORTED_ENCODING = 4,
  STSEG_ERR_UNSUPPORTED_CHANNELS = 5,
  STSEG_ERR_UNSUPPORTED_RATE = 6,
  STSEG_ERR_TRUNCATED_FILE = 7,
  STSEG_ERR_BAD_FRAME_DURATION = 8,
  STSEG_ERR_INDEX_OUT_OF_RANGE = 9,
  STSEG_ERR_BAD_DECISIONS_FORMAT = 10,
  STSEG_ERR_CONFIG_TOO_TIGHT = 11,
  STSEG_ERR_EMPTY_INPUT = 12,
  STSEG_ERR_BAD_MANIFEST = 13,
  STSEG_ERR_TOO_SHORT = 14,
  STSEG_ERR_ALREADY_NORMALIZED = 15,
  STSEG_ERR_BAD_FEATURE_FILE = 16,
  STSEG_ERR_BOUNDARY_OUT_OF_RANGE = 17,
  STSEG_ERR_EMPTY_TEXT = 18,
  STSEG_ERR_BAD_PROFILE = 19,
  STSEG_ERR_BAD_CORPUS = 20,
  STSEG_ERR_INTERNAL = 99
} stseg_status;

/* Stable lower-case name, e.g. "unsupported_rate". */
STSEG_API const char *stseg_status_name(stseg_status status);
STSEG_API const char *stseg_last_error(void);
STSEG_API void stseg_string_free(char *s);
STSEG_API const char *stseg_version(void);

typedef struct stseg_span {
  size_t begin;
  size_t end; /* exclusive */
} stseg_span;

/* ---- audio ------------------------------------------------------------ */

typedef struct stseg_audio stseg_audio;

/* 16 kHz mono 16-bit PCM WAV only. */
STSEG_API stseg_status stseg_audio_read_wav(const char *path, stseg_audio **out);
STSEG_API stseg_status stseg_audio_from_samples(const float *samples, size_t n,
                                                int sample_rate, stseg_audio **out);
STSEG_API stseg_status stseg_audio_write_wav(const stseg_audio *audio, const char *path);
STSEG_API void stseg_audio_free(stseg_audio *audio);
STSEG_API size_t stseg_audio_num_samples(const stseg_audio *audio);
STSEG_API int stseg_audio_sample_rate(const stseg_audio *audio);
STSEG_API const float *stseg_audio_samples(const stseg_audio *audio);
STSEG_API stseg_status stseg_audio_frame_count(const stseg_audio *audio, int frame_ms,
                                               size_t *out);

/* ---- voice activity detection ----------------------------------------- */

typedef struct stseg_vad_config {
  int frame_ms;        /* 10, 20 or 30 */
  int aggressiveness;  /* 0..3 */
  int hangover_frames; /* >= 0 */
} stseg_vad_config;

/* frame_ms 20, aggressiveness 2, hangover 4. */
STSEG_API stseg_vad_config stseg_vad_config_default(void);

typedef struct stseg_decisions stseg_decisions;

STSEG_API stseg_status stseg_vad_detect(const stseg_audio *audio,
                                        const stseg_vad_config *config,
                                        stseg_decisions **out);
/* labels[i] != 0 means voiced. */
STSEG_API stseg_status stseg_decisions_create(int frame_ms, const uint8_t *labels,
                                              size_t n, stseg_decisions **out);
STSEG_API stseg_status stseg_decisions_read(const char *path, stseg_decisions **out);
STSEG_API stseg_status stseg_decisions_write(const stseg_decisions *d, const char *path);
STSEG_API void stseg_decisions_free(stseg_decisions *d);
STSEG_API size_t stseg_decisions_num_frames(const stseg_decisions *d);
STSEG_API int stseg_decisions_frame_ms(const stseg_decisions *d);
/* 1 voiced, 0 non-voiced, -1 out of range. */
STSEG_API int stseg_decisions_label(const stseg_decisions *d, size_t index);
/* Maximal non-voiced runs of at least min_pause_frames. Writes up to
 * capacity spans and always stores the total number in *count. */
STSEG_API stseg_status stseg_decisions_pauses(const stseg_decisions *d,
                                              size_t min_pause_frames,
                                              stseg_span *spans, size_t capacity,
                                              size_t *count);

/* ---- segmentation ----------------------------------------------------- */

typedef enum stseg_pause_scoring {
  STSEG_PAUSE_FULL_RUN = 0,
  STSEG_PAUSE_IN_WINDOW = 1
} stseg_pause_scoring;

typedef struct stseg_segmenter_config {
  double min_len_s;
  double max_len_s;
  int pause_scoring; /* stseg_pause_scoring */
} stseg_segmenter_config;

/* 17 s / 20 s, full-run scoring. */
STSEG_API stseg_segmenter_config stseg_segmenter_config_default(void);

typedef struct stseg_segments stseg_segments;

STSEG_API stseg_status stseg_segment_hybrid(const stseg_decisions *d,
                                            const stseg_segmenter_config *config,
                                            const char *wav, const char *speaker_id,
                                            stseg_segments **out);
STSEG_API stseg_status stseg_segment_vad(const stseg_decisions *d,
                                         size_t min_pause_frames, double min_speech_s,
                                         const char *wav, const char *speaker_id,
                                         stseg_segments **out);
STSEG_API stseg_status stseg_segments_read_manifest(const char *path, stseg_segments **out);
STSEG_API stseg_status stseg_segments_write_manifest(const stseg_segments *s,
                                                     const char *path);
STSEG_API void stseg_segments_free(stseg_segments *s);
STSEG_API size_t stseg_segments_count(const stseg_segments *s);
STSEG_API stseg_status stseg_segments_get(const stseg_segments *s, size_t index,
                                          double *offset_s, double *duration_s);
/* Count, min/mean/max duration, 1 s histogram and timeline coverage. */
STSEG_API stseg_status stseg_segments_stats_json(const stseg_segments *s, char **out_json);

/* ---- features --------------------------------------------------------- */

typedef struct stseg_fbank_config {
  int win_ms;
  int hop_ms;
  int n_mels;
  double preemphasis;
  double mel_low_hz;
  double log_floor;
  size_t max_frames;
} stseg_fbank_config;

/* 25/10 ms, 80 mels, 0.97, 20 Hz, 1e-10, 3000 frames. */
STSEG_API stseg_fbank_config stseg_fbank_config_default(void);

typedef struct stseg_specaugment_config {
  int n_freq_masks;
  int max_freq_width;
  int n_time_masks;
  int max_time_width;
  double max_time_fraction;
  double mask_value;
  uint64_t seed;
} stseg_specaugment_config;

/* 2 x F=27, 2 x T=100, p=1.0, mask 0.0, seed 0. */
STSEG_API stseg_specaugment_config stseg_specaugment_config_default(void);

typedef struct stseg_features stseg_features;

STSEG_API stseg_status stseg_fbank_compute(const stseg_audio *audio,
                                           const stseg_fbank_config *config,
                                           stseg_features **out);
/* In place. */
STSEG_API stseg_status stseg_features_apply_cmvn(stseg_features *f);
/* In place. */
STSEG_API stseg_status stseg_features_apply_specaugment(stseg_features *f,
                                                        const stseg_specaugment_config *config);
/* 1 when rows <= max_frames. */
STSEG_API int stseg_features_length_ok(const stseg_features *f, size_t max_frames);
STSEG_API size_t stseg_features_rows(const stseg_features *f);
STSEG_API size_t stseg_features_cols(const stseg_features *f);
STSEG_API int stseg_features_normalized(const stseg_features *f);
STSEG_API double stseg_features_value(const stseg_features *f, size_t row, size_t col);
STSEG_API stseg_status stseg_features_write(const stseg_features *f, const char *path);
STSEG_API stseg_status stseg_features_read(const char *path, stseg_features **out);
STSEG_API void stseg_features_free(stseg_features *f);

/* ---- random re-segmentation ------------------------------------------- */

typedef enum stseg_resegment_mode {
  STSEG_RESEGMENT_SPLIT_ONLY = 0,
  STSEG_RESEGMENT_MERGE_THEN_SPLIT = 1
} stseg_resegment_mode;

typedef struct stseg_corpus stseg_corpus;

STSEG_API stseg_status stseg_corpus_read(const char *path, stseg_corpus **out);
STSEG_API stseg_status stseg_corpus_parse(const char *text, stseg_corpus **out);
STSEG_API stseg_status stseg_corpus_write(const stseg_corpus *c, const char *path);
STSEG_API size_t stseg_corpus_count(const stseg_corpus *c);
STSEG_API void stseg_corpus_free(stseg_corpus *c);
/* report_json may be NULL. */
STSEG_API stseg_status stseg_resegment(const stseg_corpus *in, uint64_t seed, int mode,
                                       unsigned num_threads, stseg_corpus **out,
                                       char **report_json);

/* ---- corpus cleaning -------------------------------------------------- */

typedef struct stseg_profile stseg_profile;

STSEG_API stseg_status stseg_profile_read(const char *path, stseg_profile **out);
STSEG_API stseg_status stseg_profile_build(const char *text, const char *language,
                                           size_t k, stseg_profile **out);
STSEG_API stseg_status stseg_profile_write(const stseg_profile *p, const char *path);
STSEG_API const char *stseg_profile_language(const stseg_profile *p);
STSEG_API stseg_status stseg_profile_score(const stseg_profile *p, const char *text,
                                           double *out);
STSEG_API void stseg_profile_free(stseg_profile *p);

/* 1 if text holds control, replacement, noncharacter or private-use code
 * points, or malformed UTF-8. */
STSEG_API int stseg_has_disallowed_chars(const char *text, size_t len);

typedef struct stseg_parallel stseg_parallel;

STSEG_API stseg_status stseg_parallel_read(const char *path, stseg_parallel **out);
STSEG_API stseg_status stseg_parallel_write(const stseg_parallel *p, const char *path);
STSEG_API size_t stseg_parallel_count(const stseg_parallel *p);
STSEG_API void stseg_parallel_free(stseg_parallel *p);
/* report_json may be NULL. */
STSEG_API stseg_status stseg_clean(const stseg_parallel *in, const stseg_profile *expected,
                                   const stseg_profile *const *contrast, size_t n_contrast,
                                   stseg_parallel **kept, char **report_json);

#ifdef __cplusplus
}  /* extern "C" */
#endif

#endif  /* STSEG_STSEG_H_ */
