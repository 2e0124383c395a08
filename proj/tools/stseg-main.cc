// tools/stseg-main.cc

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

// Command-line front end. Talks to the library only through stseg.h.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "stseg/stseg.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitProcessing = 3;

int ExitCodeFor(stseg_status status) {
  switch (status) {
    case STSEG_OK:
      return kExitOk;
    case STSEG_ERR_INVALID_ARGUMENT:
    case STSEG_ERR_BAD_FRAME_DURATION:
      return kExitUsage;
    case STSEG_ERR_IO:
    case STSEG_ERR_NOT_WAV:
    case STSEG_ERR_UNSUPPORTED_ENCODING:
    case STSEG_ERR_UNSUPPORTED_CHANNELS:
    case STSEG_ERR_UNSUPPORTED_RATE:
    case STSEG_ERR_TRUNCATED_FILE:
    case STSEG_ERR_BAD_DECISIONS_FORMAT:
    case STSEG_ERR_BAD_MANIFEST:
    case STSEG_ERR_BAD_FEATURE_FILE:
    case STSEG_ERR_BAD_PROFILE:
    case STSEG_ERR_BAD_CORPUS:
      return kExitInput;
    default:
      return kExitProcessing;
  }
}

// Thrown on the first failing library call; carries the exit code.
struct CommandError {
  int exit_code;
};

void Check(stseg_status status) {
  if (status == STSEG_OK) return;
  std::cerr << "stseg: error: " << stseg_status_name(status) << ": " << stseg_last_error()
            << "\n";
  throw CommandError{ExitCodeFor(status)};
}

[[noreturn]] void ProcessingError(const std::string &what) {
  std::cerr << "stseg: error: rejected: " << what << "\n";
  throw CommandError{kExitProcessing};
}

template <class T, void (*Free)(T *)>
struct Deleter {
  void operator()(T *p) const { Free(p); }
};
using Audio = std::unique_ptr<stseg_audio, Deleter<stseg_audio, stseg_audio_free>>;
using Decisions = std::unique_ptr<stseg_decisions, Deleter<stseg_decisions, stseg_decisions_free>>;
using Segments = std::unique_ptr<stseg_segments, Deleter<stseg_segments, stseg_segments_free>>;
using Features = std::unique_ptr<stseg_features, Deleter<stseg_features, stseg_features_free>>;
using Corpus = std::unique_ptr<stseg_corpus, Deleter<stseg_corpus, stseg_corpus_free>>;
using Profile = std::unique_ptr<stseg_profile, Deleter<stseg_profile, stseg_profile_free>>;
using Parallel = std::unique_ptr<stseg_parallel, Deleter<stseg_parallel, stseg_parallel_free>>;
using OwnedString = std::unique_ptr<char, Deleter<char, stseg_string_free>>;

void WriteReport(const OwnedString &json, const std::string &path) {
  if (path.empty()) return;
  const std::string text = std::string(json.get()) + "\n";
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    std::cerr << "stseg: error: io: cannot write '" << path << "'\n";
    throw CommandError{kExitInput};
  }
  f << text;
}

bool LooksLikeDecisions(const std::string &path) {
  std::ifstream f(path, std::ios::binary);
  char magic[4] = {};
  return f.read(magic, 4) && std::string(magic, 4) == "#vad";
}

struct VadFlags {
  int frame_ms = 20;
  int aggressiveness = 2;
  int hangover = 4;

  void Register(CLI::App *cmd) {
    cmd->add_option("--frame-ms", frame_ms, "VAD frame duration in ms: 10, 20 or 30")
        ->capture_default_str();
    cmd->add_option("--aggr", aggressiveness, "VAD aggressiveness, 0 (lenient) to 3 (strict)")
        ->check(CLI::Range(0, 3))
        ->capture_default_str();
    cmd->add_option("--hangover", hangover, "frames appended after each voiced run")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
  }

  stseg_vad_config Config() const { return {frame_ms, aggressiveness, hangover}; }
};

Decisions RunVad(const std::string &wav, const VadFlags &flags) {
  stseg_audio *raw_audio = nullptr;
  Check(stseg_audio_read_wav(wav.c_str(), &raw_audio));
  Audio audio(raw_audio);
  const stseg_vad_config config = flags.Config();
  stseg_decisions *raw = nullptr;
  Check(stseg_vad_detect(audio.get(), &config, &raw));
  return Decisions(raw);
}

std::string ProfilePath(const std::string &name, const std::string &dir) {
  if (std::filesystem::is_regular_file(name)) return name;
  return (std::filesystem::path(dir) / (name + ".profile")).string();
}

Profile LoadProfile(const std::string &name, const std::string &dir) {
  stseg_profile *raw = nullptr;
  Check(stseg_profile_read(ProfilePath(name, dir).c_str(), &raw));
  return Profile(raw);
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Length-constrained audio segmentation and speech-translation data preparation"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(stseg_version()));

  // vad
  std::string vad_input, vad_output = "-";
  VadFlags vad_flags;
  auto *vad = app.add_subcommand("vad", "Write per-frame voice activity decisions for a WAV file");
  vad->add_option("wav", vad_input, "16 kHz mono 16-bit PCM WAV")->required();
  vad_flags.Register(vad);
  vad->add_option("-o,--output", vad_output, "decisions file ('-' for stdout)")
      ->capture_default_str();

  // segment
  std::string seg_input, seg_output = "-", seg_mode = "hybrid", seg_speaker, seg_wav;
  std::string seg_scoring = "full";
  double seg_min = 17.0, seg_max = 20.0, seg_min_speech = 0.5;
  std::size_t seg_min_pause = 10;
  VadFlags seg_vad_flags;
  auto *segment = app.add_subcommand(
      "segment", "Segment a WAV file or a decisions file into a segment manifest");
  segment->add_option("input", seg_input, "WAV file or decisions file")->required();
  segment->add_option("--mode", seg_mode, "hybrid (length-constrained) or vad (pause-only)")
      ->check(CLI::IsMember({"hybrid", "vad"}))
      ->capture_default_str();
  segment->add_option("--min", seg_min, "hybrid: minimum segment length in seconds")
      ->capture_default_str();
  segment->add_option("--max", seg_max, "hybrid: maximum segment length in seconds")
      ->capture_default_str();
  segment->add_option("--pause-scoring", seg_scoring,
                      "hybrid: rank pauses by full length or by the part inside the window")
      ->check(CLI::IsMember({"full", "window"}))
      ->capture_default_str();
  segment->add_option("--min-pause-frames", seg_min_pause,
                      "vad: shortest non-voiced run that separates segments")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  segment->add_option("--min-speech", seg_min_speech, "vad: drop segments shorter than this (s)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  segment->add_option("--speaker", seg_speaker, "speaker_id for every record (default: wav stem)");
  segment->add_option("--wav", seg_wav,
                      "wav name written to the manifest (default: input name, or the "
                      "decisions file stem + .wav)");
  seg_vad_flags.Register(segment);
  segment->add_option("-o,--output", seg_output, "manifest file ('-' for stdout)")
      ->capture_default_str();

  // fbank
  std::string fb_input, fb_output = "-";
  bool fb_cmvn = false, fb_specaugment = false;
  std::uint64_t fb_seed = 0;
  stseg_fbank_config fb_config = stseg_fbank_config_default();
  stseg_specaugment_config sa_config = stseg_specaugment_config_default();
  auto *fbank = app.add_subcommand("fbank", "Extract log-Mel filterbank features to FBNK");
  fbank->add_option("wav", fb_input, "16 kHz mono 16-bit PCM WAV")->required();
  fbank->add_option("--n-mels", fb_config.n_mels, "number of mel filters")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  fbank->add_option("--max-frames", fb_config.max_frames,
                    "reject inputs with more frames than this (0 disables)")
      ->capture_default_str();
  fbank->add_flag("--cmvn", fb_cmvn, "apply utterance-level mean/variance normalization");
  fbank->add_flag("--specaugment", fb_specaugment, "apply frequency and time masking");
  fbank->add_option("--seed", fb_seed, "SpecAugment seed")->capture_default_str();
  fbank->add_option("--freq-masks", sa_config.n_freq_masks, "SpecAugment frequency masks")
      ->capture_default_str();
  fbank->add_option("--freq-width", sa_config.max_freq_width, "SpecAugment max mask width (bins)")
      ->capture_default_str();
  fbank->add_option("--time-masks", sa_config.n_time_masks, "SpecAugment time masks")
      ->capture_default_str();
  fbank->add_option("--time-width", sa_config.max_time_width,
                    "SpecAugment max mask width (frames)")
      ->capture_default_str();
  fbank->add_option("-o,--output", fb_output, "FBNK file ('-' for stdout)")->capture_default_str();

  // resegment
  std::string rs_input, rs_output = "-", rs_report, rs_mode = "merge-then-split";
  std::uint64_t rs_seed = 0;
  unsigned rs_threads = 1;
  auto *resegment = app.add_subcommand(
      "resegment", "Re-split an aligned corpus at random word boundaries");
  resegment->add_option("tsv", rs_input, "aligned corpus (9-column TSV)")->required();
  resegment->add_option("--seed", rs_seed, "global seed")->required();
  resegment->add_option("--mode", rs_mode, "merge-then-split or split-only")
      ->check(CLI::IsMember({"merge-then-split", "split-only"}))
      ->capture_default_str();
  resegment->add_option("--threads", rs_threads, "worker threads (output is unaffected)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  resegment->add_option("-o,--output", rs_output, "output corpus ('-' for stdout)")
      ->capture_default_str();
  resegment->add_option("--report", rs_report, "write the JSON report here ('-' for stdout)");

  // clean
  std::string cl_input, cl_output = "-", cl_report, cl_tgt = "de";
  std::vector<std::string> cl_contrast = {"en"};
  std::string cl_profile_dir = STSEG_DEFAULT_PROFILE_DIR;
  auto *clean = app.add_subcommand(
      "clean", "Drop pairs with disallowed characters or an off-language target");
  clean->add_option("tsv", cl_input, "parallel corpus, 'src\\ttgt' per line")->required();
  clean->add_option("--tgt-profile", cl_tgt, "expected target language (code or profile file)")
      ->capture_default_str();
  clean->add_option("--contrast", cl_contrast, "competing languages (codes or profile files)")
      ->capture_default_str();
  clean->add_option("--profile-dir", cl_profile_dir, "directory holding <code>.profile files")
      ->capture_default_str();
  clean->add_option("-o,--output", cl_output, "kept pairs ('-' for stdout)")->capture_default_str();
  clean->add_option("--report", cl_report, "write the JSON report here ('-' for stdout)");

  // stats
  std::string st_input, st_output = "-";
  auto *stats = app.add_subcommand("stats", "Summarize a segment manifest as JSON");
  stats->add_option("manifest", st_input, "segment manifest")->required();
  stats->add_option("-o,--output", st_output, "JSON output ('-' for stdout)")
      ->capture_default_str();

  // profile
  std::string pr_input, pr_output = "-", pr_lang;
  std::size_t pr_k = 300;
  auto *profile = app.add_subcommand("profile", "Build a trigram language profile from text");
  profile->add_option("text", pr_input, "UTF-8 seed text")->required();
  profile->add_option("--lang", pr_lang, "language code")->required();
  profile->add_option("-k", pr_k, "profile size")->check(CLI::PositiveNumber)->capture_default_str();
  profile->add_option("-o,--output", pr_output, "profile file ('-' for stdout)")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*vad) {
      Decisions d = RunVad(vad_input, vad_flags);
      Check(stseg_decisions_write(d.get(), vad_output.c_str()));
    } else if (*segment) {
      Decisions d;
      std::string wav_name = seg_wav;
      if (LooksLikeDecisions(seg_input)) {
        stseg_decisions *raw = nullptr;
        Check(stseg_decisions_read(seg_input.c_str(), &raw));
        d.reset(raw);
        if (wav_name.empty())
          wav_name = std::filesystem::path(seg_input).stem().string() + ".wav";
      } else {
        d = RunVad(seg_input, seg_vad_flags);
        if (wav_name.empty()) wav_name = std::filesystem::path(seg_input).filename().string();
      }
      const std::string speaker =
          seg_speaker.empty() ? std::filesystem::path(wav_name).stem().string() : seg_speaker;
      stseg_segments *raw = nullptr;
      if (seg_mode == "hybrid") {
        stseg_segmenter_config config = stseg_segmenter_config_default();
        config.min_len_s = seg_min;
        config.max_len_s = seg_max;
        config.pause_scoring = seg_scoring == "window" ? STSEG_PAUSE_IN_WINDOW : STSEG_PAUSE_FULL_RUN;
        Check(stseg_segment_hybrid(d.get(), &config, wav_name.c_str(), speaker.c_str(), &raw));
      } else {
        Check(stseg_segment_vad(d.get(), seg_min_pause, seg_min_speech, wav_name.c_str(),
                                speaker.c_str(), &raw));
      }
      Segments segs(raw);
      Check(stseg_segments_write_manifest(segs.get(), seg_output.c_str()));
    } else if (*fbank) {
      stseg_audio *raw_audio = nullptr;
      Check(stseg_audio_read_wav(fb_input.c_str(), &raw_audio));
      Audio audio(raw_audio);
      stseg_features *raw = nullptr;
      Check(stseg_fbank_compute(audio.get(), &fb_config, &raw));
      Features feats(raw);
      if (fb_config.max_frames > 0 && !stseg_features_length_ok(feats.get(), fb_config.max_frames))
        ProcessingError(std::to_string(stseg_features_rows(feats.get())) + " frames exceed " +
                        std::to_string(fb_config.max_frames));
      if (fb_cmvn) Check(stseg_features_apply_cmvn(feats.get()));
      if (fb_specaugment) {
        sa_config.seed = fb_seed;
        Check(stseg_features_apply_specaugment(feats.get(), &sa_config));
      }
      Check(stseg_features_write(feats.get(), fb_output.c_str()));
    } else if (*resegment) {
      stseg_corpus *raw_in = nullptr;
      Check(stseg_corpus_read(rs_input.c_str(), &raw_in));
      Corpus in(raw_in);
      stseg_corpus *raw_out = nullptr;
      char *json = nullptr;
      const int mode = rs_mode == "split-only" ? STSEG_RESEGMENT_SPLIT_ONLY
                                               : STSEG_RESEGMENT_MERGE_THEN_SPLIT;
      Check(stseg_resegment(in.get(), rs_seed, mode, rs_threads, &raw_out, &json));
      Corpus out(raw_out);
      OwnedString report(json);
      Check(stseg_corpus_write(out.get(), rs_output.c_str()));
      WriteReport(report, rs_report);
    } else if (*clean) {
      Profile expected = LoadProfile(cl_tgt, cl_profile_dir);
      std::vector<Profile> contrast;
      std::vector<const stseg_profile *> contrast_ptrs;
      for (const std::string &name : cl_contrast) {
        contrast.push_back(LoadProfile(name, cl_profile_dir));
        contrast_ptrs.push_back(contrast.back().get());
      }
      stseg_parallel *raw_in = nullptr;
      Check(stseg_parallel_read(cl_input.c_str(), &raw_in));
      Parallel in(raw_in);
      stseg_parallel *raw_kept = nullptr;
      char *json = nullptr;
      Check(stseg_clean(in.get(), expected.get(), contrast_ptrs.data(), contrast_ptrs.size(),
                        &raw_kept, &json));
      Parallel kept(raw_kept);
      OwnedString report(json);
      Check(stseg_parallel_write(kept.get(), cl_output.c_str()));
      WriteReport(report, cl_report);
    } else if (*stats) {
      stseg_segments *raw = nullptr;
      Check(stseg_segments_read_manifest(st_input.c_str(), &raw));
      Segments segs(raw);
      char *json = nullptr;
      Check(stseg_segments_stats_json(segs.get(), &json));
      WriteReport(OwnedString(json), st_output);
    } else if (*profile) {
      std::ifstream f(pr_input, std::ios::binary);
      if (!f || std::filesystem::is_directory(pr_input)) {
        std::cerr << "stseg: error: io: cannot open '" << pr_input << "'\n";
        return kExitInput;
      }
      const std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
      stseg_profile *raw = nullptr;
      Check(stseg_profile_build(text.c_str(), pr_lang.c_str(), pr_k, &raw));
      Profile p(raw);
      Check(stseg_profile_write(p.get(), pr_output.c_str()));
    }
  } catch (const CommandError &e) {
    return e.exit_code;
  }
  return kExitOk;
}
