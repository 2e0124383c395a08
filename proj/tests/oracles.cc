// tests/oracles.cc

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

#include "oracles.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <sys/wait.h>

namespace stseg::testing {

namespace {

std::size_t Uniform(std::mt19937_64 &gen, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(gen);
}

double UniformReal(std::mt19937_64 &gen, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(gen);
}

double Millis(double seconds) { return std::round(seconds * 1000.0) / 1000.0; }

const char *const kWords[] = {"so", "the", "ocean", "light", "we", "found",
                              "deep", "water", "and", "people", "city",
                              "small", "idea", "time", "world", "change"};

}  // namespace

std::vector<bool> RandomDecisions(std::mt19937_64 &gen, std::size_t frames) {
  std::vector<bool> labels;
  labels.reserve(frames);
  bool voiced = Uniform(gen, 0, 1) == 1;
  while (labels.size() < frames) {
    const std::size_t pick = Uniform(gen, 0, 99);
    std::size_t len;
    if (voiced)
      len = pick < 10 ? Uniform(gen, 1, 5)
                      : pick < 75 ? Uniform(gen, 5, 300) : Uniform(gen, 300, 1500);
    else
      len = pick < 55 ? Uniform(gen, 1, 15)
                      : pick < 90 ? Uniform(gen, 15, 60) : Uniform(gen, 60, 300);
    for (std::size_t i = 0; i < len && labels.size() < frames; ++i)
      labels.push_back(voiced);
    voiced = !voiced;
  }
  return labels;
}

std::vector<Span> OracleHybrid(const std::vector<bool> &labels, int frame_ms,
                               int min_ms, int max_ms, bool score_full_run) {
  const std::size_t n = labels.size();
  const std::size_t fmin = static_cast<std::size_t>((min_ms + frame_ms - 1) / frame_ms);
  const std::size_t fmax = static_cast<std::size_t>(max_ms / frame_ms);
  std::vector<Span> out;
  std::size_t c = 0;
  while (n - c > fmax) {
    const std::size_t lo = c + fmin, hi = c + fmax;  // inclusive window
    std::size_t best = 0, cut = c + fmax;
    for (std::size_t k = lo; k <= hi; ++k) {
      if (labels[k]) continue;
      if (k > lo && !labels[k - 1]) continue;  // already visited this pause
      std::size_t s = k, e = k;  // inclusive run bounds
      while (s > 0 && !labels[s - 1]) --s;
      while (e + 1 < n && !labels[e + 1]) ++e;
      const std::size_t a = std::max(s, lo), z = std::min(e, hi);
      const std::size_t score = score_full_run ? e - s + 1 : z - a + 1;
      if (score > best) {
        best = score;
        cut = a + (z - a + 1) / 2;
      }
    }
    out.emplace_back(c, cut);
    c = cut;
  }
  out.emplace_back(c, n);
  return out;
}

std::vector<Span> OracleVadSegments(const std::vector<bool> &labels,
                                    std::size_t min_pause_frames,
                                    int min_speech_ms, int frame_ms) {
  std::vector<bool> filled = labels;
  const std::size_t n = labels.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (labels[i] || (i > 0 && !labels[i - 1])) continue;
    std::size_t j = i;
    while (j < n && !labels[j]) ++j;
    const bool internal = i > 0 && j < n;
    if (internal && j - i < min_pause_frames)
      for (std::size_t k = i; k < j; ++k) filled[k] = true;
  }
  std::vector<Span> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (!filled[i] || (i > 0 && filled[i - 1])) continue;
    std::size_t j = i;
    while (j < n && filled[j]) ++j;
    if (static_cast<long long>(j - i) * frame_ms >= min_speech_ms) out.emplace_back(i, j);
  }
  return out;
}

std::vector<Span> OraclePauses(const std::vector<bool> &labels,
                               std::size_t min_frames) {
  std::vector<Span> out;
  std::size_t start = 0;
  bool in_pause = false;
  for (std::size_t i = 0; i <= labels.size(); ++i) {
    const bool pause_here = i < labels.size() && !labels[i];
    if (pause_here && !in_pause) start = i;
    if (!pause_here && in_pause && i - start >= min_frames) out.emplace_back(start, i);
    in_pause = pause_here;
  }
  return out;
}

std::vector<std::vector<double>> OracleFbank(const std::vector<float> &samples,
                                             int n_mels) {
  constexpr std::size_t kWin = 400, kHop = 160, kN = 512, kBins = kN / 2 + 1;
  constexpr double kRate = 16000.0;
  const double two_pi = 2.0 * std::numbers::pi;
  std::vector<double> cos_t(kN), sin_t(kN);
  for (std::size_t i = 0; i < kN; ++i) {
    cos_t[i] = std::cos(two_pi * static_cast<double>(i) / kN);
    sin_t[i] = std::sin(two_pi * static_cast<double>(i) / kN);
  }
  auto mel = [](double hz) { return 1127.0 * std::log(1.0 + hz / 700.0); };
  const double mlo = mel(20.0), mhi = mel(kRate / 2.0);
  const double step = (mhi - mlo) / (n_mels + 1);
  std::vector<std::vector<double>> weight(n_mels, std::vector<double>(kBins, 0.0));
  for (int m = 0; m < n_mels; ++m) {
    const double l = mlo + m * step, c = mlo + (m + 1) * step, r = mlo + (m + 2) * step;
    for (std::size_t k = 0; k < kBins; ++k) {
      const double x = mel(static_cast<double>(k) * kRate / kN);
      weight[m][k] = std::max(0.0, std::min((x - l) / (c - l), (r - x) / (r - c)));
    }
  }

  std::vector<std::vector<double>> out;
  if (samples.size() < kWin) return out;
  const std::size_t frames = 1 + (samples.size() - kWin) / kHop;
  std::vector<double> x(kWin), y(kWin), power(kBins);
  for (std::size_t f = 0; f < frames; ++f) {
    double mean = 0.0;
    for (std::size_t i = 0; i < kWin; ++i) mean += samples[f * kHop + i];
    mean /= kWin;
    for (std::size_t i = 0; i < kWin; ++i) x[i] = samples[f * kHop + i] - mean;
    for (std::size_t i = 0; i < kWin; ++i) {
      const double prev = i == 0 ? x[0] : x[i - 1];
      const double hamming = 0.54 - 0.46 * std::cos(two_pi * i / (kWin - 1.0));
      y[i] = (x[i] - 0.97 * prev) * hamming;
    }
    for (std::size_t k = 0; k < kBins; ++k) {
      double re = 0.0, im = 0.0;
      for (std::size_t i = 0; i < kWin; ++i) {
        re += y[i] * cos_t[(k * i) % kN];
        im -= y[i] * sin_t[(k * i) % kN];
      }
      power[k] = re * re + im * im;
    }
    std::vector<double> row(n_mels);
    for (int m = 0; m < n_mels; ++m) {
      double e = 0.0;
      for (std::size_t k = 0; k < kBins; ++k) e += weight[m][k] * power[k];
      row[m] = std::log(std::max(e, 1e-10));
    }
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<bool> OracleVadLabels(const std::vector<float> &samples,
                                  int frame_ms, int aggressiveness,
                                  int hangover) {
  const std::size_t len = static_cast<std::size_t>(16 * frame_ms);
  const std::size_t frames = samples.size() / len;
  const double margin = 3.0 * (aggressiveness + 1);
  const double rise = 5.0 * frame_ms / 1000.0;
  std::vector<double> e(frames);
  for (std::size_t f = 0; f < frames; ++f) {
    double acc = 0.0;
    for (std::size_t i = 0; i < len; ++i) {
      const double v = samples[f * len + i];
      acc += v * v;
    }
    e[f] = 10.0 * std::log10(acc / static_cast<double>(len) + 1e-12);
  }
  std::vector<bool> raw(frames, false);
  double floor = 0.0;
  for (std::size_t f = 0; f < frames; ++f) {
    const std::size_t first = f >= 99 ? f - 99 : 0;
    std::vector<double> w(e.begin() + static_cast<long>(first),
                          e.begin() + static_cast<long>(f + 1));
    std::sort(w.begin(), w.end());
    const auto rank = static_cast<std::size_t>(std::ceil(w.size() / 10.0));
    floor = f == 0 ? e[0] : std::min(w[rank - 1], floor + rise);
    raw[f] = e[f] > floor + margin;
  }
  std::vector<bool> out(frames, false);
  std::size_t last_voiced = 0;
  bool any = false;
  for (std::size_t f = 0; f < frames; ++f) {
    if (raw[f]) {
      last_voiced = f;
      any = true;
    }
    out[f] = any && f - last_voiced <= static_cast<std::size_t>(hangover);
  }
  return out;
}

std::optional<std::size_t> OracleTargetBoundary(
    std::size_t tgt_count, const std::vector<AlignmentLink> &links,
    std::size_t b) {
  std::vector<bool> aligned(tgt_count, false);
  for (const auto &l : links) aligned[l.tgt] = true;
  for (std::size_t t = 0; t <= tgt_count; ++t) {
    bool ok = true;
    for (const auto &l : links)
      if ((l.src < b) != (l.tgt < t)) ok = false;
    for (std::size_t j = 0; ok && j < tgt_count; ++j) {
      if (aligned[j]) continue;
      std::optional<std::size_t> left, right;
      for (std::size_t k = 0; k < j; ++k)
        if (aligned[k]) left = k;
      for (std::size_t k = tgt_count; k-- > j + 1;)
        if (aligned[k]) right = k;
      if (!left && !right) continue;
      std::size_t nearest;
      if (!right || (left && j - *left <= *right - j))
        nearest = *left;
      else
        nearest = *right;
      if ((j < t) != (nearest < t)) ok = false;
    }
    if (ok) return t;
  }
  return std::nullopt;
}

std::vector<float> SilenceToneSignal(std::mt19937_64 &gen, double seconds,
                                     int frame_ms, std::vector<bool> *truth) {
  const auto total = static_cast<std::size_t>(seconds * 16000.0);
  std::vector<float> x;
  std::vector<bool> is_tone;
  x.reserve(total);
  std::normal_distribution<double> normal(0.0, 1.0);
  const bool zeros = Uniform(gen, 0, 4) == 0;
  const double noise = zeros ? 0.0 : std::exp(UniformReal(gen, std::log(1e-4), std::log(3e-3)));
  bool tone = false;
  std::size_t seg = static_cast<std::size_t>(UniformReal(gen, 0.5, 2.0) * 16000.0);
  while (x.size() < total) {
    const double amp = UniformReal(gen, 0.05, 0.8);
    const double freq = UniformReal(gen, 100.0, 4000.0);
    for (std::size_t i = 0; i < seg && x.size() < total; ++i) {
      double v = noise * normal(gen);
      if (tone) v += amp * std::sin(2.0 * std::numbers::pi * freq * i / 16000.0);
      x.push_back(static_cast<float>(v));
      is_tone.push_back(tone);
    }
    tone = !tone;
    seg = static_cast<std::size_t>(
        UniformReal(gen, 0.3, tone ? 3.0 : 2.5) * 16000.0);
  }
  if (truth) {
    const std::size_t len = static_cast<std::size_t>(16 * frame_ms);
    truth->assign(total / len, false);
    for (std::size_t f = 0; f < truth->size(); ++f) {
      std::size_t count = 0;
      for (std::size_t i = f * len; i < (f + 1) * len; ++i) count += is_tone[i];
      (*truth)[f] = 2 * count > len;
    }
  }
  return x;
}

AlignedSample MonotoneSample(std::mt19937_64 &gen, const std::string &id,
                             const std::string &talk, double offset_s) {
  AlignedSample s;
  s.id = id;
  s.wav = talk + ".wav";
  s.talk_id = talk;
  s.offset_s = Millis(offset_s);
  const std::size_t n = Uniform(gen, 1, 25);
  double t = Millis(UniformReal(gen, 0.02, 0.3));
  for (std::size_t i = 0; i < n; ++i) {
    const double start = t;
    const double end = Millis(start + UniformReal(gen, 0.1, 0.6));
    s.src_words.push_back({kWords[Uniform(gen, 0, 15)], WordTiming{start, end}});
    t = Millis(end + UniformReal(gen, 0.0, 0.3));
  }
  s.duration_s = Millis(s.src_words.back().timing->end_s + UniformReal(gen, 0.05, 0.5));

  std::vector<std::size_t> aligned_src;
  for (std::size_t i = 0; i < n; ++i)
    if (i == 0 || i + 1 == n || Uniform(gen, 0, 99) >= 15) aligned_src.push_back(i);
  const std::size_t m = aligned_src.size() + Uniform(gen, 0, 3);
  std::vector<std::size_t> tgt_slots(m);
  for (std::size_t j = 0; j < m; ++j) tgt_slots[j] = j;
  std::shuffle(tgt_slots.begin(), tgt_slots.end(), gen);
  tgt_slots.resize(aligned_src.size());
  std::sort(tgt_slots.begin(), tgt_slots.end());
  for (std::size_t j = 0; j < m; ++j) s.tgt_words.push_back("T" + std::to_string(j));
  for (std::size_t k = 0; k < aligned_src.size(); ++k)
    s.links.push_back({aligned_src[k], tgt_slots[k]});
  return s;
}

std::vector<AlignedSample> MonotoneCorpus(std::mt19937_64 &gen,
                                          std::size_t count) {
  std::vector<AlignedSample> corpus;
  std::size_t talk = 0;
  while (corpus.size() < count) {
    const std::size_t in_talk = std::min(count - corpus.size(), Uniform(gen, 5, 40));
    char talk_id[32];
    std::snprintf(talk_id, sizeof(talk_id), "talk%03zu", talk++);
    double offset = Millis(UniformReal(gen, 0.0, 5.0));
    for (std::size_t k = 0; k < in_talk; ++k) {
      char id[48];
      std::snprintf(id, sizeof(id), "%s_%04zu", talk_id, k);
      corpus.push_back(MonotoneSample(gen, id, talk_id, offset));
      const double gap = Uniform(gen, 0, 9) == 0 ? 0.5 : Millis(UniformReal(gen, 0.0, 0.05));
      offset = Millis(offset + corpus.back().duration_s + gap);
    }
  }
  return corpus;
}

bool MaskDiffDecomposes(const MelMatrix &in, const MelMatrix &out,
                        const SpecAugmentConfig &config, std::string *why) {
  auto fail = [&](const std::string &msg) {
    if (why) *why = msg;
    return false;
  };
  if (in.rows() != out.rows() || in.cols() != out.cols()) return fail("shape changed");
  const std::size_t rows = in.rows(), cols = in.cols();
  std::vector<bool> full_col(cols, true), full_row(rows, true);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      const bool changed = in(r, c) != out(r, c);
      if (changed && out(r, c) != config.mask_value) return fail("changed cell not masked");
      if (!changed) {
        full_col[c] = false;
        full_row[r] = false;
      }
    }
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if ((in(r, c) != out(r, c)) != (full_col[c] || full_row[r]))
        return fail("changed cells are not whole rows and columns");

  // A run of length L needs ceil(L / width) bands of at most `width`.
  auto bands_needed = [](const std::vector<bool> &mask, std::size_t width,
                         std::size_t *count) {
    *count = 0;
    for (std::size_t i = 0; i < mask.size();) {
      if (!mask[i]) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < mask.size() && mask[j]) ++j;
      if (width == 0) return false;
      *count += (j - i + width - 1) / width;
      i = j;
    }
    return true;
  };
  const auto freq_width = static_cast<std::size_t>(config.max_freq_width);
  const auto time_width = std::min<std::size_t>(
      static_cast<std::size_t>(config.max_time_width),
      static_cast<std::size_t>(std::floor(config.max_time_fraction * rows)));
  std::size_t n_cols = 0, n_rows = 0;
  if (!bands_needed(full_col, freq_width, &n_cols) ||
      n_cols > static_cast<std::size_t>(config.n_freq_masks))
    return fail("column bands exceed the frequency mask budget");
  if (!bands_needed(full_row, time_width, &n_rows) ||
      n_rows > static_cast<std::size_t>(config.n_time_masks))
    return fail("row bands exceed the time mask budget");
  return true;
}

MelMatrix RandomMatrix(std::mt19937_64 &gen, std::size_t rows, std::size_t cols,
                       const std::vector<double> &mean,
                       const std::vector<double> &stddev) {
  std::normal_distribution<double> normal(0.0, 1.0);
  MelMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = mean[c] + stddev[c] * normal(gen);
  return m;
}

namespace {

std::string ShellQuote(const std::string &s) {
  std::string out = "'";
  for (char c : s) out += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return out + "'";
}

}  // namespace

int RunProgram(const std::string &program, const std::vector<std::string> &args,
               const std::filesystem::path &stdout_path,
               const std::filesystem::path &stderr_path) {
  std::string cmd = ShellQuote(program);
  for (const std::string &a : args) cmd += " " + ShellQuote(a);
  cmd += " >" + (stdout_path.empty() ? std::string("/dev/null") : ShellQuote(stdout_path.string()));
  cmd += " 2>" + (stderr_path.empty() ? std::string("/dev/null") : ShellQuote(stderr_path.string()));
  const int status = std::system(cmd.c_str());
  if (status == -1 || !WIFEXITED(status)) return -1;
  return WEXITSTATUS(status);
}

std::filesystem::path MakeTempDir(const std::string &tag) {
  std::random_device rd;
  const auto base = std::filesystem::temp_directory_path();
  for (int attempt = 0; attempt < 100; ++attempt) {
    const auto dir = base / ("stseg-" + tag + "-" + std::to_string(rd()));
    if (std::filesystem::create_directory(dir)) return dir;
  }
  throw std::runtime_error("cannot create a temporary directory");
}

std::string ReadFileBytes(const std::filesystem::path &path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void WriteFileBytes(const std::filesystem::path &path, const std::string &bytes) {
  std::ofstream f(path, std::ios::binary);
  f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!f) throw std::runtime_error("cannot write " + path.string());
}

}  // namespace stseg::testing
