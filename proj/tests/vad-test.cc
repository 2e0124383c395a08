// tests/vad-test.cc

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

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.h"
#include "stseg/error.h"
#include "stseg/vad.h"

namespace {

using stseg::AudioBuffer;
using stseg::ErrorCode;
using stseg::VadConfig;
using stseg::VadDecisions;
namespace st = stseg::testing;

ErrorCode ParseCode(const std::string &text) {
  try {
    stseg::ParseDecisions(text);
  } catch (const stseg::Error &e) {
    return e.code();
  }
  return ErrorCode::kInvalidArgument;
}

double Accuracy(const std::vector<bool> &a, const std::vector<bool> &b) {
  std::size_t same = 0;
  for (std::size_t i = 0; i < a.size(); ++i) same += a[i] == b[i];
  return static_cast<double>(same) / static_cast<double>(a.size());
}

}  // namespace

TEST_CASE("margins grow by 3 dB per aggressiveness level") {
  CHECK(stseg::VadMarginDb(0) == 3.0);
  CHECK(stseg::VadMarginDb(1) == 6.0);
  CHECK(stseg::VadMarginDb(2) == 9.0);
  CHECK(stseg::VadMarginDb(3) == 12.0);
  CHECK_THROWS_AS(stseg::VadMarginDb(4), stseg::Error);
  CHECK_THROWS_AS(stseg::VadMarginDb(-1), stseg::Error);
}

TEST_CASE("frame energies are mean-square in dB") {
  const AudioBuffer half(16000, std::vector<float>(640, 0.5f));
  const auto e = stseg::FrameLogEnergies(half, 20);
  REQUIRE(e.size() == 2);
  CHECK(e[0] == doctest::Approx(10.0 * std::log10(0.25 + 1e-12)).epsilon(1e-12));
  const AudioBuffer zero(16000, std::vector<float>(480, 0.0f));
  CHECK(stseg::FrameLogEnergies(zero, 30)[0] == doctest::Approx(-120.0));
}

TEST_CASE("detector labels equal the reference rule on random signals") {
  std::mt19937_64 gen(7);
  for (int trial = 0; trial < 24; ++trial) {
    VadConfig cfg;
    cfg.frame_ms = (trial % 3 + 1) * 10;
    cfg.aggressiveness = trial % 4;
    cfg.hangover_frames = trial % 6;
    std::vector<float> x = st::SilenceToneSignal(gen, 6.0 + trial % 5, cfg.frame_ms, nullptr);
    const AudioBuffer a(16000, x);
    const VadDecisions d = stseg::DetectVoice(a, cfg);
    CHECK(d.frame_ms == cfg.frame_ms);
    CHECK(d.total_audio_seconds == doctest::Approx(a.DurationSeconds()));
    CHECK(d.labels == st::OracleVadLabels(x, cfg.frame_ms, cfg.aggressiveness,
                                          cfg.hangover_frames));
  }
}

TEST_CASE("silence and tone are separated at the default setting") {
  std::mt19937_64 gen(11);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<bool> truth;
    const auto x = st::SilenceToneSignal(gen, 20.0, 20, &truth);
    const VadDecisions d = stseg::DetectVoice(AudioBuffer(16000, x), VadConfig{});
    REQUIRE(d.size() == truth.size());
    CHECK(Accuracy(d.labels, truth) >= 0.95);
  }
}

TEST_CASE("digital silence is never voiced") {
  const AudioBuffer a(16000, std::vector<float>(16000 * 3, 0.0f));
  const VadDecisions d = stseg::DetectVoice(a, VadConfig{});
  CHECK(d.size() == 150);
  for (bool v : d.labels) CHECK_FALSE(v);
}

TEST_CASE("hangover extends each voiced run to the right") {
  // 2 s of silence, a 100 ms burst, then silence again.
  std::vector<float> x(16000 * 4, 0.0f);
  for (std::size_t i = 32000; i < 33600; ++i) x[i] = 0.5f * static_cast<float>(std::sin(i * 0.3));
  VadConfig cfg;
  cfg.hangover_frames = 0;
  const auto bare = stseg::DetectVoice(AudioBuffer(16000, x), cfg);
  cfg.hangover_frames = 4;
  const auto hung = stseg::DetectVoice(AudioBuffer(16000, x), cfg);
  std::size_t n_bare = 0, n_hung = 0;
  for (bool v : bare.labels) n_bare += v;
  for (bool v : hung.labels) n_hung += v;
  CHECK(n_bare == 5);
  CHECK(n_hung == 9);
  CHECK(hung.labels[100]);
  CHECK(hung.labels[108]);
  CHECK_FALSE(hung.labels[109]);
}

TEST_CASE("pause extraction matches a direct scan") {
  std::mt19937_64 gen(3);
  for (int trial = 0; trial < 200; ++trial) {
    VadDecisions d;
    d.labels = st::RandomDecisions(gen, 200 + trial * 7);
    const std::size_t min = 1 + trial % 20;
    const auto pauses = stseg::ExtractPauses(d, min);
    const auto expect = st::OraclePauses(d.labels, min);
    REQUIRE(pauses.size() == expect.size());
    for (std::size_t i = 0; i < pauses.size(); ++i) {
      CHECK(pauses[i].start_frame == expect[i].first);
      CHECK(pauses[i].end_frame == expect[i].second);
    }
  }
  VadDecisions d;
  d.labels = {true, false, true};
  CHECK_THROWS_AS(stseg::ExtractPauses(d, 0), stseg::Error);
}

TEST_CASE("decision files round-trip") {
  VadDecisions d;
  d.frame_ms = 30;
  d.labels = {false, true, true, false, true};
  const std::string text = stseg::FormatDecisions(d);
  CHECK(text == "#vad frame_ms=30 frames=5\n0\t0\n1\t1\n2\t1\n3\t0\n4\t1\n");
  const VadDecisions back = stseg::ParseDecisions(text);
  CHECK(back.frame_ms == 30);
  CHECK(back.labels == d.labels);
  CHECK(back.total_audio_seconds == doctest::Approx(0.15));

  const auto dir = st::MakeTempDir("vad");
  stseg::WriteDecisions(d, (dir / "d.vad").string());
  CHECK(stseg::ReadDecisions((dir / "d.vad").string()).labels == d.labels);
  std::filesystem::remove_all(dir);
}

TEST_CASE("malformed decision files are rejected") {
  CHECK(ParseCode("") == ErrorCode::kBadDecisionsFormat);
  CHECK(ParseCode("0\t1\n") == ErrorCode::kBadDecisionsFormat);
  CHECK(ParseCode("#vad frame_ms=15 frames=1\n0\t1\n") == ErrorCode::kBadDecisionsFormat);
  CHECK(ParseCode("#vad frame_ms=20 frames=2\n0\t1\n") == ErrorCode::kBadDecisionsFormat);
  CHECK(ParseCode("#vad frame_ms=20 frames=2\n0\t1\n2\t0\n") == ErrorCode::kBadDecisionsFormat);
  CHECK(ParseCode("#vad frame_ms=20 frames=1\n0\tyes\n") == ErrorCode::kBadDecisionsFormat);
  CHECK(ParseCode("#vad frame_ms=20 frames=x\n") == ErrorCode::kBadDecisionsFormat);
  try {
    stseg::ParseDecisions("#vad frame_ms=20 frames=3\n0\t1\n1\t1\n7\t0\n");
  } catch (const stseg::Error &e) {
    CHECK(std::string(e.what()).find("line 4") != std::string::npos);
  }
}
