// tests/audio-io-test.cc

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
#include <cstdint>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.h"
#include "stseg/audio-io.h"
#include "stseg/error.h"

namespace {

using stseg::AudioBuffer;
using stseg::ErrorCode;
namespace st = stseg::testing;

void Put16(std::string &s, std::uint16_t v) {
  s.push_back(static_cast<char>(v & 0xff));
  s.push_back(static_cast<char>(v >> 8));
}

void Put32(std::string &s, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) s.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

struct WavSpec {
  std::uint16_t format = 1;
  std::uint16_t channels = 1;
  std::uint32_t rate = 16000;
  std::uint16_t bits = 16;
  bool extensible = false;
  std::string extra_chunk;  // inserted between fmt and data
  std::uint32_t data_size_override = 0;
};

std::string BuildWav(const WavSpec &w, const std::vector<std::int16_t> &pcm) {
  std::string fmt;
  Put16(fmt, w.extensible ? 0xFFFE : w.format);
  Put16(fmt, w.channels);
  Put32(fmt, w.rate);
  Put32(fmt, w.rate * w.channels * w.bits / 8);
  Put16(fmt, static_cast<std::uint16_t>(w.channels * w.bits / 8));
  Put16(fmt, w.bits);
  if (w.extensible) {
    Put16(fmt, 22);
    Put16(fmt, w.bits);
    Put32(fmt, 4);
    Put16(fmt, w.format);  // sub-format GUID, first two bytes carry the tag
    fmt += std::string("\x00\x00\x00\x00\x10\x00\x80\x00\x00\xAA\x00\x38\x9B\x71", 14);
  }
  std::string data;
  for (std::int16_t v : pcm) Put16(data, static_cast<std::uint16_t>(v));

  std::string body = "WAVE";
  body += "fmt ";
  Put32(body, static_cast<std::uint32_t>(fmt.size()));
  body += fmt;
  body += w.extra_chunk;
  body += "data";
  Put32(body, w.data_size_override ? w.data_size_override
                                   : static_cast<std::uint32_t>(data.size()));
  body += data;
  std::string out = "RIFF";
  Put32(out, static_cast<std::uint32_t>(body.size()));
  return out + body;
}

ErrorCode ReadCode(const std::string &path) {
  try {
    stseg::ReadWav(path);
  } catch (const stseg::Error &e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::kInvalidArgument;
}

}  // namespace

TEST_CASE("wav write then read reproduces 16-bit quantized samples") {
  const auto dir = st::MakeTempDir("audio");
  std::vector<float> x;
  for (int i = 0; i < 3200; ++i) x.push_back(static_cast<float>(0.5 * std::sin(i * 0.01)));
  x.push_back(1.0f);
  x.push_back(-1.0f);
  const AudioBuffer in(16000, x, "mem");
  stseg::WriteWav(in, (dir / "a.wav").string());
  const AudioBuffer out = stseg::ReadWav((dir / "a.wav").string());
  REQUIRE(out.size() == x.size());
  CHECK(out.sample_rate() == 16000);
  CHECK(out.source_path() == (dir / "a.wav").string());
  for (std::size_t i = 0; i + 2 < x.size(); ++i)
    CHECK(std::abs(out.samples()[i] - x[i]) <= 1.0f / 32768.0f);
  CHECK(out.samples()[x.size() - 2] == doctest::Approx(32767.0 / 32768.0));
  CHECK(out.samples()[x.size() - 1] == -1.0f);
  CHECK(out.DurationSeconds() == doctest::Approx(3202.0 / 16000.0));
  std::filesystem::remove_all(dir);
}

TEST_CASE("reader accepts extensible headers and skips unknown chunks") {
  const auto dir = st::MakeTempDir("audio");
  std::vector<std::int16_t> pcm = {0, 16384, -16384, 32767, -32768, 1};
  WavSpec w;
  w.extensible = true;
  w.extra_chunk = std::string("LIST\x03\x00\x00\x00" "abc\x00", 12);
  st::WriteFileBytes(dir / "x.wav", BuildWav(w, pcm));
  const AudioBuffer a = stseg::ReadWav((dir / "x.wav").string());
  REQUIRE(a.size() == pcm.size());
  CHECK(a.samples()[1] == 0.5f);
  CHECK(a.samples()[2] == -0.5f);
  CHECK(a.samples()[4] == -1.0f);
  std::filesystem::remove_all(dir);
}

TEST_CASE("reader rejects unsupported or damaged files with distinct codes") {
  const auto dir = st::MakeTempDir("audio");
  const std::vector<std::int16_t> pcm(100, 7);
  auto write = [&](const std::string &name, const std::string &bytes) {
    st::WriteFileBytes(dir / name, bytes);
    return (dir / name).string();
  };
  CHECK(ReadCode((dir / "missing.wav").string()) == ErrorCode::kIo);
  CHECK(ReadCode(write("text.wav", "hello, this is not audio at all")) == ErrorCode::kNotWav);

  WavSpec stereo;
  stereo.channels = 2;
  CHECK(ReadCode(write("stereo.wav", BuildWav(stereo, pcm))) == ErrorCode::kUnsupportedChannels);
  WavSpec rate;
  rate.rate = 8000;
  CHECK(ReadCode(write("rate.wav", BuildWav(rate, pcm))) == ErrorCode::kUnsupportedRate);
  WavSpec eight;
  eight.bits = 8;
  CHECK(ReadCode(write("u8.wav", BuildWav(eight, pcm))) == ErrorCode::kUnsupportedEncoding);
  WavSpec flt;
  flt.format = 3;
  flt.bits = 32;
  CHECK(ReadCode(write("float.wav", BuildWav(flt, pcm))) == ErrorCode::kUnsupportedEncoding);
  WavSpec ext_float = flt;
  ext_float.extensible = true;
  CHECK(ReadCode(write("extf.wav", BuildWav(ext_float, pcm))) == ErrorCode::kUnsupportedEncoding);
  WavSpec cut;
  cut.data_size_override = 400;
  CHECK(ReadCode(write("cut.wav", BuildWav(cut, pcm))) == ErrorCode::kTruncatedFile);
  std::string no_data = BuildWav(WavSpec{}, {});
  no_data.resize(no_data.size() - 8);
  CHECK(ReadCode(write("nodata.wav", no_data)) == ErrorCode::kTruncatedFile);
  std::filesystem::remove_all(dir);
}

TEST_CASE("frame lengths are defined for 10, 20 and 30 ms only") {
  CHECK(stseg::FrameLength(16000, 10) == 160);
  CHECK(stseg::FrameLength(16000, 20) == 320);
  CHECK(stseg::FrameLength(16000, 30) == 480);
  for (int bad : {0, 15, 25, 40, -20}) {
    try {
      stseg::FrameLength(16000, bad);
      FAIL("accepted frame_ms " << bad);
    } catch (const stseg::Error &e) {
      CHECK(e.code() == ErrorCode::kBadFrameDuration);
    }
  }
}

TEST_CASE("frames tile the signal and drop the partial tail") {
  const AudioBuffer a(16000, std::vector<float>(16000 + 100, 0.25f));
  CHECK(stseg::FrameCount(a, 20) == 50);
  CHECK(stseg::FrameCount(a, 30) == 33);
  const auto v = stseg::GetFrameView(a, 20, 49);
  CHECK(v.start_sample == 49 * 320);
  CHECK(v.length_samples == 320);
  CHECK(stseg::GetFrame(a, 20, 3).size() == 320);
  CHECK(stseg::GetFrame(a, 20, 3).data() == a.samples().data() + 960);
  CHECK_THROWS_AS(stseg::GetFrame(a, 20, 50), stseg::Error);
  try {
    stseg::GetFrameView(a, 20, 50);
  } catch (const stseg::Error &e) {
    CHECK(e.code() == ErrorCode::kIndexOutOfRange);
  }
  CHECK(stseg::FrameCount(AudioBuffer(16000, {}), 20) == 0);
}

TEST_CASE("buffers reject out-of-range samples") {
  CHECK_THROWS_AS(AudioBuffer(16000, {0.0f, 1.5f}), stseg::Error);
  CHECK_THROWS_AS(AudioBuffer(16000, {std::nanf("")}), stseg::Error);
  CHECK_THROWS_AS(AudioBuffer(0, {0.0f}), stseg::Error);
}
