// src/audio-io.cc

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

#include "stseg/audio-io.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iterator>

#include "file-io.h"
#include "stseg/error.h"

namespace stseg {

namespace {

std::uint32_t ReadU32(const unsigned char *p) {
  return static_cast<std::uint32_t>(p[0]) |
         (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) |
         (static_cast<std::uint32_t>(p[3]) << 24);
}

std::uint16_t ReadU16(const unsigned char *p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

void PutU32(std::string &out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

void PutU16(std::string &out, std::uint16_t v) {
  out.push_back(static_cast<char>(v & 0xff));
  out.push_back(static_cast<char>((v >> 8) & 0xff));
}

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatExtensible = 0xfffe;

}  // namespace

AudioBuffer::AudioBuffer(int sample_rate, std::vector<float> samples,
                         std::string source_path)
    : sample_rate_(sample_rate),
      samples_(std::move(samples)),
      source_path_(std::move(source_path)) {
  if (sample_rate_ <= 0)
    Fail(ErrorCode::kInvalidArgument, "sample rate must be positive");
  for (float s : samples_) {
    if (!(s >= -1.0f && s <= 1.0f))
      Fail(ErrorCode::kInvalidArgument, "sample outside [-1, 1]");
  }
}

double AudioBuffer::DurationSeconds() const {
  return static_cast<double>(samples_.size()) / sample_rate_;
}

AudioBuffer ReadWav(const std::string &path) {
  const std::string bytes = ReadFileOrFail(path);
  const auto *data = reinterpret_cast<const unsigned char *>(bytes.data());
  const std::size_t size = bytes.size();

  if (size < 12 || std::memcmp(data, "RIFF", 4) != 0 ||
      std::memcmp(data + 8, "WAVE", 4) != 0)
    Fail(ErrorCode::kNotWav, "'" + path + "' is not a RIFF/WAVE file");

  bool have_fmt = false;
  std::size_t pos = 12;
  while (pos + 8 <= size) {
    const std::uint32_t chunk_size = ReadU32(data + pos + 4);
    const unsigned char *body = data + pos + 8;
    const std::size_t available = size - pos - 8;
    if (std::memcmp(data + pos, "fmt ", 4) == 0) {
      if (chunk_size < 16 || available < 16)
        Fail(ErrorCode::kTruncatedFile, "'" + path + "': short fmt chunk");
      std::uint16_t format = ReadU16(body);
      const std::uint16_t channels = ReadU16(body + 2);
      const std::uint32_t rate = ReadU32(body + 4);
      const std::uint16_t bits = ReadU16(body + 14);
      if (format == kFormatExtensible && chunk_size >= 40 && available >= 40)
        format = ReadU16(body + 24);  // sub-format GUID prefix
      if (format != kFormatPcm || bits != 16)
        Fail(ErrorCode::kUnsupportedEncoding,
             "'" + path + "': only 16-bit integer PCM is supported");
      if (channels != 1)
        Fail(ErrorCode::kUnsupportedChannels,
             "'" + path + "': " + std::to_string(channels) +
                 " channels, expected mono");
      if (rate != kSampleRate)
        Fail(ErrorCode::kUnsupportedRate,
             "'" + path + "': sample rate " + std::to_string(rate) +
                 " Hz, expected 16000");
      have_fmt = true;
    } else if (std::memcmp(data + pos, "data", 4) == 0) {
      if (!have_fmt)
        Fail(ErrorCode::kNotWav, "'" + path + "': data chunk before fmt");
      if (chunk_size > available || chunk_size % 2 != 0)
        Fail(ErrorCode::kTruncatedFile,
             "'" + path + "': data chunk shorter than declared");
      std::vector<float> samples(chunk_size / 2);
      for (std::size_t i = 0; i < samples.size(); ++i) {
        const auto v = static_cast<std::int16_t>(ReadU16(body + 2 * i));
        samples[i] = static_cast<float>(v) / 32768.0f;
      }
      return AudioBuffer(kSampleRate, std::move(samples), path);
    }
    if (chunk_size > available) break;
    pos += 8 + chunk_size + (chunk_size & 1);
  }
  if (!have_fmt)
    Fail(ErrorCode::kTruncatedFile, "'" + path + "': missing fmt chunk");
  Fail(ErrorCode::kTruncatedFile, "'" + path + "': missing data chunk");
}

void WriteWav(const AudioBuffer &buffer, const std::string &path) {
  const auto n = static_cast<std::uint32_t>(buffer.size());
  std::string out;
  out.reserve(44 + 2 * static_cast<std::size_t>(n));
  out += "RIFF";
  PutU32(out, 36 + 2 * n);
  out += "WAVEfmt ";
  PutU32(out, 16);
  PutU16(out, kFormatPcm);
  PutU16(out, 1);
  PutU32(out, static_cast<std::uint32_t>(buffer.sample_rate()));
  PutU32(out, static_cast<std::uint32_t>(buffer.sample_rate()) * 2);
  PutU16(out, 2);
  PutU16(out, 16);
  out += "data";
  PutU32(out, 2 * n);
  for (float s : buffer.samples()) {
    const double scaled = std::round(static_cast<double>(s) * 32768.0);
    const auto v = static_cast<std::int16_t>(std::clamp(scaled, -32768.0, 32767.0));
    PutU16(out, static_cast<std::uint16_t>(v));
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) Fail(ErrorCode::kIo, "cannot write '" + path + "'");
  f.write(out.data(), static_cast<std::streamsize>(out.size()));
  if (!f) Fail(ErrorCode::kIo, "write failed for '" + path + "'");
}

std::size_t FrameLength(int sample_rate, int frame_ms) {
  if (frame_ms != 10 && frame_ms != 20 && frame_ms != 30)
    Fail(ErrorCode::kBadFrameDuration,
         "frame duration " + std::to_string(frame_ms) +
             " ms not in {10, 20, 30}");
  return static_cast<std::size_t>(sample_rate) * frame_ms / 1000;
}

std::size_t FrameCount(const AudioBuffer &buffer, int frame_ms) {
  return buffer.size() / FrameLength(buffer.sample_rate(), frame_ms);
}

FrameView GetFrameView(const AudioBuffer &buffer, int frame_ms,
                       std::size_t index) {
  const std::size_t len = FrameLength(buffer.sample_rate(), frame_ms);
  if (index >= buffer.size() / len)
    Fail(ErrorCode::kIndexOutOfRange,
         "frame " + std::to_string(index) + " out of range");
  return FrameView{index, index * len, len};
}

std::span<const float> GetFrame(const AudioBuffer &buffer, int frame_ms,
                                std::size_t index) {
  const FrameView view = GetFrameView(buffer, frame_ms, index);
  return buffer.samples().subspan(view.start_sample, view.length_samples);
}

}  // namespace stseg
