// include/stseg/audio-io.h

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

#ifndef STSEG_AUDIO_IO_H_
#define STSEG_AUDIO_IO_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace stseg {

inline constexpr int kSampleRate = 16000;

// Mono PCM signal with samples scaled to [-1, 1]. Immutable once built.
class AudioBuffer {
 public:
  AudioBuffer() = default;
  // Throws kInvalidArgument if sample_rate <= 0 or a sample is outside [-1, 1].
  AudioBuffer(int sample_rate, std::vector<float> samples,
              std::string source_path = "");

  int sample_rate() const { return sample_rate_; }
  std::span<const float> samples() const { return samples_; }
  std::size_t size() const { return samples_.size(); }
  const std::string &source_path() const { return source_path_; }
  double DurationSeconds() const;

 private:
  int sample_rate_ = kSampleRate;
  std::vector<float> samples_;
  std::string source_path_;
};

struct FrameView {
  std::size_t index = 0;
  std::size_t start_sample = 0;
  std::size_t length_samples = 0;
};

// Reads a RIFF/WAVE file holding 16 kHz mono 16-bit PCM. Samples are the
// integer values divided by 32768.
AudioBuffer ReadWav(const std::string &path);

// Writes 16-bit PCM; samples are rounded from value * 32768 and clipped.
// Exact inverse of ReadWav for buffers that came from a WAV file.
void WriteWav(const AudioBuffer &buffer, const std::string &path);

// Samples per frame for frame_ms in {10, 20, 30}; otherwise kBadFrameDuration.
std::size_t FrameLength(int sample_rate, int frame_ms);

// Number of whole frames; the trailing partial frame is dropped.
std::size_t FrameCount(const AudioBuffer &buffer, int frame_ms);

FrameView GetFrameView(const AudioBuffer &buffer, int frame_ms,
                       std::size_t index);
std::span<const float> GetFrame(const AudioBuffer &buffer, int frame_ms,
                                std::size_t index);

}  // namespace stseg

#endif  // STSEG_AUDIO_IO_H_
