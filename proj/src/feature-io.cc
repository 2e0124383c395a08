// src/feature-io.cc

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

#include <bit>
#include <cstring>
#include <fstream>
#include <sstream>

#include "file-io.h"
#include "stseg/error.h"
#include "stseg/features.h"

namespace stseg {

namespace {

void PutU32(std::string &out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

std::uint32_t GetU32(const std::string &s, std::size_t pos) {
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i)
    v |= static_cast<std::uint32_t>(static_cast<unsigned char>(s[pos + i])) << (8 * i);
  return v;
}

}  // namespace

std::string EncodeFeatures(const MelMatrix &m) {
  if (m.rows() > UINT32_MAX || m.cols() > UINT32_MAX)
    Fail(ErrorCode::kInvalidArgument, "matrix too large for FBNK");
  std::string out = "FBNK";
  out.reserve(12 + 4 * m.values().size());
  PutU32(out, static_cast<std::uint32_t>(m.rows()));
  PutU32(out, static_cast<std::uint32_t>(m.cols()));
  for (double v : m.values()) PutU32(out, std::bit_cast<std::uint32_t>(static_cast<float>(v)));
  return out;
}

MelMatrix DecodeFeatures(const std::string &bytes) {
  if (bytes.size() < 12 || bytes.compare(0, 4, "FBNK") != 0)
    Fail(ErrorCode::kBadFeatureFile, "missing FBNK header");
  const std::size_t rows = GetU32(bytes, 4);
  const std::size_t cols = GetU32(bytes, 8);
  const std::size_t payload = bytes.size() - 12;
  const bool fits = cols == 0 ? payload == 0
                              : payload % 4 == 0 && (payload / 4) % cols == 0 &&
                                    payload / 4 / cols == rows;
  if (!fits)
    Fail(ErrorCode::kBadFeatureFile, "FBNK payload size does not match header");
  std::vector<double> values(rows * cols);
  for (std::size_t i = 0; i < values.size(); ++i)
    values[i] = std::bit_cast<float>(GetU32(bytes, 12 + 4 * i));
  return MelMatrix(rows, cols, std::move(values));
}

void WriteFeatures(const MelMatrix &m, const std::string &path) {
  const std::string bytes = EncodeFeatures(m);
  std::ofstream f(path, std::ios::binary);
  if (!f) Fail(ErrorCode::kIo, "cannot write '" + path + "'");
  f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!f) Fail(ErrorCode::kIo, "write failed for '" + path + "'");
}

MelMatrix ReadFeatures(const std::string &path) {
  return DecodeFeatures(ReadFileOrFail(path));
}

}  // namespace stseg
