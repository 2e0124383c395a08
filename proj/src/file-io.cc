// src/file-io.cc

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

#include "file-io.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "stseg/error.h"

namespace stseg {

std::string ReadFileOrFail(const std::string &path) {
  std::error_code ec;
  if (std::filesystem::is_directory(path, ec)) Fail(ErrorCode::kIo, "'" + path + "' is a directory");
  std::ifstream f(path, std::ios::binary);
  if (!f) Fail(ErrorCode::kIo, "cannot open '" + path + "'");
  std::ostringstream ss;
  try {
    ss << f.rdbuf();
  } catch (const std::ios_base::failure &) {
    Fail(ErrorCode::kIo, "read failed for '" + path + "'");
  }
  if (f.bad()) Fail(ErrorCode::kIo, "read failed for '" + path + "'");
  return ss.str();
}

}  // namespace stseg
