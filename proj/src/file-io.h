// src/file-io.h

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

#ifndef STSEG_FILE_IO_H_
#define STSEG_FILE_IO_H_

#include <string>

namespace stseg {

// Whole-file read; any failure (missing, directory, read error) is kIo.
std::string ReadFileOrFail(const std::string &path);

}  // namespace stseg

#endif  // STSEG_FILE_IO_H_
