// src/error.cc

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

#include "stseg/error.h"

namespace stseg {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid_argument";
    case ErrorCode::kIo: return "io";
    case ErrorCode::kNotWav: return "not_wav";
    case ErrorCode::kUnsupportedEncoding: return "unsupported_encoding";
    case ErrorCode::kUnsupportedChannels: return "unsupported_channels";
    case ErrorCode::kUnsupportedRate: return "unsupported_rate";
    case ErrorCode::kTruncatedFile: return "truncated_file";
    case ErrorCode::kBadFrameDuration: return "bad_frame_duration";
    case ErrorCode::kIndexOutOfRange: return "index_out_of_range";
    case ErrorCode::kBadDecisionsFormat: return "bad_decisions_format";
    case ErrorCode::kConfigTooTight: return "config_too_tight";
    case ErrorCode::kEmptyInput: return "empty_input";
    case ErrorCode::kBadManifest: return "bad_manifest";
    case ErrorCode::kTooShort: return "too_short";
    case ErrorCode::kAlreadyNormalized: return "already_normalized";
    case ErrorCode::kBadFeatureFile: return "bad_feature_file";
    case ErrorCode::kBoundaryOutOfRange: return "boundary_out_of_range";
    case ErrorCode::kEmptyText: return "empty_text";
    case ErrorCode::kBadProfile: return "bad_profile";
    case ErrorCode::kBadCorpus: return "bad_corpus";
  }
  return "unknown";
}

void Fail(ErrorCode code, const std::string &message) {
  throw Error(code, message);
}

}  // namespace stseg
