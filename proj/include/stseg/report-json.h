// include/stseg/report-json.h

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

#ifndef STSEG_REPORT_JSON_H_
#define STSEG_REPORT_JSON_H_

#include <string>

#include "stseg/corpus-clean.h"
#include "stseg/resegment.h"
#include "stseg/segmenter.h"

namespace stseg {

// Single-line JSON objects with a fixed key order.
std::string SegmentStatsJson(const SegmentStats &stats);
std::string ResegmentReportJson(const ResegmentReport &report);
std::string CleanReportJson(const CleanReport &report);

}  // namespace stseg

#endif  // STSEG_REPORT_JSON_H_
