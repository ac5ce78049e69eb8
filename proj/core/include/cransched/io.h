// Copyright 2026 The cransched Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON file formats.
//
// Instance file:
//   {
//     "dims":    {"U": 5, "B": 3, "Z": 4},
//     "power":   [[...Z values...], ...B rows...],          // watts
//     "gain_sq": [[[...Z...], ...B...], ...U...],           // |h|^2, linear
//     "noise_w": 3.45e-14,
//     "gamma":   1.0                                         // linear, >= 1
//   }
//
// Benefit file (arbitrary utilities, any sign):
//   {"dims": {"U": 2, "B": 2, "Z": 1}, "benefit": [[[10], [9]], [[9], [1]]]}
//
// Arrays are nested row-major with u outermost. Numbers are written with
// round-trip precision, so Read(Write(x)) == x.

#ifndef CRANSCHED_IO_H_
#define CRANSCHED_IO_H_

#include <stdexcept>
#include <string>

#include "cransched/model.h"

namespace cran {

// Malformed or unreadable input. The message starts with
// "<source>:<line>:<column>:" for syntax errors.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string InstanceToJson(const Instance& inst);
Instance InstanceFromJson(const std::string& text,
                          const std::string& source = "<instance>");
void WriteInstanceFile(const Instance& inst, const std::string& path);
Instance ReadInstanceFile(const std::string& path);

std::string BenefitsToJson(const BenefitTensor& a);
BenefitTensor BenefitsFromJson(const std::string& text,
                               const std::string& source = "<benefits>");
void WriteBenefitFile(const BenefitTensor& a, const std::string& path);
BenefitTensor ReadBenefitFile(const std::string& path);

// True if the document has a "benefit" member rather than instance data.
bool IsBenefitDocument(const std::string& text);

}  // namespace cran

#endif  // CRANSCHED_IO_H_
