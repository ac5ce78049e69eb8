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

#ifndef CRANSCHED_SRC_JSON_UTIL_H_
#define CRANSCHED_SRC_JSON_UTIL_H_

#include <string>

#include <nlohmann/json.hpp>

namespace cran::internal {

// Parses `text`, turning syntax errors into FormatError messages of the
// form "<source>:<line>:<column>: <what>".
nlohmann::json ParseJsonText(const std::string& text, const std::string& source);

std::string ReadTextFile(const std::string& path);
// Truncates and writes; throws FormatError on failure.
void WriteTextFile(const std::string& path, const std::string& text);

// Typed member access with "<source>: key 'x' ..." diagnostics.
const nlohmann::json& Member(const nlohmann::json& obj, const char* key,
                             const std::string& source);

}  // namespace cran::internal

#endif  // CRANSCHED_SRC_JSON_UTIL_H_
