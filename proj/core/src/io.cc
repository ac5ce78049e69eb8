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

#include "cransched/io.h"

#include <algorithm>
#include <fstream>
#include <span>
#include <sstream>
#include <utility>
#include <vector>

#include "json_util.h"

namespace cran {
namespace internal {

using nlohmann::json;

json ParseJsonText(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0,
                                                  text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::ostringstream msg;
    msg << source << ":" << line << ":" << column << ": " << e.what();
    throw FormatError(msg.str());
  }
}

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteTextFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw FormatError("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw FormatError("failed writing '" + path + "'");
}

const json& Member(const json& obj, const char* key,
                   const std::string& source) {
  if (!obj.is_object()) {
    throw FormatError(source + ": expected a JSON object");
  }
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw FormatError(source + ": missing key '" + key + "'");
  }
  return *it;
}

}  // namespace internal

namespace {

using internal::Member;
using nlohmann::json;

json DimsToJson(const Dimensions& dims) {
  return json{{"U", dims.num_users()}, {"B", dims.num_bs()}, {"Z", dims.num_pz()}};
}

int ReadCount(const json& obj, const char* key, const std::string& source) {
  const json& v = Member(obj, key, source);
  if (!v.is_number_integer()) {
    throw FormatError(source + ": dims." + key + " must be an integer");
  }
  return v.get<int>();
}

Dimensions DimsFromJson(const json& doc, const std::string& source) {
  const json& d = Member(doc, "dims", source);
  try {
    return Dimensions(ReadCount(d, "U", source), ReadCount(d, "B", source),
                      ReadCount(d, "Z", source));
  } catch (const std::invalid_argument& e) {
    throw FormatError(source + ": " + e.what());
  }
}

double ReadNumber(const json& v, const std::string& what,
                  const std::string& source) {
  if (!v.is_number()) throw FormatError(source + ": " + what + " must be a number");
  return v.get<double>();
}

// Flattens a nested array with the given extents, checking every level.
void Flatten(const json& v, const std::vector<int>& extents, std::size_t level,
             const std::string& what, const std::string& source,
             std::vector<double>& out) {
  if (level == extents.size()) {
    out.push_back(ReadNumber(v, what, source));
    return;
  }
  if (!v.is_array() || static_cast<int>(v.size()) != extents[level]) {
    throw FormatError(source + ": " + what + " must have extent " +
                      std::to_string(extents[level]) + " at depth " +
                      std::to_string(level + 1));
  }
  for (const json& child : v) Flatten(child, extents, level + 1, what, source, out);
}

json Nest(std::span<const double> flat, const std::vector<int>& extents,
          std::size_t level, std::size_t& pos) {
  json arr = json::array();
  for (int i = 0; i < extents[level]; ++i) {
    if (level + 1 == extents.size()) {
      arr.push_back(flat[pos++]);
    } else {
      arr.push_back(Nest(flat, extents, level + 1, pos));
    }
  }
  return arr;
}

json Nest(std::span<const double> flat, const std::vector<int>& extents) {
  std::size_t pos = 0;
  return Nest(flat, extents, 0, pos);
}

}  // namespace

std::string InstanceToJson(const Instance& inst) {
  const Dimensions& dims = inst.dims();
  json doc;
  doc["dims"] = DimsToJson(dims);
  doc["power"] = Nest(inst.power_values(), {dims.num_bs(), dims.num_pz()});
  doc["gain_sq"] = Nest(inst.gain_sq_values(),
                        {dims.num_users(), dims.num_bs(), dims.num_pz()});
  doc["noise_w"] = inst.noise_w();
  doc["gamma"] = inst.sinr_gap();
  return doc.dump(2) + "\n";
}

Instance InstanceFromJson(const std::string& text, const std::string& source) {
  const json doc = internal::ParseJsonText(text, source);
  const Dimensions dims = DimsFromJson(doc, source);
  std::vector<double> power;
  Flatten(Member(doc, "power", source), {dims.num_bs(), dims.num_pz()}, 0,
          "power", source, power);
  std::vector<double> gain_sq;
  Flatten(Member(doc, "gain_sq", source),
          {dims.num_users(), dims.num_bs(), dims.num_pz()}, 0, "gain_sq",
          source, gain_sq);
  const double noise = ReadNumber(Member(doc, "noise_w", source), "noise_w", source);
  double gamma = 1.0;
  if (doc.contains("gamma")) gamma = ReadNumber(doc["gamma"], "gamma", source);
  try {
    return Instance(dims, std::move(power), std::move(gain_sq), noise, gamma);
  } catch (const std::invalid_argument& e) {
    throw FormatError(source + ": " + e.what());
  }
}

void WriteInstanceFile(const Instance& inst, const std::string& path) {
  internal::WriteTextFile(path, InstanceToJson(inst));
}

Instance ReadInstanceFile(const std::string& path) {
  return InstanceFromJson(internal::ReadTextFile(path), path);
}

std::string BenefitsToJson(const BenefitTensor& a) {
  const Dimensions& dims = a.dims();
  json doc;
  doc["dims"] = DimsToJson(dims);
  doc["benefit"] =
      Nest(a.values(), {dims.num_users(), dims.num_bs(), dims.num_pz()});
  return doc.dump(2) + "\n";
}

BenefitTensor BenefitsFromJson(const std::string& text,
                               const std::string& source) {
  const json doc = internal::ParseJsonText(text, source);
  const Dimensions dims = DimsFromJson(doc, source);
  std::vector<double> values;
  Flatten(Member(doc, "benefit", source),
          {dims.num_users(), dims.num_bs(), dims.num_pz()}, 0, "benefit",
          source, values);
  return BenefitTensor(dims, std::move(values));
}

void WriteBenefitFile(const BenefitTensor& a, const std::string& path) {
  internal::WriteTextFile(path, BenefitsToJson(a));
}

BenefitTensor ReadBenefitFile(const std::string& path) {
  return BenefitsFromJson(internal::ReadTextFile(path), path);
}

bool IsBenefitDocument(const std::string& text) {
  const json doc = internal::ParseJsonText(text, "<document>");
  return doc.is_object() && doc.contains("benefit");
}

}  // namespace cran
