// Copyright 2026 The approxmaj Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "approxmaj/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

#include "json.hpp"

namespace approxmaj {

using ordered_json = nlohmann::ordered_json;

void Config::validate() const {
  if (!(tol.tau > 0.0) || !(tol.tau_norm > 0.0)) throw Error(ErrorCode::kParseError, "tolerances must be positive");
  if (tol.tau > tol.tau_norm) throw Error(ErrorCode::kParseError, "tau must not exceed tau_norm");
}

LabeledDistribution parse_distribution_json(std::string_view text, const Config& config) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("values") || !doc["values"].is_array()) {
    throw Error(ErrorCode::kParseError, "expected an object with a \"values\" array");
  }
  std::vector<double> raw;
  for (const auto& v : doc["values"]) {
    if (!v.is_number()) throw Error(ErrorCode::kParseError, "\"values\" must contain only numbers");
    raw.push_back(v.get<double>());
  }
  std::optional<std::string> label;
  if (doc.contains("label")) {
    if (!doc["label"].is_string()) throw Error(ErrorCode::kParseError, "\"label\" must be a string");
    label = doc["label"].get<std::string>();
  }
  return {make_distribution(raw, config.input_policy, config.tol), std::move(label)};
}

LabeledDistribution parse_distribution_csv(std::string_view text, const Config& config) {
  std::vector<double> raw;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r,");
    const std::string cell = line.substr(first, last - first + 1);
    char* end = nullptr;
    const double value = std::strtod(cell.c_str(), &end);
    if (end == cell.c_str() || *end != '\0') {
      throw Error(ErrorCode::kParseError, "line " + std::to_string(line_no) + ": not a number: '" + cell + "'");
    }
    raw.push_back(value);
  }
  return {make_distribution(raw, config.input_policy, config.tol), std::nullopt};
}

LabeledDistribution read_distribution_file(const std::filesystem::path& path, const Config& config) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (path.extension() == ".json") return parse_distribution_json(buf.str(), config);
  return parse_distribution_csv(buf.str(), config);
}

void write_text_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kParseError, "cannot write " + path.string());
  out << contents;
}

std::string format_number(double value) {
  if (value == 0.0) return "0";  // folds -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

double round_significant(double value) { return std::strtod(format_number(value).c_str(), nullptr); }

std::string_view kind_name(ApproxKind kind) { return kind == ApproxKind::kSteepest ? "steepest" : "flattest"; }

std::string smoothed_result_json(const SmoothedResult& r) {
  ordered_json doc;
  doc["kind"] = kind_name(r.kind);
  doc["delta"] = round_significant(r.delta);
  doc["clamped"] = r.clamped;
  doc["values"] = ordered_json::array();
  for (double v : r.result.values()) doc["values"].push_back(round_significant(v));
  ordered_json meta = ordered_json::object();
  if (r.steepest) {
    meta["l_star"] = r.steepest->l_star;
    meta["tail_value"] = round_significant(r.steepest->tail_value);
  }
  if (r.flattest) {
    meta["x_star"] = round_significant(r.flattest->x_star);
    meta["y_star"] = round_significant(r.flattest->y_star);
    meta["l_I"] = r.flattest->l_i;
    meta["l_J"] = r.flattest->l_j;
  }
  doc["meta"] = std::move(meta);
  return doc.dump(2) + "\n";
}

std::string transfer_plan_json(const TransferPlan& plan) {
  ordered_json doc;
  doc["steps"] = ordered_json::array();
  for (const auto& s : plan.steps) {
    doc["steps"].push_back(ordered_json{{"i", s.i}, {"j", s.j}, {"t", round_significant(s.t)}});
  }
  doc["matrix"] = ordered_json::array();
  for (const auto& row : plan.matrix) {
    ordered_json out_row = ordered_json::array();
    for (double v : row) out_row.push_back(round_significant(v));
    doc["matrix"].push_back(std::move(out_row));
  }
  return doc.dump() + "\n";
}

std::string lorenz_csv(const LorenzCurve& curve) {
  std::string out = "l,cumulative\n";
  for (std::size_t l = 0; l < curve.size(); ++l) {
    out += std::to_string(l) + "," + format_number(curve[l]) + "\n";
  }
  return out;
}

std::string lorenz_table_csv(const LorenzCurve& base, const LorenzCurve& steep, const LorenzCurve& flat) {
  if (base.size() != steep.size() || base.size() != flat.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "Lorenz curves differ in length");
  }
  std::string out = "l,base,steepest,flattest\n";
  for (std::size_t l = 0; l < base.size(); ++l) {
    out += std::to_string(l) + "," + format_number(base[l]) + "," + format_number(steep[l]) + "," +
           format_number(flat[l]) + "\n";
  }
  return out;
}

}  // namespace approxmaj
