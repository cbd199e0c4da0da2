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

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "approxmaj/distribution.hpp"
#include "approxmaj/majorization.hpp"
#include "approxmaj/schur.hpp"
#include "approxmaj/smoothing.hpp"

namespace approxmaj {

/// Runtime settings shared by every CLI command.
struct Config {
  Tolerances tol;
  LogBase base = LogBase::kTwo;
  InputPolicy input_policy = InputPolicy::kReject;

  /// Throws ParseError unless both tolerances are positive and tau <= tau_norm.
  void validate() const;
};

struct LabeledDistribution {
  Distribution dist;
  std::optional<std::string> label;
};

/// Parses {"values": [...], "label": "..."}; any other keys are ignored, so a
/// SmoothedResult document reads back as its output distribution.
LabeledDistribution parse_distribution_json(std::string_view text, const Config& config = {});

/// One probability per line; blank lines are skipped.
LabeledDistribution parse_distribution_csv(std::string_view text, const Config& config = {});

/// Reads JSON when the extension is .json, single-column CSV otherwise.
LabeledDistribution read_distribution_file(const std::filesystem::path& path, const Config& config = {});

void write_text_file(const std::filesystem::path& path, std::string_view contents);

/// Fixed 12-significant-digit rendering used for every number the tools print.
std::string format_number(double value);

/// `value` rounded to 12 significant digits.
double round_significant(double value);

std::string smoothed_result_json(const SmoothedResult& r);

std::string transfer_plan_json(const TransferPlan& plan);

/// "l,cumulative" with one row per point, origin included.
std::string lorenz_csv(const LorenzCurve& curve);

/// "l,base,steepest,flattest" rows for the three curves of one delta.
std::string lorenz_table_csv(const LorenzCurve& base, const LorenzCurve& steep, const LorenzCurve& flat);

std::string_view kind_name(ApproxKind kind);

}  // namespace approxmaj
