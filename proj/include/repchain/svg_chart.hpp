// Copyright 2026 The repchain Authors
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

#ifndef REPCHAIN_SVG_CHART_HPP
#define REPCHAIN_SVG_CHART_HPP

#include <filesystem>
#include <span>
#include <string>

#include "repchain/experiment.hpp"

namespace repchain {

enum class Metric { End, Intermediate, Total };

double metric_value(const ResultRow& row, Metric m);
std::string metric_label(Metric m);

/// Legend text in the "l2:0.999, l3:None, l4:0.990" style.
std::string setting_label(const ResultRow& row);

/// Line chart of one preset's sweep: one polyline per (l2, l3) setting,
/// x = n_nodes, y = metric on a log10 axis. A setting's line stops at its
/// last unbroken n. Throws std::invalid_argument on empty input or rows
/// from more than one preset.
std::string render_svg(std::span<const ResultRow> rows, Metric metric);

/// Writes render_svg to destination; std::runtime_error on I/O failure.
void emit_svg(std::span<const ResultRow> rows, Metric metric,
              const std::filesystem::path& destination);

}  // namespace repchain

#endif  // REPCHAIN_SVG_CHART_HPP
