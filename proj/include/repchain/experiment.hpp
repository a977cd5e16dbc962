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

#ifndef REPCHAIN_EXPERIMENT_HPP
#define REPCHAIN_EXPERIMENT_HPP

#include <cstddef>
#include <filesystem>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "repchain/engine.hpp"

namespace repchain {

/// Error-rate profile for one experiment. Memory and operation rates are
/// equal within a node class for the four reference presets.
struct Preset {
    std::string name;
    NodeProfile intermediate;
    NodeProfile end;
};

/// a: (1e-4, 1e-4), b: (1e-4, 1e-5), c: (1e-4, 0), d: (1e-5, 1e-5), given as
/// (intermediate, end). Returns nullopt for unknown names.
std::optional<Preset> find_preset(std::string_view name);
Preset preset(std::string_view name);  // throws std::invalid_argument

struct SettingGrid {
    std::vector<double> l2_values{0.90, 0.99, 0.999};
    std::vector<std::optional<double>> l3_values{std::nullopt, 0.90, 0.99, 0.999};
    double l4 = 0.99;
    std::size_t n_min = 3;
    std::size_t n_max = 256;

    void validate() const;
    std::size_t settings() const { return l2_values.size() * l3_values.size(); }
    std::size_t rows() const { return settings() * (n_max - n_min + 1); }
};

struct SweepOptions {
    SuccessRule success_rule = SuccessRule::Table;
    PumpSchedule schedule = PumpSchedule::Alternating;
    double raw_fidelity = 0.8;
};

struct ResultRow {
    std::string preset;
    double l2 = 0.0;
    std::optional<double> l3;
    double l4 = 0.0;
    std::size_t n_nodes = 0;
    double end_time = 0.0;
    double intermediate_time = 0.0;
    double total_time = 0.0;
    double delivered_fidelity = 0.0;
    bool broken = false;
    PurificationCounts purification_counts;
    std::string break_reason;  // not serialized

    friend bool operator==(const ResultRow&, const ResultRow&) = default;
};

NetworkConfig make_network(const Preset& p, std::size_t n_nodes, const SweepOptions& options = {});
PolicyConfig make_policy(double l2, std::optional<double> l3, double l4,
                         const SweepOptions& options = {});

/// Computes a single (setting, n) row.
ResultRow run_point(const Preset& p, double l2, std::optional<double> l3, double l4,
                    std::size_t n_nodes, const SweepOptions& options = {});

/// All rows of the grid, setting-major (l2 outer, l3 inner) with n ascending.
/// Once a setting breaks, every later n in that setting is reported broken.
/// Rows are computed in parallel with OpenMP; output order and values do
/// not depend on the thread count.
std::vector<ResultRow> run_sweep(const Preset& p, const SettingGrid& grid,
                                 const SweepOptions& options = {});

/// Single-threaded reference for run_sweep.
std::vector<ResultRow> run_sweep_serial(const Preset& p, const SettingGrid& grid,
                                        const SweepOptions& options = {});

/// Fiber transmission: exp(-length / 22 km).
double link_loss_rate(double length_km);

inline constexpr std::string_view kCsvHeader =
    "preset,l2,l3,l4,n_nodes,end_time,intermediate_time,total_time,delivered_fidelity,broken,"
    "l2_purifications,l3_purifications,l4_purifications";

/// %.12g decimal formatting, shared by the CSV and SVG writers.
std::string format_decimal(double v);

void write_csv(std::span<const ResultRow> rows, std::ostream& out);
/// Throws std::invalid_argument on empty input and std::runtime_error when
/// the file cannot be written.
void write_csv(std::span<const ResultRow> rows, const std::filesystem::path& destination);

}  // namespace repchain

#endif  // REPCHAIN_EXPERIMENT_HPP
