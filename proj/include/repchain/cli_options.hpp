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

#ifndef REPCHAIN_CLI_OPTIONS_HPP
#define REPCHAIN_CLI_OPTIONS_HPP

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "repchain/experiment.hpp"
#include "repchain/svg_chart.hpp"

namespace repchain {

class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Thrown for --help; what() carries the usage text.
class HelpRequested : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

enum class OutputFormat { Csv, Svg, Both };

struct CliOptions {
    std::string preset = "a";  // a|b|c|d|custom
    std::optional<double> l2;  // unset: sweep all grid values
    bool l3_given = false;     // l3 restricts the grid when given
    std::optional<double> l3;  // nullopt with l3_given: "none"
    double l4 = 0.99;
    std::optional<double> end_mem, end_op, int_mem, int_op;
    std::size_t n_min = 3;
    std::size_t n_max = 256;
    double raw_fidelity = 0.8;
    SuccessRule success_rule = SuccessRule::Table;
    PumpSchedule schedule = PumpSchedule::Alternating;
    std::filesystem::path out = "sweep.csv";
    std::optional<std::filesystem::path> svg_out;
    OutputFormat format = OutputFormat::Csv;
    Metric metric = Metric::Intermediate;
    std::optional<int> threads;

    Preset resolved_preset() const;
    SettingGrid grid() const;
    SweepOptions sweep_options() const;
    /// --svg-out, or --out with its extension replaced by .svg.
    std::filesystem::path svg_path() const;
};

/// Parses argv (argv[0] is the program name). Throws UsageError with a
/// message naming the offending flag, or HelpRequested.
CliOptions parse_options(const std::vector<std::string>& argv);
CliOptions parse_options(int argc, const char* const* argv);

}  // namespace repchain

#endif  // REPCHAIN_CLI_OPTIONS_HPP
