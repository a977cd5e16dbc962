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

#include "repchain/cli_options.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <map>

namespace repchain {

namespace {

double parse_number(const std::string& flag, const std::string& text) {
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used == text.size()) {
            return v;
        }
    } catch (const std::exception&) {
    }
    throw UsageError(flag + ": '" + text + "' is not a number");
}

double parse_threshold(const std::string& flag, const std::string& text) {
    const double v = parse_number(flag, text);
    if (!(v > 0.25 && v < 1.0)) {
        throw UsageError(flag + ": threshold " + text + " must lie in (0.25, 1)");
    }
    return v;
}

double parse_rate(const std::string& flag, const std::string& text) {
    const double v = parse_number(flag, text);
    if (!(v >= 0.0 && v <= 0.75)) {
        throw UsageError(flag + ": error rate " + text + " must lie in [0, 0.75]");
    }
    return v;
}

}  // namespace

CliOptions parse_options(const std::vector<std::string>& argv) {
    CliOptions o;
    CLI::App app{"Bell-pair occupancy sweeps over a linear repeater chain",
                 argv.empty() ? "repchain" : argv.front()};

    std::string l2_text, l3_text, l4_text;
    std::string end_mem, end_op, int_mem, int_op, raw_text;
    std::string out_text, svg_text;
    std::string rule_text = "table", schedule_text = "alternating";
    std::string format_text = "csv", metric_text = "intermediate";
    int threads = 0;

    app.add_option("--preset", o.preset, "error-rate preset: a, b, c, d or custom")
        ->check(CLI::IsMember({"a", "b", "c", "d", "custom"}));
    app.add_option("--l2", l2_text, "link-level threshold (default: sweep 0.90, 0.99, 0.999)");
    app.add_option("--l3", l3_text,
                   "internetworking threshold or 'none' (default: sweep none, 0.90, 0.99, 0.999)");
    app.add_option("--l4", l4_text, "end-to-end threshold (default 0.99)");
    app.add_option("--end-mem", end_mem, "custom end-node memory error rate");
    app.add_option("--end-op", end_op, "custom end-node operation error rate");
    app.add_option("--int-mem", int_mem, "custom intermediate-node memory error rate");
    app.add_option("--int-op", int_op, "custom intermediate-node operation error rate");
    app.add_option("--n-min", o.n_min, "smallest node count (default 3)");
    app.add_option("--n-max", o.n_max, "largest node count (default 256)");
    app.add_option("--raw-fidelity", raw_text, "raw link-pair fidelity (default 0.8)");
    app.add_option("--rule", rule_text, "success-probability rule: table or closed-form")
        ->check(CLI::IsMember({"table", "closed-form"}));
    app.add_option("--schedule", schedule_text, "pumping schedule: alternating or single-table")
        ->check(CLI::IsMember({"alternating", "single-table"}));
    app.add_option("--out", out_text, "CSV output path (default sweep.csv)");
    app.add_option("--svg-out", svg_text, "SVG output path (default: --out with .svg)");
    app.add_option("--format", format_text, "csv, svg or both")
        ->check(CLI::IsMember({"csv", "svg", "both"}));
    app.add_option("--metric", metric_text, "plotted metric: end, intermediate or total")
        ->check(CLI::IsMember({"end", "intermediate", "total"}));
    app.add_option("--threads", threads, "OpenMP thread count (default: runtime choice)")
        ->check(CLI::PositiveNumber);

    std::vector<std::string> args(argv.size() > 1 ? argv.begin() + 1 : argv.end(), argv.end());
    std::reverse(args.begin(), args.end());  // CLI11 consumes from the back
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested(app.help());
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    if (!l2_text.empty()) o.l2 = parse_threshold("--l2", l2_text);
    if (!l3_text.empty()) {
        o.l3_given = true;
        if (l3_text != "none" && l3_text != "None") {
            o.l3 = parse_threshold("--l3", l3_text);
        }
    }
    if (!l4_text.empty()) o.l4 = parse_threshold("--l4", l4_text);
    if (!raw_text.empty()) {
        o.raw_fidelity = parse_number("--raw-fidelity", raw_text);
        if (!(o.raw_fidelity > 0.25 && o.raw_fidelity <= 1.0)) {
            throw UsageError("--raw-fidelity: must lie in (0.25, 1]");
        }
    }

    const std::map<std::string, std::pair<const std::string*, std::optional<double>*>> rates{
        {"--end-mem", {&end_mem, &o.end_mem}},
        {"--end-op", {&end_op, &o.end_op}},
        {"--int-mem", {&int_mem, &o.int_mem}},
        {"--int-op", {&int_op, &o.int_op}},
    };
    for (const auto& [flag, slot] : rates) {
        if (slot.first->empty()) {
            continue;
        }
        if (o.preset != "custom") {
            throw UsageError(flag + " conflicts with --preset " + o.preset +
                             " (custom rates need --preset custom)");
        }
        *slot.second = parse_rate(flag, *slot.first);
    }
    if (o.preset == "custom") {
        for (const auto& [flag, slot] : rates) {
            if (!slot.second->has_value()) {
                throw UsageError("--preset custom requires " + flag +
                                 " (and --end-mem, --end-op, --int-mem, --int-op)");
            }
        }
    }

    if (o.n_min < 2) throw UsageError("--n-min: a path needs at least 2 nodes");
    if (o.n_max < o.n_min) throw UsageError("--n-max: must be >= --n-min");

    o.success_rule = rule_text == "table" ? SuccessRule::Table : SuccessRule::ClosedForm;
    o.schedule =
        schedule_text == "alternating" ? PumpSchedule::Alternating : PumpSchedule::SingleTable;
    o.format = format_text == "csv"   ? OutputFormat::Csv
               : format_text == "svg" ? OutputFormat::Svg
                                      : OutputFormat::Both;
    o.metric = metric_text == "end"            ? Metric::End
               : metric_text == "intermediate" ? Metric::Intermediate
                                               : Metric::Total;
    if (!out_text.empty()) o.out = out_text;
    if (!svg_text.empty()) o.svg_out = svg_text;
    if (threads > 0) o.threads = threads;
    return o;
}

CliOptions parse_options(int argc, const char* const* argv) {
    return parse_options(std::vector<std::string>(argv, argv + argc));
}

Preset CliOptions::resolved_preset() const {
    if (preset != "custom") {
        return repchain::preset(preset);
    }
    return Preset{"custom",
                  {ErrorProbability(*int_mem), ErrorProbability(*int_op)},
                  {ErrorProbability(*end_mem), ErrorProbability(*end_op)}};
}

SettingGrid CliOptions::grid() const {
    SettingGrid g;
    if (l2) g.l2_values = {*l2};
    if (l3_given) g.l3_values = {l3};
    g.l4 = l4;
    g.n_min = n_min;
    g.n_max = n_max;
    return g;
}

SweepOptions CliOptions::sweep_options() const {
    return {success_rule, schedule, raw_fidelity};
}

std::filesystem::path CliOptions::svg_path() const {
    if (svg_out) {
        return *svg_out;
    }
    std::filesystem::path p = out;
    return p.replace_extension(".svg");
}

}  // namespace repchain
