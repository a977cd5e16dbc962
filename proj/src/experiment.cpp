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

#include "repchain/experiment.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace repchain {

namespace {

NodeProfile uniform_profile(double p) { return {ErrorProbability(p), ErrorProbability(p)}; }

struct Setting {
    double l2;
    std::optional<double> l3;
};

std::vector<Setting> settings_of(const SettingGrid& grid) {
    std::vector<Setting> out;
    out.reserve(grid.settings());
    for (double l2 : grid.l2_values) {
        for (const auto& l3 : grid.l3_values) {
            out.push_back({l2, l3});
        }
    }
    return out;
}

// Applies the "curve stops at the first break" rule to one setting's rows.
void latch_breaks(std::span<ResultRow> setting_rows) {
    std::optional<std::size_t> first_break;
    for (ResultRow& row : setting_rows) {
        if (first_break) {
            if (!row.broken) {
                row.broken = true;
                row.break_reason = "beyond first break at n=" + std::to_string(*first_break);
            }
        } else if (row.broken) {
            first_break = row.n_nodes;
        }
    }
}

}  // namespace

std::optional<Preset> find_preset(std::string_view name) {
    if (name == "a") return Preset{"a", uniform_profile(1e-4), uniform_profile(1e-4)};
    if (name == "b") return Preset{"b", uniform_profile(1e-4), uniform_profile(1e-5)};
    if (name == "c") return Preset{"c", uniform_profile(1e-4), uniform_profile(0.0)};
    if (name == "d") return Preset{"d", uniform_profile(1e-5), uniform_profile(1e-5)};
    return std::nullopt;
}

Preset preset(std::string_view name) {
    if (auto p = find_preset(name)) {
        return *p;
    }
    throw std::invalid_argument("unknown preset '" + std::string(name) + "'");
}

void SettingGrid::validate() const {
    if (l2_values.empty() || l3_values.empty()) {
        throw std::invalid_argument("setting grid has no thresholds");
    }
    if (n_min < 2 || n_min > n_max) {
        throw std::invalid_argument("node range must satisfy 2 <= n_min <= n_max");
    }
    for (double l2 : l2_values) {
        make_policy(l2, std::nullopt, l4).validate();
    }
    for (const auto& l3 : l3_values) {
        make_policy(l4, l3, l4).validate();
    }
}

NetworkConfig make_network(const Preset& p, std::size_t n_nodes, const SweepOptions& options) {
    NetworkConfig c;
    c.n_nodes = n_nodes;
    c.raw_fidelity = options.raw_fidelity;
    c.end_profile = p.end;
    c.intermediate_profile = p.intermediate;
    return c;
}

PolicyConfig make_policy(double l2, std::optional<double> l3, double l4,
                         const SweepOptions& options) {
    PolicyConfig policy;
    policy.l2_threshold = l2;
    policy.l3_threshold = l3;
    policy.l4_threshold = l4;
    policy.success_rule = options.success_rule;
    policy.schedule = options.schedule;
    return policy;
}

ResultRow run_point(const Preset& p, double l2, std::optional<double> l3, double l4,
                    std::size_t n_nodes, const SweepOptions& options) {
    const ConnectionResult r =
        run_connection(make_network(p, n_nodes, options), make_policy(l2, l3, l4, options));
    ResultRow row;
    row.preset = p.name;
    row.l2 = l2;
    row.l3 = l3;
    row.l4 = l4;
    row.n_nodes = n_nodes;
    row.end_time = r.ledger.end_qubit_time;
    row.intermediate_time = r.ledger.intermediate_qubit_time;
    row.total_time = r.ledger.total();
    row.delivered_fidelity = r.fidelity();
    row.broken = r.broken;
    row.purification_counts = r.purification_counts;
    row.break_reason = r.break_reason.value_or("");
    return row;
}

std::vector<ResultRow> run_sweep(const Preset& p, const SettingGrid& grid,
                                 const SweepOptions& options) {
    grid.validate();
    const std::vector<Setting> settings = settings_of(grid);
    const std::size_t per_setting = grid.n_max - grid.n_min + 1;
    const auto total = static_cast<std::int64_t>(settings.size() * per_setting);
    std::vector<ResultRow> rows(static_cast<std::size_t>(total));

    // Cost grows with n, so hand out single rows dynamically.
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t job = 0; job < total; ++job) {
        const auto j = static_cast<std::size_t>(job);
        const Setting& s = settings[j / per_setting];
        rows[j] = run_point(p, s.l2, s.l3, grid.l4, grid.n_min + j % per_setting, options);
    }

    for (std::size_t k = 0; k < settings.size(); ++k) {
        latch_breaks(std::span(rows).subspan(k * per_setting, per_setting));
    }
    return rows;
}

std::vector<ResultRow> run_sweep_serial(const Preset& p, const SettingGrid& grid,
                                        const SweepOptions& options) {
    grid.validate();
    std::vector<ResultRow> rows;
    rows.reserve(grid.rows());
    for (const Setting& s : settings_of(grid)) {
        const std::size_t begin = rows.size();
        for (std::size_t n = grid.n_min; n <= grid.n_max; ++n) {
            rows.push_back(run_point(p, s.l2, s.l3, grid.l4, n, options));
        }
        latch_breaks(std::span(rows).subspan(begin));
    }
    return rows;
}

double link_loss_rate(double length_km) {
    if (!(length_km >= 0.0)) {
        throw std::invalid_argument("fiber length must be non-negative");
    }
    return std::exp(-length_km / 22.0);
}

std::string format_decimal(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void write_csv(std::span<const ResultRow> rows, std::ostream& out) {
    out << kCsvHeader << '\n';
    for (const ResultRow& r : rows) {
        out << r.preset << ',' << format_decimal(r.l2) << ','
            << (r.l3 ? format_decimal(*r.l3) : std::string("none")) << ','
            << format_decimal(r.l4) << ',' << r.n_nodes << ',' << format_decimal(r.end_time) << ','
            << format_decimal(r.intermediate_time) << ',' << format_decimal(r.total_time) << ','
            << format_decimal(r.delivered_fidelity) << ',' << (r.broken ? "true" : "false") << ','
            << r.purification_counts.l2 << ',' << r.purification_counts.l3 << ','
            << r.purification_counts.l4 << '\n';
    }
}

void write_csv(std::span<const ResultRow> rows, const std::filesystem::path& destination) {
    if (rows.empty()) {
        throw std::invalid_argument("refusing to write an empty sweep");
    }
    std::ofstream out(destination, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot open " + destination.string() + " for writing");
    }
    write_csv(rows, static_cast<std::ostream&>(out));
    out.flush();
    if (!out) {
        throw std::runtime_error("failed writing " + destination.string());
    }
}

}  // namespace repchain
