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

// repchain: run occupancy sweeps and write CSV / SVG.
//
//   repchain --preset b --l2 0.999 --l3 none --out run.csv
//   repchain --preset a --format both --metric total --out a.csv

#include <cstdio>
#include <exception>
#include <iostream>
#include <map>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "repchain/cli_options.hpp"
#include "repchain/experiment.hpp"
#include "repchain/svg_chart.hpp"

int main(int argc, char** argv) {
    using namespace repchain;

    CliOptions options;
    try {
        options = parse_options(argc, argv);
    } catch (const HelpRequested& h) {
        std::cout << h.what();
        return 0;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n(run with --help for the flag list)\n";
        return 2;
    }

#ifdef _OPENMP
    if (options.threads) {
        omp_set_num_threads(*options.threads);
    }
#endif

    std::vector<ResultRow> rows;
    try {
        rows = run_sweep(options.resolved_preset(), options.grid(), options.sweep_options());
    } catch (const std::exception& e) {
        std::cerr << "sweep failed: " << e.what() << '\n';
        return 1;
    }

    try {
        if (options.format != OutputFormat::Svg) {
            write_csv(rows, options.out);
            std::cout << "wrote " << rows.size() << " rows to " << options.out.string() << '\n';
        }
        if (options.format != OutputFormat::Csv) {
            emit_svg(rows, options.metric, options.svg_path());
            std::cout << "wrote chart to " << options.svg_path().string() << '\n';
        }
    } catch (const std::exception& e) {
        std::cerr << "output failed: " << e.what() << '\n';
        return 1;
    }

    // Break summary, one line per setting.
    std::map<std::string, std::size_t> first_break;
    std::vector<std::string> order;
    for (const ResultRow& r : rows) {
        const std::string label = setting_label(r);
        if (!first_break.contains(label)) {
            first_break[label] = 0;
            order.push_back(label);
        }
        if (r.broken && first_break[label] == 0) {
            first_break[label] = r.n_nodes;
        }
    }
    for (const std::string& label : order) {
        const std::size_t n = first_break[label];
        std::printf("(%s) %s\n", label.c_str(),
                    n ? ("breaks at n=" + std::to_string(n)).c_str() : "unbroken over range");
    }
    return 0;
}
