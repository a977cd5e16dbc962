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

#ifndef REPCHAIN_ENGINE_HPP
#define REPCHAIN_ENGINE_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

#include "repchain/bell.hpp"
#include "repchain/ledger.hpp"

namespace repchain {

struct NodeProfile {
    ErrorProbability p_mem;  // per qubit per unit time
    ErrorProbability p_op;   // per node per operation
};

struct NetworkConfig {
    std::size_t n_nodes = 2;
    double unit_time = 1e-4;  // seconds; one hop of classical latency
    double raw_fidelity = 0.8;
    /// Carried for reference only. Link-generation retries are not charged.
    double raw_gen_success = 0.01;
    NodeProfile end_profile;
    NodeProfile intermediate_profile;

    /// Throws std::invalid_argument on n_nodes < 2, raw_fidelity outside
    /// (0.25, 1] or raw_gen_success outside (0, 1].
    void validate() const;
    NodeClass node_class(std::size_t node) const { return classify(node, n_nodes); }
    const NodeProfile& profile(std::size_t node) const;
};

enum class SuccessRule {
    Table,         // survival mass of the purification table
    ClosedForm,  // (A0+D0)(A1+D1) + (B0+C0)(B1+C1)
};

/// How successive pumping rounds are framed.
enum class PumpSchedule {
    /// Odd rounds run the table after exchanging Psi- and Phi- on both
    /// inputs, so every error label is caught within two rounds.
    Alternating,
    /// Every round uses the table as is. Psi- errors are never detected, so
    /// pumping stalls near fidelity 0.5.
    SingleTable,
};

enum class PurificationFrame { Native, Exchanged };

struct PolicyConfig {
    double l2_threshold = 0.99;
    std::optional<double> l3_threshold;  // nullopt: end-to-end principle
    double l4_threshold = 0.99;
    SuccessRule success_rule = SuccessRule::Table;
    PumpSchedule schedule = PumpSchedule::Alternating;
    std::size_t max_pump_rounds = 64;

    /// Thresholds must lie in (0.25, 1).
    void validate() const;
};

struct PairRecord {
    BellDiagonalState state;
    std::size_t left = 0;
    std::size_t right = 1;
    ResourceLedger ledger;

    std::size_t span_hops() const { return right - left; }
    double fidelity() const { return state.fidelity(); }
    friend bool operator==(const PairRecord&, const PairRecord&) = default;
};

class SpanMismatch : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

enum class Stage { Link, L2, Swap, L3, L4 };

/// Receives every pair the engine produces, in production order.
using PairObserver = std::function<void(Stage, const PairRecord&)>;

PairRecord generate_link_pair(std::size_t left_node, std::size_t right_node,
                              const NetworkConfig& config);

/// Joins two adjacent pairs at their shared node. Throws SpanMismatch when
/// left.right != right.left.
PairRecord noisy_swap(const PairRecord& left, const PairRecord& right, const NetworkConfig& config);

/// One purification of `keep` against `sacrifice` over the same span,
/// including gate noise, classical-wait decoherence and the success
/// divisor. Returns nullopt when the selected success probability is zero.
/// Throws SpanMismatch when the spans differ.
std::optional<PairRecord> noisy_purify(const PairRecord& keep, const PairRecord& sacrifice,
                                       const NetworkConfig& config, const PolicyConfig& policy,
                                       PurificationFrame frame = PurificationFrame::Native);

struct PumpResult {
    /// The pair that met the threshold, or the best pair seen on failure.
    PairRecord pair;
    std::size_t rounds = 0;
    bool reached = false;
    std::string failure;
};

/// Symmetric pumping: each round purifies two copies of the current pair.
PumpResult pump_to_threshold(const PairRecord& seed, double threshold, const NetworkConfig& config,
                             const PolicyConfig& policy, const PairObserver& observer = {},
                             Stage stage = Stage::L2);

struct PurificationCounts {
    std::size_t l2 = 0;
    std::size_t l3 = 0;
    std::size_t l4 = 0;
    friend bool operator==(const PurificationCounts&, const PurificationCounts&) = default;
};

struct ConnectionResult {
    BellDiagonalState final_state;
    ResourceLedger ledger;
    bool broken = false;
    std::optional<std::string> break_reason;
    PurificationCounts purification_counts;

    double fidelity() const { return final_state.fidelity(); }
    friend bool operator==(const ConnectionResult&, const ConnectionResult&) = default;
};

/// Builds one end-to-end pair over a path of config.n_nodes nodes: links are
/// pumped to l2, swapped bottom-up along the swap tree with optional L3
/// pumping of partial spans, and the full span is pumped to l4. Any
/// unreachable threshold stops the run and yields broken = true.
ConnectionResult run_connection(const NetworkConfig& config, const PolicyConfig& policy,
                                const PairObserver& observer = {});

}  // namespace repchain

#endif  // REPCHAIN_ENGINE_HPP
