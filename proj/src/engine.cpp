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

#include "repchain/engine.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

#include "repchain/swap_tree.hpp"

namespace repchain {

namespace {

// Minimum fidelity gain per pumping cycle before a setting counts as stalled.
constexpr double kMinGain = 1e-9;

void check_threshold(double t, const char* name) {
    if (!(t > 0.25 && t < 1.0)) {
        throw std::invalid_argument(std::string(name) + " threshold must lie in (0.25, 1)");
    }
}

std::string span_text(const PairRecord& p) {
    return std::to_string(p.left) + "-" + std::to_string(p.right);
}

std::string fixed(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9f", v);
    return buf;
}

const char* stage_name(Stage s) {
    switch (s) {
        case Stage::Link:
            return "link";
        case Stage::L2:
            return "L2";
        case Stage::Swap:
            return "swap";
        case Stage::L3:
            return "L3";
        case Stage::L4:
            return "L4";
    }
    return "?";
}

}  // namespace

void NetworkConfig::validate() const {
    if (n_nodes < 2) {
        throw std::invalid_argument("a path needs at least 2 nodes");
    }
    if (!(raw_fidelity > 0.25 && raw_fidelity <= 1.0)) {
        throw std::invalid_argument("raw fidelity must lie in (0.25, 1]");
    }
    if (!(raw_gen_success > 0.0 && raw_gen_success <= 1.0)) {
        throw std::invalid_argument("raw generation success must lie in (0, 1]");
    }
    if (!(unit_time > 0.0)) {
        throw std::invalid_argument("unit time must be positive");
    }
}

const NodeProfile& NetworkConfig::profile(std::size_t node) const {
    return node_class(node) == NodeClass::EndNode ? end_profile : intermediate_profile;
}

void PolicyConfig::validate() const {
    check_threshold(l2_threshold, "l2");
    if (l3_threshold) {
        check_threshold(*l3_threshold, "l3");
    }
    check_threshold(l4_threshold, "l4");
    if (max_pump_rounds == 0) {
        throw std::invalid_argument("max_pump_rounds must be positive");
    }
}

PairRecord generate_link_pair(std::size_t left_node, std::size_t right_node,
                              const NetworkConfig& config) {
    if (right_node != left_node + 1 || right_node >= config.n_nodes) {
        throw std::invalid_argument("link pairs join neighbouring nodes on the path");
    }
    PairRecord p;
    p.state = BellDiagonalState::werner(config.raw_fidelity);
    p.left = left_node;
    p.right = right_node;
    // Two memories for one unit time.
    p.ledger = charge(p.ledger, config.node_class(left_node), 1, 1);
    p.ledger = charge(p.ledger, config.node_class(right_node), 1, 1);
    return p;
}

PairRecord noisy_swap(const PairRecord& left, const PairRecord& right, const NetworkConfig& config) {
    if (left.right != right.left) {
        throw SpanMismatch("swap needs pairs sharing a node: " + span_text(left) + " and " +
                           span_text(right));
    }
    const std::size_t center = left.right;

    PairRecord out;
    out.left = left.left;
    out.right = right.right;
    out.state = swap_states(left.state, right.state);
    out.state = apply_error_channel(out.state, config.profile(center).p_op);
    out.state = apply_error_channel(out.state, config.profile(out.left).p_mem);
    out.state = apply_error_channel(out.state, config.profile(out.right).p_mem);

    // Four memories for one unit time: two at the center, one at each end.
    out.ledger = left.ledger + right.ledger;
    out.ledger = charge(out.ledger, config.node_class(center), 2, 1);
    out.ledger = charge(out.ledger, config.node_class(out.left), 1, 1);
    out.ledger = charge(out.ledger, config.node_class(out.right), 1, 1);
    return out;
}

std::optional<PairRecord> noisy_purify(const PairRecord& keep, const PairRecord& sacrifice,
                                       const NetworkConfig& config, const PolicyConfig& policy,
                                       PurificationFrame frame) {
    if (keep.left != sacrifice.left || keep.right != sacrifice.right) {
        throw SpanMismatch("purification needs identical spans: " + span_text(keep) + " and " +
                           span_text(sacrifice));
    }

    std::optional<PurifyOutcome> outcome;
    if (frame == PurificationFrame::Native) {
        outcome = purify_states(keep.state, sacrifice.state);
    } else {
        outcome = purify_states(exchange_psi_minus_phi_minus(keep.state),
                                exchange_psi_minus_phi_minus(sacrifice.state));
        if (outcome) {
            outcome->state = exchange_psi_minus_phi_minus(outcome->state);
        }
    }
    if (!outcome) {
        return std::nullopt;
    }

    double p_success = outcome->p_table;
    if (policy.success_rule == SuccessRule::ClosedForm) {
        p_success = purify_success_probability_paper(keep.state, sacrifice.state);
    }
    if (!(p_success > 0.0)) {
        return std::nullopt;
    }
    p_success = std::min(p_success, 1.0);

    const std::size_t d = keep.span_hops();
    const NodeProfile& lp = config.profile(keep.left);
    const NodeProfile& rp = config.profile(keep.right);

    PairRecord out;
    out.left = keep.left;
    out.right = keep.right;
    out.state = apply_error_channel(outcome->state, lp.p_op);
    out.state = apply_error_channel(out.state, rp.p_op);
    // Both holders wait d unit times for the other side's parity result.
    for (std::size_t i = 0; i < d; ++i) {
        out.state = apply_error_channel(out.state, lp.p_mem);
    }
    for (std::size_t i = 0; i < d; ++i) {
        out.state = apply_error_channel(out.state, rp.p_mem);
    }

    const NodeClass lc = config.node_class(keep.left);
    const NodeClass rc = config.node_class(keep.right);
    ResourceLedger spent = keep.ledger + sacrifice.ledger;
    spent = charge(spent, lc, 2, 1);
    spent = charge(spent, rc, 2, 1);
    spent = charge(spent, lc, 1, static_cast<double>(d));
    spent = charge(spent, rc, 1, static_cast<double>(d));
    out.ledger = scale(spent, 1.0 / p_success);
    return out;
}

PumpResult pump_to_threshold(const PairRecord& seed, double threshold, const NetworkConfig& config,
                             const PolicyConfig& policy, const PairObserver& observer,
                             Stage stage) {
    PumpResult result;
    result.pair = seed;
    if (seed.fidelity() >= threshold) {
        result.reached = true;
        return result;
    }

    const bool alternating = policy.schedule == PumpSchedule::Alternating;
    PairRecord current = seed;
    double checkpoint = seed.fidelity();

    auto fail = [&](std::string why) {
        result.failure = std::string(stage_name(stage)) + " purification over span " +
                         span_text(current) + " " + why + " (best fidelity " +
                         fixed(result.pair.fidelity()) + ", target " + fixed(threshold) + ")";
        return result;
    };

    while (true) {
        if (result.rounds >= policy.max_pump_rounds) {
            return fail("exceeded " + std::to_string(policy.max_pump_rounds) + " rounds");
        }
        const PurificationFrame frame = (alternating && result.rounds % 2 == 1)
                                            ? PurificationFrame::Exchanged
                                            : PurificationFrame::Native;
        auto next = noisy_purify(current, current, config, policy, frame);
        ++result.rounds;
        if (!next) {
            return fail("discards every input combination");
        }
        current = *next;
        if (observer) {
            observer(stage, current);
        }
        if (current.fidelity() > result.pair.fidelity()) {
            result.pair = current;
        }
        if (current.fidelity() >= threshold) {
            result.pair = current;
            result.reached = true;
            return result;
        }
        // A native round may dip while it doubles the undetected label, so
        // the alternating schedule judges progress over a full cycle.
        const bool cycle_done = !alternating || result.rounds % 2 == 0;
        if (cycle_done) {
            if (current.fidelity() - checkpoint <= kMinGain) {
                return fail("stopped improving");
            }
            checkpoint = current.fidelity();
        }
    }
}

ConnectionResult run_connection(const NetworkConfig& config, const PolicyConfig& policy,
                                const PairObserver& observer) {
    config.validate();
    policy.validate();

    const std::size_t last_node = config.n_nodes - 1;
    const SwapTree tree(last_node);
    std::vector<PairRecord> built(tree.nodes().size());
    ConnectionResult result;

    auto notify = [&](Stage s, const PairRecord& p) {
        if (observer) {
            observer(s, p);
        }
    };
    auto broken = [&](const PumpResult& pump) {
        result.final_state = pump.pair.state;
        result.ledger = pump.pair.ledger;
        result.broken = true;
        result.break_reason = pump.failure;
        return result;
    };

    for (std::size_t i = 0; i < tree.nodes().size(); ++i) {
        const SwapTree::Node& node = tree.nodes()[i];
        if (node.is_leaf()) {
            PairRecord link = generate_link_pair(node.left, node.right, config);
            notify(Stage::Link, link);
            PumpResult pump =
                pump_to_threshold(link, policy.l2_threshold, config, policy, observer, Stage::L2);
            result.purification_counts.l2 += pump.rounds;
            if (!pump.reached) {
                return broken(pump);
            }
            built[i] = pump.pair;
            continue;
        }

        PairRecord joined = noisy_swap(built[node.left_child], built[node.right_child], config);
        notify(Stage::Swap, joined);
        const bool end_to_end = joined.left == 0 && joined.right == last_node;
        if (!end_to_end && policy.l3_threshold && joined.fidelity() < *policy.l3_threshold) {
            PumpResult pump = pump_to_threshold(joined, *policy.l3_threshold, config, policy,
                                                observer, Stage::L3);
            result.purification_counts.l3 += pump.rounds;
            if (!pump.reached) {
                return broken(pump);
            }
            joined = pump.pair;
        }
        built[i] = joined;
    }

    PumpResult pump =
        pump_to_threshold(built.back(), policy.l4_threshold, config, policy, observer, Stage::L4);
    result.purification_counts.l4 += pump.rounds;
    if (!pump.reached) {
        return broken(pump);
    }
    result.final_state = pump.pair.state;
    result.ledger = pump.pair.ledger;
    return result;
}

}  // namespace repchain
