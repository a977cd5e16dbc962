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

#ifndef REPCHAIN_LEDGER_HPP
#define REPCHAIN_LEDGER_HPP

#include <cstddef>

namespace repchain {

enum class NodeClass { EndNode, IntermediateNode };

/// End nodes are the two path endpoints; everything in between is intermediate.
/// Throws std::out_of_range when node_index >= n_nodes.
NodeClass classify(std::size_t node_index, std::size_t n_nodes);

/// Qubit-occupancy totals in qubit x unit-time, split by node class.
struct ResourceLedger {
    double end_qubit_time = 0.0;
    double intermediate_qubit_time = 0.0;

    double total() const { return end_qubit_time + intermediate_qubit_time; }

    ResourceLedger& operator+=(const ResourceLedger& other) {
        end_qubit_time += other.end_qubit_time;
        intermediate_qubit_time += other.intermediate_qubit_time;
        return *this;
    }
    friend ResourceLedger operator+(ResourceLedger lhs, const ResourceLedger& rhs) {
        return lhs += rhs;
    }
    friend ResourceLedger operator*(const ResourceLedger& l, double k) {
        return {l.end_qubit_time * k, l.intermediate_qubit_time * k};
    }
    friend bool operator==(const ResourceLedger&, const ResourceLedger&) = default;
};

/// Adds qubits * duration to the component for node_class. Negative inputs
/// throw std::invalid_argument.
ResourceLedger charge(ResourceLedger ledger, NodeClass node_class, double qubits, double duration);

/// Multiplies both components; multiplier must be >= 1 (an inverse success
/// probability).
ResourceLedger scale(const ResourceLedger& ledger, double multiplier);

}  // namespace repchain

#endif  // REPCHAIN_LEDGER_HPP
