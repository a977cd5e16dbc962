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

#include "repchain/ledger.hpp"

#include <stdexcept>
#include <string>

namespace repchain {

NodeClass classify(std::size_t node_index, std::size_t n_nodes) {
    if (node_index >= n_nodes) {
        throw std::out_of_range("node index " + std::to_string(node_index) +
                                " outside path of " + std::to_string(n_nodes) + " nodes");
    }
    return (node_index == 0 || node_index + 1 == n_nodes) ? NodeClass::EndNode
                                                          : NodeClass::IntermediateNode;
}

ResourceLedger charge(ResourceLedger ledger, NodeClass node_class, double qubits, double duration) {
    if (!(qubits >= 0.0) || !(duration >= 0.0)) {
        throw std::invalid_argument("charge requires non-negative qubits and duration");
    }
    const double amount = qubits * duration;
    if (node_class == NodeClass::EndNode) {
        ledger.end_qubit_time += amount;
    } else {
        ledger.intermediate_qubit_time += amount;
    }
    return ledger;
}

ResourceLedger scale(const ResourceLedger& ledger, double multiplier) {
    if (!(multiplier >= 1.0)) {
        throw std::invalid_argument("ledger multiplier must be >= 1");
    }
    return ledger * multiplier;
}

}  // namespace repchain
