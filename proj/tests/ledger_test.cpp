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

#include <gtest/gtest.h>

#include <random>

using namespace repchain;

TEST(classify, path_ends_are_end_nodes) {
    EXPECT_EQ(classify(0, 6), NodeClass::EndNode);
    EXPECT_EQ(classify(4, 6), NodeClass::IntermediateNode);
    EXPECT_EQ(classify(5, 6), NodeClass::EndNode);
    EXPECT_EQ(classify(1, 2), NodeClass::EndNode);
    EXPECT_THROW(classify(6, 6), std::out_of_range);
}

TEST(charge, swap_and_wait_costs) {
    ResourceLedger swap;
    swap = charge(swap, NodeClass::IntermediateNode, 2, 1);
    swap = charge(swap, NodeClass::EndNode, 1, 1);
    swap = charge(swap, NodeClass::IntermediateNode, 1, 1);
    EXPECT_EQ(swap.total(), 4.0);
    EXPECT_EQ(swap.intermediate_qubit_time, 3.0);

    ResourceLedger wait;
    wait = charge(wait, NodeClass::EndNode, 1, 3);
    wait = charge(wait, NodeClass::IntermediateNode, 1, 3);
    EXPECT_EQ(wait.total(), 6.0);
    EXPECT_EQ(wait.end_qubit_time, 3.0);
}

TEST(charge, zero_qubits_is_noop_and_negative_rejected) {
    const ResourceLedger l{1.5, 2.5};
    EXPECT_EQ(charge(l, NodeClass::EndNode, 0, 123.0), l);
    EXPECT_THROW(charge(l, NodeClass::EndNode, -1, 1), std::invalid_argument);
    EXPECT_THROW(charge(l, NodeClass::EndNode, 1, -1), std::invalid_argument);
}

TEST(scale, examples) {
    const ResourceLedger l{10, 20};
    EXPECT_EQ(scale(l, 1.0), l);
    const auto s = scale(l, 1.0 / 0.768888888888889);
    EXPECT_NEAR(s.end_qubit_time, 13.005780346820808, 1e-9);
    EXPECT_NEAR(s.intermediate_qubit_time, 26.011560693641616, 1e-9);
    EXPECT_EQ(scale(ResourceLedger{}, 1e6), ResourceLedger{});
    EXPECT_THROW(scale(l, 0.5), std::invalid_argument);
}

TEST(ledger, additive_and_non_negative) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 1e6);
    std::uniform_real_distribution<double> m(1.0, 50.0);
    for (int i = 0; i < 10000; ++i) {
        const ResourceLedger a{u(rng), u(rng)}, b{u(rng), u(rng)};
        const double rel = 1e-12 * (a.total() + b.total());
        ASSERT_NEAR((a + b).total(), a.total() + b.total(), rel);
        const auto s = scale(charge(a, NodeClass::EndNode, 2, u(rng)), m(rng));
        ASSERT_GE(s.end_qubit_time, 0.0);
        ASSERT_GE(s.intermediate_qubit_time, 0.0);
    }
}
