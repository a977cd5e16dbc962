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

#include "repchain/swap_tree.hpp"

#include <gtest/gtest.h>

#include <vector>

using namespace repchain;

namespace {

struct Merge {
    std::size_t round, left, center, right;
    bool operator==(const Merge&) const = default;
};

std::vector<Merge> merges(const SwapTree& t) {
    std::vector<Merge> out;
    for (const auto& n : t.nodes())
        if (!n.is_leaf()) out.push_back({n.round, n.left, n.center, n.right});
    return out;
}

}  // namespace

TEST(swap_tree, single_hop_is_a_leaf) {
    const SwapTree t = build_swap_tree(1);
    ASSERT_EQ(t.nodes().size(), 1u);
    EXPECT_TRUE(t.root().is_leaf());
    EXPECT_EQ(t.swap_count(), 0u);
    EXPECT_EQ(t.rounds(), 0u);
    EXPECT_THROW(build_swap_tree(0), std::invalid_argument);
}

TEST(swap_tree, five_hops_leave_a_remainder) {
    const std::vector<Merge> expect{
        {1, 0, 1, 2}, {1, 2, 3, 4}, {2, 0, 2, 4}, {3, 0, 4, 5},
    };
    EXPECT_EQ(merges(build_swap_tree(5)), expect);
}

TEST(swap_tree, four_hops_are_balanced) {
    const std::vector<Merge> expect{{1, 0, 1, 2}, {1, 2, 3, 4}, {2, 0, 2, 4}};
    const SwapTree t = build_swap_tree(4);
    EXPECT_EQ(merges(t), expect);
    EXPECT_EQ(t.rounds(), 2u);
}

TEST(swap_tree, structure_for_all_sizes) {
    for (std::size_t hops = 1; hops <= 255; ++hops) {
        const SwapTree t = build_swap_tree(hops);
        ASSERT_EQ(t.swap_count(), hops - 1);
        std::vector<int> covered(hops, 0);
        for (std::size_t i = 0; i < t.nodes().size(); ++i) {
            const auto& n = t.nodes()[i];
            if (n.is_leaf()) {
                ASSERT_EQ(n.hops(), 1u);
                ++covered[n.left];
                continue;
            }
            ASSERT_LT(n.left_child, i);
            ASSERT_LT(n.right_child, i);
            const auto& l = t.nodes()[n.left_child];
            const auto& r = t.nodes()[n.right_child];
            ASSERT_EQ(l.right, n.center);
            ASSERT_EQ(r.left, n.center);
            ASSERT_EQ(l.left, n.left);
            ASSERT_EQ(r.right, n.right);
        }
        for (int c : covered) ASSERT_EQ(c, 1);
        ASSERT_EQ(t.root().left, 0u);
        ASSERT_EQ(t.root().right, hops);
    }
}
