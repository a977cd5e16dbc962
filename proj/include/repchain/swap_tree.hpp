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

#ifndef REPCHAIN_SWAP_TREE_HPP
#define REPCHAIN_SWAP_TREE_HPP

#include <cstddef>
#include <vector>

namespace repchain {

/// Swap schedule over a linear path of n_hops hops.
///
/// Nodes live in a flat vector in which every child precedes its parent and
/// the root is last. Leaves are single hops (i, i+1); an
/// internal node is a swap at `center` joining its two children's spans.
///
/// Construction is round based: each round pairs the current segments left
/// to right, and an odd trailing segment waits for a later round. For five
/// hops this gives (0-1)+(1-2), (2-3)+(3-4) in round 1, (0-2)+(2-4) in round
/// 2 and (0-4)+(4-5) in round 3.
class SwapTree {
   public:
    static constexpr std::size_t kNoChild = static_cast<std::size_t>(-1);

    struct Node {
        std::size_t left = 0;   // span start (node index)
        std::size_t right = 0;  // span end (node index)
        std::size_t center = 0; // swap node; unused for leaves
        std::size_t round = 0;  // 0 for leaves
        std::size_t left_child = kNoChild;
        std::size_t right_child = kNoChild;

        bool is_leaf() const { return left_child == kNoChild; }
        std::size_t hops() const { return right - left; }
    };

    /// Throws std::invalid_argument when n_hops == 0.
    explicit SwapTree(std::size_t n_hops);

    std::size_t n_hops() const { return n_hops_; }
    std::size_t rounds() const { return rounds_; }
    const std::vector<Node>& nodes() const { return nodes_; }
    const Node& root() const { return nodes_.back(); }
    std::size_t swap_count() const { return nodes_.size() - n_hops_; }

   private:
    std::size_t n_hops_;
    std::size_t rounds_ = 0;
    std::vector<Node> nodes_;
};

SwapTree build_swap_tree(std::size_t n_hops);

}  // namespace repchain

#endif  // REPCHAIN_SWAP_TREE_HPP
