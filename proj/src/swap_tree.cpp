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

#include <stdexcept>

namespace repchain {

SwapTree::SwapTree(std::size_t n_hops) : n_hops_(n_hops) {
    if (n_hops == 0) {
        throw std::invalid_argument("swap tree needs at least one hop");
    }
    nodes_.reserve(2 * n_hops - 1);

    std::vector<std::size_t> segments;
    segments.reserve(n_hops);
    for (std::size_t i = 0; i < n_hops; ++i) {
        Node leaf;
        leaf.left = i;
        leaf.right = i + 1;
        segments.push_back(nodes_.size());
        nodes_.push_back(leaf);
    }

    while (segments.size() > 1) {
        ++rounds_;
        std::vector<std::size_t> next;
        next.reserve((segments.size() + 1) / 2);
        std::size_t k = 0;
        for (; k + 1 < segments.size(); k += 2) {
            const Node& l = nodes_[segments[k]];
            const Node& r = nodes_[segments[k + 1]];
            Node merged;
            merged.left = l.left;
            merged.right = r.right;
            merged.center = l.right;
            merged.round = rounds_;
            merged.left_child = segments[k];
            merged.right_child = segments[k + 1];
            next.push_back(nodes_.size());
            nodes_.push_back(merged);
        }
        if (k < segments.size()) {
            next.push_back(segments[k]);
        }
        segments = std::move(next);
    }
}

SwapTree build_swap_tree(std::size_t n_hops) { return SwapTree(n_hops); }

}  // namespace repchain
