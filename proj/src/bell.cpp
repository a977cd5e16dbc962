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

#include "repchain/bell.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace repchain {

namespace {

constexpr BellLabel A = BellLabel::PhiPlus;
constexpr BellLabel B = BellLabel::PsiPlus;
constexpr BellLabel C = BellLabel::PsiMinus;
constexpr BellLabel D = BellLabel::PhiMinus;

constexpr std::size_t idx(BellLabel l) { return static_cast<std::size_t>(l); }

// Swapping table, re-indexed into (A, B, C, D) order. Row = first input,
// column = second input.
constexpr BellLabel kSwapTable[4][4] = {
    /* A */ {A, B, C, D},
    /* B */ {B, A, D, C},
    /* C */ {C, D, A, B},
    /* D */ {D, C, B, A},
};

// Purification table, same indexing. Discarded combinations are nullopt.
constexpr std::optional<BellLabel> X = std::nullopt;
constexpr std::optional<BellLabel> kPurifyTable[4][4] = {
    /* A */ {A, X, C, X},
    /* B */ {X, B, X, D},
    /* C */ {C, X, A, X},
    /* D */ {X, D, X, B},
};

}  // namespace

BellDiagonalState detail::StateAccess::make(const std::array<double, 4>& w) {
    return BellDiagonalState(w);
}

std::string_view label_name(BellLabel l) {
    switch (l) {
        case BellLabel::PhiPlus:
            return "Phi+";
        case BellLabel::PsiPlus:
            return "Psi+";
        case BellLabel::PsiMinus:
            return "Psi-";
        case BellLabel::PhiMinus:
            return "Phi-";
    }
    return "?";
}

ErrorProbability::ErrorProbability(double p) : p_(p) {
    if (!(p >= 0.0 && p <= 0.75)) {
        throw std::invalid_argument("error probability must lie in [0, 0.75], got " +
                                    std::to_string(p));
    }
}

BellDiagonalState::BellDiagonalState(double a, double b, double c, double d) : w_{a, b, c, d} {
    for (double x : w_) {
        if (!(x >= 0.0 && x <= 1.0)) {
            throw std::invalid_argument("Bell-diagonal weight out of [0, 1]");
        }
    }
    if (std::abs(sum() - 1.0) > kNormTolerance) {
        throw std::invalid_argument("Bell-diagonal weights must sum to 1");
    }
}

BellDiagonalState BellDiagonalState::pure(BellLabel l) {
    std::array<double, 4> w{};
    w[idx(l)] = 1.0;
    return BellDiagonalState(w);
}

BellDiagonalState BellDiagonalState::werner(double fidelity) {
    if (!(fidelity >= 0.0 && fidelity <= 1.0)) {
        throw std::invalid_argument("Werner fidelity out of [0, 1]");
    }
    const double e = (1.0 - fidelity) / 3.0;
    return BellDiagonalState(fidelity, e, e, e);
}

BellDiagonalState apply_error_channel(const BellDiagonalState& s, ErrorProbability p) {
    const double q = p.value();
    const double total = s.sum();
    std::array<double, 4> out{};
    for (std::size_t i = 0; i < 4; ++i) {
        out[i] = (1.0 - q) * s[i] + (q / 3.0) * (total - s[i]);
    }
    return detail::StateAccess::make(out);
}

BellLabel swap_label(BellLabel l1, BellLabel l2) { return kSwapTable[idx(l1)][idx(l2)]; }

BellDiagonalState swap_states(const BellDiagonalState& s1, const BellDiagonalState& s2) {
    std::array<double, 4> out{};
    for (BellLabel g1 : kAllLabels) {
        for (BellLabel g2 : kAllLabels) {
            out[idx(swap_label(g1, g2))] += s1[g1] * s2[g2];
        }
    }
    return detail::StateAccess::make(out);
}

std::optional<BellLabel> purify_label(BellLabel l1, BellLabel l2) {
    return kPurifyTable[idx(l1)][idx(l2)];
}

std::optional<PurifyOutcome> purify_states(const BellDiagonalState& s1,
                                           const BellDiagonalState& s2) {
    std::array<double, 4> mass{};
    double survived = 0.0;
    for (BellLabel g1 : kAllLabels) {
        for (BellLabel g2 : kAllLabels) {
            if (auto g = purify_label(g1, g2)) {
                const double w = s1[g1] * s2[g2];
                mass[idx(*g)] += w;
                survived += w;
            }
        }
    }
    if (survived <= 0.0) {
        return std::nullopt;
    }
    for (double& m : mass) {
        m /= survived;
    }
    return PurifyOutcome{detail::StateAccess::make(mass), survived};
}

double purify_success_probability_paper(const BellDiagonalState& s1,
                                        const BellDiagonalState& s2) {
    return (s1[A] + s1[D]) * (s2[A] + s2[D]) + (s1[B] + s1[C]) * (s2[B] + s2[C]);
}

BellDiagonalState exchange_psi_minus_phi_minus(const BellDiagonalState& s) {
    return detail::StateAccess::make({s[A], s[B], s[D], s[C]});
}

}  // namespace repchain
