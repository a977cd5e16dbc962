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

#ifndef REPCHAIN_BELL_HPP
#define REPCHAIN_BELL_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

namespace repchain {

/// Bell basis labels. The numeric order (A, B, C, D) is fixed everywhere:
/// component 0 is the target state, so fidelity is component 0.
enum class BellLabel : std::size_t {
    PhiPlus = 0,   // A
    PsiPlus = 1,   // B
    PsiMinus = 2,  // C
    PhiMinus = 3,  // D
};

inline constexpr std::array<BellLabel, 4> kAllLabels = {
    BellLabel::PhiPlus, BellLabel::PsiPlus, BellLabel::PsiMinus, BellLabel::PhiMinus};

std::string_view label_name(BellLabel l);

class BellDiagonalState;

/// Probability of a single depolarizing event per application. Valid range
/// is [0, 3/4]; above 3/4 the channel coefficients turn negative.
class ErrorProbability {
   public:
    constexpr ErrorProbability() = default;
    explicit ErrorProbability(double p);

    constexpr double value() const { return p_; }
    friend constexpr bool operator==(ErrorProbability, ErrorProbability) = default;

   private:
    double p_ = 0.0;
};

namespace detail {
// Builds states from arithmetic results whose normalization is guaranteed by
// construction, skipping the validating constructor.
struct StateAccess {
    static BellDiagonalState make(const std::array<double, 4>& w);
};
}  // namespace detail

/// Mixture of the four Bell states, weights (a, b, c, d).
class BellDiagonalState {
   public:
    static constexpr double kNormTolerance = 1e-12;

    /// Pure Phi+.
    constexpr BellDiagonalState() = default;
    /// Throws std::invalid_argument unless every weight is in [0, 1] and the
    /// sum is 1 within kNormTolerance.
    BellDiagonalState(double a, double b, double c, double d);

    static BellDiagonalState pure(BellLabel l);
    /// Werner state: fidelity f, remaining weight split evenly over B, C, D.
    static BellDiagonalState werner(double fidelity);
    static BellDiagonalState uniform() { return werner(0.25); }

    constexpr double fidelity() const { return w_[0]; }
    constexpr double operator[](BellLabel l) const { return w_[static_cast<std::size_t>(l)]; }
    constexpr double operator[](std::size_t i) const { return w_[i]; }
    constexpr const std::array<double, 4>& weights() const { return w_; }
    double sum() const { return w_[0] + w_[1] + w_[2] + w_[3]; }

    friend bool operator==(const BellDiagonalState&, const BellDiagonalState&) = default;

   private:
    friend struct detail::StateAccess;
    constexpr explicit BellDiagonalState(const std::array<double, 4>& w) : w_(w) {}

    std::array<double, 4> w_{1.0, 0.0, 0.0, 0.0};
};

/// One step of the symmetric depolarizing channel: each weight keeps (1-p) of
/// itself and receives p/3 of each other weight.
BellDiagonalState apply_error_channel(const BellDiagonalState& s, ErrorProbability p);

/// Label composition under entanglement swapping.
BellLabel swap_label(BellLabel l1, BellLabel l2);

/// Swapping composition: output[g] = sum over swap_label(g1, g2) == g of s1[g1] s2[g2].
BellDiagonalState swap_states(const BellDiagonalState& s1, const BellDiagonalState& s2);

/// Purification table lookup; nullopt means the pair is discarded.
std::optional<BellLabel> purify_label(BellLabel l1, BellLabel l2);

struct PurifyOutcome {
    BellDiagonalState state;
    /// Surviving mass under the purification table.
    double p_table = 0.0;
};

/// Purification composition normalized by the table's survival mass.
/// Returns nullopt when nothing survives (p_table == 0).
std::optional<PurifyOutcome> purify_states(const BellDiagonalState& s1,
                                           const BellDiagonalState& s2);

/// (A0+D0)(A1+D1) + (B0+C0)(B1+C1). Agrees with p_table on Werner inputs only.
double purify_success_probability_paper(const BellDiagonalState& s1,
                                        const BellDiagonalState& s2);

/// Bilateral local basis change that swaps the Psi- and Phi- weights. It is
/// an involution and leaves the fidelity unchanged.
BellDiagonalState exchange_psi_minus_phi_minus(const BellDiagonalState& s);

}  // namespace repchain

#endif  // REPCHAIN_BELL_HPP
