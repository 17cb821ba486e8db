#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "detconc/spectra.hpp"

namespace detconc {

enum class StepKind {
    ExtractBell,  // a*b <= 1/2: one Bell pair plus a residual with a' = 2ab
    Merge,        // a*b > 1/2: everything gathered into a' = ab, partner disentangled
};

std::string_view to_string(StepKind kind);
std::optional<StepKind> step_kind_from_string(std::string_view name);

enum class Strategy {
    Chain,       // left-to-right fold carrying the residual
    Tournament,  // rounds of adjacent pairing
};

std::string_view to_string(Strategy strategy);
std::optional<Strategy> strategy_from_string(std::string_view name);

/// Result of concentrating two qubit pairs.
struct StepOutcome {
    bool bell_extracted;
    QubitPair residual;
};

/// One two-pair event of a plan. After the step the residual lives at
/// left_index and the pair at right_index is a Bell pair (ExtractBell) or
/// disentangled (Merge).
struct PairwiseStep {
    std::size_t left_index;
    std::size_t right_index;
    StepKind kind;
    Probability input_a;
    Probability input_b;
    Probability output_residual_a;
};

struct ConcentrationPlan {
    Strategy strategy = Strategy::Chain;
    std::vector<PairwiseStep> steps;
    int bells = 0;
    std::optional<QubitPair> residual;
    int disentangled = 0;

    /// Four two-dimensional operations per pairwise step.
    std::size_t estimated_operations() const noexcept { return 4 * steps.size(); }
};

/// Optimal deterministic concentration of two pairs. The product of the
/// larger coefficients of all outputs (Bell counted as 1/2) equals p.a*q.a.
StepOutcome two_pair_step(const QubitPair& p, const QubitPair& q, double eps = kDefaultEps);

/// Concentrates the ensemble with at most n - 1 pairwise steps. Pairs that
/// already are Bell pairs or products are set aside before scheduling.
ConcentrationPlan plan(const Ensemble& e, Strategy strategy = Strategy::Chain,
                       double eps = kDefaultEps);

/// Number of copies of the largest entry that fit in the unit total:
/// largest d with d * m <= 1 + eps.
int drain_width(const Spectrum& s, double eps = kDefaultEps);

/// The state (m, ..., m, 1 - d m, 0, ...) that every state with largest
/// entry m reaches deterministically; same length as the input.
Spectrum drain(const Spectrum& s, double eps = kDefaultEps);

}  // namespace detconc
