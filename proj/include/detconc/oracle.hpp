#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "detconc/concentrate.hpp"
#include "detconc/spectra.hpp"

namespace detconc::oracle {

// Brute-force checks against the full 2^n-dimensional Schmidt spectra. They
// enumerate and sort every entry explicitly and share nothing with the
// closed-form planner except the majorization relation itself.

inline constexpr std::size_t kMaxVerifyPairs = 20;
inline constexpr std::size_t kMaxCatalysisPairs = 12;
inline constexpr std::size_t kMaxCatalystLength = 8;

/// Every product a_{i,b_i} over the 2^n choices of larger/smaller
/// coefficient per pair, sorted descending.
std::vector<double> joint_spectrum(std::span<const double> pair_a);

/// Whether p (x) q -> claimed is allowed by the majorization criterion.
bool verify_step(const QubitPair& p, const QubitPair& q, const StepOutcome& claimed,
                 double eps = kDefaultEps);

/// Full-spectrum check that the ensemble can be turned into `bells` Bell
/// pairs, the residual and `disentangled` products.
bool verify_outcome(const Ensemble& e, int bells, const std::optional<QubitPair>& residual,
                    int disentangled, double eps = kDefaultEps);

/// Replays every step (each re-checked with verify_step), compares the
/// replayed tally with the plan's, and checks the plan's final tally with
/// verify_outcome. Throws InvariantError for more than kMaxVerifyPairs pairs.
bool verify_plan(const Ensemble& e, const ConcentrationPlan& plan, double eps = kDefaultEps);

/// Largest k for which the full initial spectrum is majorized by k Bell
/// pairs next to products, found by scanning k upwards.
int k_max_oracle(const Ensemble& e, double eps = kDefaultEps);

/// Smallest a' (most entanglement) such that the ensemble reaches k Bell
/// pairs, the residual (a', 1 - a') and products; found by bisection.
/// Empty when k Bell pairs are out of reach or no slot is left for a residual.
std::optional<double> optimal_residual_oracle(const Ensemble& e, int k, double eps = kDefaultEps);

/// Largest k such that initial (x) catalyst reaches k Bell pairs (x) catalyst
/// (x) residual (x) products. The residual slot takes its most permissive
/// form, a product pair, so the result bounds every residual choice.
int catalytic_k_max(const Ensemble& e, const Spectrum& catalyst, double eps = kDefaultEps);

/// Three-pair transformation Bell (x) Bell (x) (0.95, 0.05) -> (0.9, 0.1)^3
/// that the majorization criterion allows but no sequence of two-pair steps
/// produces.
struct Fig2Report {
    Spectrum initial;
    Spectrum final_state;
    bool majorized;
    double entropy_initial;
    double entropy_final;
    double d_initial;
    double d_final;
    double weakest_initial_a;   // 0.95
    double target_pair_a;       // 0.9
    bool pairwise_reachable;    // false: every two-pair step emits a Bell or product pair
    std::string note;
};

Fig2Report fig2_demo(double eps = kDefaultEps);

}  // namespace detconc::oracle
