#include "detconc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "detconc/majorization.hpp"
#include "detconc/measure.hpp"

namespace detconc::oracle {

namespace {

void require_size(std::size_t n, std::size_t cap, const char* what) {
    if (n > cap) {
        throw InvariantError(std::string(what) + " supports at most " + std::to_string(cap) +
                             " pairs, got " + std::to_string(n));
    }
}

std::vector<double> ensemble_values(const Ensemble& e) {
    std::vector<double> a;
    a.reserve(e.size());
    for (const QubitPair& p : e.pairs()) a.push_back(p.a());
    return a;
}

// Pair values of `bells` Bell pairs, an optional residual and products.
std::vector<double> outcome_values(int bells, std::optional<double> residual, int products) {
    std::vector<double> a(static_cast<std::size_t>(bells), 0.5);
    if (residual) a.push_back(*residual);
    a.insert(a.end(), static_cast<std::size_t>(products), 1.0);
    return a;
}

Spectrum as_spectrum(const std::vector<double>& values) {
    return Spectrum::canonicalize(values);
}

std::vector<double> with_catalyst(const std::vector<double>& joint, const Spectrum& catalyst) {
    std::vector<double> out;
    out.reserve(joint.size() * catalyst.size());
    for (double x : joint) {
        for (double c : catalyst) out.push_back(x * c);
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

bool reaches(const Spectrum& initial, int bells, std::optional<double> residual, int products,
             double eps) {
    return majorizes(initial, as_spectrum(joint_spectrum(outcome_values(bells, residual, products))),
                     eps);
}

}  // namespace

std::vector<double> joint_spectrum(std::span<const double> pair_a) {
    const std::size_t n = pair_a.size();
    const std::size_t dim = std::size_t{1} << n;
    std::vector<double> out(dim);
    for (std::size_t mask = 0; mask < dim; ++mask) {
        double v = 1.0;
        for (std::size_t i = 0; i < n; ++i) {
            v *= (mask >> i & 1U) ? 1.0 - pair_a[i] : pair_a[i];
        }
        out[mask] = v;
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

bool verify_step(const QubitPair& p, const QubitPair& q, const StepOutcome& claimed, double eps) {
    const double in[] = {p.a(), q.a()};
    const double bell_out[] = {0.5, claimed.residual.a()};
    const double merge_out[] = {claimed.residual.a(), 1.0};
    const auto initial = as_spectrum(joint_spectrum(in));
    const auto final_state =
        as_spectrum(joint_spectrum(claimed.bell_extracted ? std::span<const double>(bell_out)
                                                          : std::span<const double>(merge_out)));
    return nielsen_allows(initial, final_state, eps);
}

bool verify_outcome(const Ensemble& e, int bells, const std::optional<QubitPair>& residual,
                    int disentangled, double eps) {
    require_size(e.size(), kMaxVerifyPairs, "verification");
    if (bells < 0 || disentangled < 0) return false;
    const auto total = static_cast<std::size_t>(bells + disentangled + (residual ? 1 : 0));
    if (total != e.size()) return false;
    const auto initial = as_spectrum(joint_spectrum(ensemble_values(e)));
    std::optional<double> residual_a;
    if (residual) residual_a = residual->a();
    return reaches(initial, bells, residual_a, disentangled, eps);
}

bool verify_plan(const Ensemble& e, const ConcentrationPlan& plan, double eps) {
    require_size(e.size(), kMaxVerifyPairs, "verification");
    const std::size_t n = e.size();
    if (plan.steps.size() >= n && !plan.steps.empty()) return false;

    std::vector<double> a = ensemble_values(e);
    for (const PairwiseStep& step : plan.steps) {
        if (step.left_index >= n || step.right_index >= n || step.left_index == step.right_index) {
            return false;
        }
        double& left = a[step.left_index];
        double& right = a[step.right_index];
        if (std::abs(step.input_a.value() - left) > eps ||
            std::abs(step.input_b.value() - right) > eps) {
            return false;
        }
        const double residual = step.output_residual_a.value();
        if (residual < 0.5 - eps) return false;
        const StepOutcome claimed{step.kind == StepKind::ExtractBell, QubitPair(residual, eps)};
        if (!verify_step(QubitPair(left, eps), QubitPair(right, eps), claimed, eps)) return false;
        left = claimed.residual.a();
        right = claimed.bell_extracted ? 0.5 : 1.0;
    }

    int bells = 0;
    int products = 0;
    std::vector<double> partial;
    for (double v : a) {
        if (v <= 0.5 + eps) {
            ++bells;
        } else if (v >= 1.0 - eps) {
            ++products;
        } else {
            partial.push_back(v);
        }
    }
    if (partial.size() > 1 || bells != plan.bells || products != plan.disentangled) return false;
    if (partial.empty() != !plan.residual.has_value()) return false;
    if (plan.residual && std::abs(plan.residual->a() - partial.front()) > eps) return false;

    return verify_outcome(e, plan.bells, plan.residual, plan.disentangled, eps);
}

int k_max_oracle(const Ensemble& e, double eps) {
    require_size(e.size(), kMaxVerifyPairs, "k_max oracle");
    const auto n = static_cast<int>(e.size());
    const auto initial = as_spectrum(joint_spectrum(ensemble_values(e)));
    int best = 0;
    for (int k = 1; k <= n; ++k) {
        if (!reaches(initial, k, std::nullopt, n - k, eps)) break;
        best = k;
    }
    return best;
}

std::optional<double> optimal_residual_oracle(const Ensemble& e, int k, double eps) {
    require_size(e.size(), kMaxVerifyPairs, "residual oracle");
    const auto n = static_cast<int>(e.size());
    if (k < 0 || k > n - 1) return std::nullopt;
    const auto initial = as_spectrum(joint_spectrum(ensemble_values(e)));
    const int products = n - k - 1;
    if (!reaches(initial, k, 1.0, products, eps)) return std::nullopt;
    double lo = 0.5;
    double hi = 1.0;
    if (reaches(initial, k, lo, products, eps)) return lo;
    for (int iter = 0; iter < 64 && hi - lo > 1e-15; ++iter) {
        const double mid = 0.5 * (lo + hi);
        (reaches(initial, k, mid, products, eps) ? hi : lo) = mid;
    }
    return hi;
}

int catalytic_k_max(const Ensemble& e, const Spectrum& catalyst, double eps) {
    require_size(e.size(), kMaxCatalysisPairs, "catalysis oracle");
    if (catalyst.size() > kMaxCatalystLength) {
        throw InvariantError("catalysis oracle supports catalysts of length at most " +
                             std::to_string(kMaxCatalystLength));
    }
    const auto n = static_cast<int>(e.size());
    const auto initial = as_spectrum(with_catalyst(joint_spectrum(ensemble_values(e)), catalyst));
    int best = 0;
    for (int k = 1; k <= n; ++k) {
        const auto target =
            as_spectrum(with_catalyst(joint_spectrum(outcome_values(k, std::nullopt, n - k)), catalyst));
        if (!majorizes(initial, target, eps)) break;
        best = k;
    }
    return best;
}

Fig2Report fig2_demo(double eps) {
    const double weakest = 0.95;
    const double target = 0.9;
    const double initial_pairs[] = {0.5, 0.5, weakest};
    const double final_pairs[] = {target, target, target};

    Fig2Report report{
        .initial = as_spectrum(joint_spectrum(initial_pairs)),
        .final_state = as_spectrum(joint_spectrum(final_pairs)),
        .majorized = false,
        .entropy_initial = 0.0,
        .entropy_final = 0.0,
        .d_initial = 0.0,
        .d_final = 0.0,
        .weakest_initial_a = weakest,
        .target_pair_a = target,
        .pairwise_reachable = true,
        .note = {},
    };
    report.majorized = nielsen_allows(report.initial, report.final_state, eps);
    report.entropy_initial = entropy(report.initial);
    report.entropy_final = entropy(report.final_state);
    report.d_initial = d_general(report.initial);
    report.d_final = d_general(report.final_state);

    // Every two-pair step leaves one of its outputs as a Bell pair or a
    // product pair. The target has neither, so no sequence of steps ends there.
    const QubitPair target_pair(target, eps);
    report.pairwise_reachable = target_pair.is_bell(eps) || target_pair.is_product(eps);
    report.note =
        "allowed by majorization, but raises the least entangled pair from a = 0.95 to "
        "a = 0.9; two-pair steps never produce three partially entangled outputs, so the "
        "transformation needs a collective operation on all three pairs";
    return report;
}

}  // namespace detconc::oracle
