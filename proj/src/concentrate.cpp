#include "detconc/concentrate.hpp"

#include <algorithm>
#include <cmath>

namespace detconc {

std::string_view to_string(StepKind kind) {
    switch (kind) {
        case StepKind::ExtractBell: return "ExtractBell";
        case StepKind::Merge: return "Merge";
    }
    return "?";
}

std::optional<StepKind> step_kind_from_string(std::string_view name) {
    if (name == "ExtractBell") return StepKind::ExtractBell;
    if (name == "Merge") return StepKind::Merge;
    return std::nullopt;
}

std::string_view to_string(Strategy strategy) {
    switch (strategy) {
        case Strategy::Chain: return "chain";
        case Strategy::Tournament: return "tournament";
    }
    return "?";
}

std::optional<Strategy> strategy_from_string(std::string_view name) {
    if (name == "chain") return Strategy::Chain;
    if (name == "tournament") return Strategy::Tournament;
    return std::nullopt;
}

StepOutcome two_pair_step(const QubitPair& p, const QubitPair& q, double eps) {
    const double product = p.a() * q.a();
    if (product <= 0.5 + eps) {
        // 2ab may overshoot 1 by at most 2 eps at the boundary ab = 1/2.
        return {true, QubitPair(std::min(2.0 * product, 1.0), eps)};
    }
    return {false, QubitPair(product, eps)};
}

namespace {

class Scheduler {
public:
    Scheduler(const Ensemble& e, Strategy strategy, double eps) : eps_(eps) {
        plan_.strategy = strategy;
        a_.reserve(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) {
            const QubitPair& p = e[i];
            a_.push_back(p.a());
            if (p.is_bell(eps)) {
                ++plan_.bells;
            } else if (p.is_product(eps)) {
                ++plan_.disentangled;
            } else {
                live_.push_back(i);
            }
        }
    }

    ConcentrationPlan run() && {
        std::optional<std::size_t> survivor;
        switch (plan_.strategy) {
            case Strategy::Chain: survivor = chain(); break;
            case Strategy::Tournament: survivor = tournament(); break;
        }
        if (survivor) plan_.residual = QubitPair(a_[*survivor], eps_);
        return std::move(plan_);
    }

private:
    std::optional<std::size_t> chain() {
        std::optional<std::size_t> carry;
        for (std::size_t idx : live_) {
            if (!carry) {
                carry = idx;
            } else if (!step(*carry, idx)) {
                carry.reset();
            }
        }
        return carry;
    }

    std::optional<std::size_t> tournament() {
        std::vector<std::size_t> round = live_;
        while (round.size() > 1) {
            std::vector<std::size_t> next;
            for (std::size_t i = 0; i < round.size(); i += 2) {
                if (i + 1 == round.size() || step(round[i], round[i + 1])) {
                    next.push_back(round[i]);
                }
            }
            round = std::move(next);
        }
        if (round.empty()) return std::nullopt;
        return round.front();
    }

    // Returns whether the residual left at `left` is still partially entangled.
    bool step(std::size_t left, std::size_t right) {
        const QubitPair p(a_[left], eps_);
        const QubitPair q(a_[right], eps_);
        const StepOutcome out = two_pair_step(p, q, eps_);
        plan_.steps.push_back(PairwiseStep{
            left, right, out.bell_extracted ? StepKind::ExtractBell : StepKind::Merge,
            Probability(p.a()), Probability(q.a()), Probability(out.residual.a())});

        a_[left] = out.residual.a();
        if (out.bell_extracted) {
            ++plan_.bells;
            a_[right] = 0.5;
        } else {
            ++plan_.disentangled;
            a_[right] = 1.0;
        }

        if (out.residual.is_product(eps_)) {
            ++plan_.disentangled;
            return false;
        }
        if (out.residual.is_bell(eps_)) {
            ++plan_.bells;
            return false;
        }
        return true;
    }

    double eps_;
    ConcentrationPlan plan_;
    std::vector<double> a_;
    std::vector<std::size_t> live_;
};

}  // namespace

ConcentrationPlan plan(const Ensemble& e, Strategy strategy, double eps) {
    return Scheduler(e, strategy, eps).run();
}

int drain_width(const Spectrum& s, double eps) {
    const double m = s.max();
    auto d = static_cast<int>(std::floor(1.0 / m));
    while (d > 1 && d * m > 1.0 + eps) --d;
    while ((d + 1) * m <= 1.0 + eps) ++d;
    return std::min(d, static_cast<int>(s.size()));
}

Spectrum drain(const Spectrum& s, double eps) {
    const double m = s.max();
    const int d = drain_width(s, eps);
    std::vector<double> out(s.size(), 0.0);
    std::fill_n(out.begin(), d, m);
    const double remainder = 1.0 - d * m;
    if (remainder > eps && static_cast<std::size_t>(d) < out.size()) {
        out[static_cast<std::size_t>(d)] = remainder;
    }
    return Spectrum::canonicalize(out, {.eps = eps});
}

}  // namespace detconc
