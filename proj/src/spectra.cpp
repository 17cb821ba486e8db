#include "detconc/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>

namespace detconc {

namespace {

std::string fmt_value(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

Probability::Probability(double value, double eps) : value_(value) {
    if (!std::isfinite(value) || value < -eps || value > 1.0 + eps) {
        throw InvariantError("probability must lie in [0, 1], got " + fmt_value(value));
    }
    value_ = std::clamp(value, 0.0, 1.0);
}

QubitPair::QubitPair(double a, double eps) : a_(a) {
    if (!std::isfinite(a) || a < 0.5 - eps || a > 1.0 + eps) {
        throw InvariantError("qubit pair requires 1/2 <= a <= 1, got a = " + fmt_value(a));
    }
    a_ = std::clamp(a, 0.5, 1.0);
}

Spectrum Spectrum::canonicalize(std::span<const double> values, CanonicalizeOptions options) {
    const double eps = options.eps;
    if (values.empty()) {
        throw InvariantError("spectrum must contain at least one entry");
    }
    std::vector<double> probs(values.begin(), values.end());
    for (double& p : probs) {
        if (!std::isfinite(p)) {
            throw InvariantError("spectrum entries must be finite");
        }
        if (p < -eps) {
            throw InvariantError("spectrum entries must be non-negative, got " + fmt_value(p));
        }
        if (p < 0.0) p = 0.0;
    }
    const double total = std::accumulate(probs.begin(), probs.end(), 0.0);
    if (options.renormalize) {
        if (total <= 0.0) {
            throw InvariantError("cannot renormalize a spectrum with zero total");
        }
        for (double& p : probs) p /= total;
    } else if (std::abs(total - 1.0) > eps) {
        throw InvariantError("spectrum entries must sum to 1, got " + fmt_value(total));
    }
    for (double& p : probs) {
        if (p > 1.0) p = 1.0;
    }
    std::stable_sort(probs.begin(), probs.end(), std::greater<>());
    return Spectrum(std::move(probs));
}

Spectrum Spectrum::canonicalize(std::initializer_list<double> values, CanonicalizeOptions options) {
    return canonicalize(std::span<const double>(values.begin(), values.size()), options);
}

Ensemble::Ensemble(std::vector<QubitPair> pairs) : pairs_(std::move(pairs)) {
    if (pairs_.empty()) {
        throw InvariantError("ensemble must contain at least one pair");
    }
}

Ensemble Ensemble::from_values(std::span<const double> a, double eps) {
    std::vector<QubitPair> pairs;
    pairs.reserve(a.size());
    for (double v : a) pairs.emplace_back(v, eps);
    return Ensemble(std::move(pairs));
}

Ensemble Ensemble::from_values(std::initializer_list<double> a, double eps) {
    return from_values(std::span<const double>(a.begin(), a.size()), eps);
}

ScaledProduct& ScaledProduct::operator*=(double factor) {
    if (!(factor > 0.0) || !std::isfinite(factor)) {
        throw InvariantError("scaled product factors must be positive and finite");
    }
    int exp = 0;
    const double m = std::frexp(factor, &exp);
    int carry = 0;
    mantissa_ = std::frexp(mantissa_ * m, &carry);
    exponent_ += exp + carry;
    return *this;
}

double ScaledProduct::scaled(int shift) const noexcept {
    return std::ldexp(mantissa_, exponent_ + shift);
}

double ScaledProduct::log2() const noexcept {
    return std::log2(mantissa_) + exponent_;
}

Spectrum tensor(const Spectrum& x, const Spectrum& y) {
    std::vector<double> out;
    out.reserve(x.size() * y.size());
    for (double a : x) {
        for (double b : y) out.push_back(a * b);
    }
    std::stable_sort(out.begin(), out.end(), std::greater<>());
    return Spectrum::canonicalize(out);
}

Spectrum pair_spectrum(const QubitPair& p) {
    return Spectrum::canonicalize({p.a(), 1.0 - p.a()});
}

double entropy(const Spectrum& s) {
    double h = 0.0;
    for (double p : s) {
        if (p > 0.0) h -= p * std::log2(p);
    }
    return std::max(h, 0.0);
}

double renyi(const Spectrum& s, double t) {
    if (std::isnan(t) || t < 0.0) {
        throw InvariantError("renyi order must be non-negative");
    }
    if (t == 1.0) {
        throw InvariantError("renyi order 1 is the von Neumann entropy; use entropy()");
    }
    if (t == 0.0) {
        const auto support = std::count_if(s.begin(), s.end(), [](double p) { return p > 0.0; });
        return std::log2(static_cast<double>(support));
    }
    if (std::abs(t - 1.0) < 0.5) {
        // sum q^t - 1 = sum q (q^(t-1) - 1) for q normalized to unit total,
        // evaluated without cancellation near t = 1.
        const double total = std::accumulate(s.begin(), s.end(), 0.0);
        double excess = 0.0;
        for (double p : s) {
            const double q = p / total;
            if (q > 0.0) excess += q * std::expm1((t - 1.0) * std::log(q));
        }
        return std::log1p(excess) / std::log(2.0) / (1.0 - t);
    }
    // Factor out the largest entry so that large orders do not underflow.
    const double m = s.max();
    double scaled_sum = 0.0;
    for (double p : s) {
        if (p > 0.0) scaled_sum += std::pow(p / m, t);
    }
    return (t * std::log2(m) + std::log2(scaled_sum)) / (1.0 - t);
}

}  // namespace detconc
