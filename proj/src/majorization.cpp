#include "detconc/majorization.hpp"

#include <algorithm>
#include <cmath>

namespace detconc {

namespace {

// Neumaier-compensated running sum; spectra of 2^20 entries stay far below eps.
class RunningSum {
public:
    void add(double v) {
        const double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v)) {
            comp_ += (sum_ - t) + v;
        } else {
            comp_ += (v - t) + sum_;
        }
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

template <typename OnRow>
bool compare_prefixes(const Spectrum& x, const Spectrum& y, double eps, OnRow&& on_row) {
    const std::size_t n = std::max(x.size(), y.size());
    RunningSum sx;
    RunningSum sy;
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i) {
        sx.add(i < x.size() ? x[i] : 0.0);
        sy.add(i < y.size() ? y[i] : 0.0);
        const bool last = i + 1 == n;
        const bool holds = last ? std::abs(sx.value() - sy.value()) <= eps
                                : sx.value() <= sy.value() + eps;
        if (!on_row(PrefixRow{i + 1, sx.value(), sy.value(), holds})) {
            return holds;
        }
        ok = ok && holds;
    }
    return ok;
}

}  // namespace

bool majorizes(const Spectrum& x, const Spectrum& y, double eps) {
    return compare_prefixes(x, y, eps, [](const PrefixRow& row) { return row.holds; });
}

bool majorizes(const Spectrum& x, const Spectrum& y, std::vector<PrefixRow>& trace, double eps) {
    trace.clear();
    return compare_prefixes(x, y, eps, [&trace](const PrefixRow& row) {
        trace.push_back(row);
        return true;
    });
}

}  // namespace detconc
