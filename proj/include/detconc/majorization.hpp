#pragma once

#include <cstddef>
#include <vector>

#include "detconc/spectra.hpp"

namespace detconc {

/// One row of a prefix-sum comparison between x and y.
struct PrefixRow {
    std::size_t length;  // number of leading entries summed
    double sum_x;
    double sum_y;
    bool holds;
};

/// Whether x is majorized by y (x ≺ y). The shorter spectrum is padded with
/// zeros; every prefix sum of x must not exceed that of y by more than eps,
/// and the totals must agree within eps.
bool majorizes(const Spectrum& x, const Spectrum& y, double eps = kDefaultEps);

/// Same relation, also returning every prefix comparison.
bool majorizes(const Spectrum& x, const Spectrum& y, std::vector<PrefixRow>& trace,
               double eps = kDefaultEps);

/// Deterministic LOCC transformability: initial -> final is possible with
/// probability one iff initial ≺ final.
inline bool nielsen_allows(const Spectrum& initial, const Spectrum& final_state,
                           double eps = kDefaultEps) {
    return majorizes(initial, final_state, eps);
}

}  // namespace detconc
