#include "detconc/measure.hpp"

#include <cmath>

namespace detconc {

double d_pair(const QubitPair& p) {
    return -std::log2(p.a());
}

double d_general(const Spectrum& s) {
    return -std::log2(s.max());
}

int largest_halving_count(const ScaledProduct& product, double eps) {
    // product = m * 2^e with m in [1/2, 1), so 2^-e * product = m <= 1 always
    // holds and 2^(-e+2) * product >= 2 never does. Only k = 1 - e is open.
    int k = -product.exponent();
    while (product.scaled(k + 1) <= 1.0 + eps) ++k;
    return k;
}

ScaledProduct ensemble_product(const Ensemble& e) {
    ScaledProduct product;
    for (const QubitPair& p : e.pairs()) product *= p.a();
    return product;
}

int k_max(const Ensemble& e, double eps) {
    return largest_halving_count(ensemble_product(e), eps);
}

int k_max_general(const Spectrum& s, double eps) {
    ScaledProduct product;
    product *= s.max();
    return largest_halving_count(product, eps);
}

}  // namespace detconc
