#pragma once

#include "detconc/spectra.hpp"

namespace detconc {

/// Bell pairs contributed by a qubit pair: -log2 a, in [0, 1].
double d_pair(const QubitPair& p);

/// Deterministic entanglement of a general state: -log2 of its largest
/// Schmidt probability. Additive under tensor products.
double d_general(const Spectrum& s);

/// Largest k with 2^k * product <= 1 + eps. The comparison is done on the
/// exact mantissa/exponent form of the product, never by flooring a log.
int largest_halving_count(const ScaledProduct& product, double eps = kDefaultEps);

/// Maximum number of Bell pairs extractable with certainty from the
/// ensemble: floor(-log2(a_1 ... a_n)), inclusive at exact powers of two.
int k_max(const Ensemble& e, double eps = kDefaultEps);

/// Maximum number of Bell pairs extractable with certainty from a single
/// state: floor(-log2 max_i p_i), inclusive at exact powers of two.
int k_max_general(const Spectrum& s, double eps = kDefaultEps);

/// Product of the larger Schmidt probabilities of every pair.
ScaledProduct ensemble_product(const Ensemble& e);

}  // namespace detconc
