#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace detconc {

/// Default absolute tolerance for every invariant check and comparison.
inline constexpr double kDefaultEps = 1e-9;

/// Thrown when a value violates the invariant of the type it is meant to
/// populate. The message names the invariant.
class InvariantError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A real number in [0, 1]. Values within eps outside the interval are
/// clamped onto it.
class Probability {
public:
    explicit Probability(double value, double eps = kDefaultEps);

    double value() const noexcept { return value_; }

private:
    double value_;
};

/// Two-qubit pure state sqrt(a)|00> + sqrt(1-a)|11>, stored as the square
/// of its larger Schmidt coefficient. a = 1/2 is a Bell pair, a = 1 is a
/// product state.
class QubitPair {
public:
    explicit QubitPair(double a, double eps = kDefaultEps);

    double a() const noexcept { return a_; }

    bool is_bell(double eps = kDefaultEps) const noexcept { return a_ <= 0.5 + eps; }
    bool is_product(double eps = kDefaultEps) const noexcept { return a_ >= 1.0 - eps; }

    static QubitPair bell() { return QubitPair(0.5); }
    static QubitPair product() { return QubitPair(1.0); }

private:
    double a_;
};

struct CanonicalizeOptions {
    double eps = kDefaultEps;
    bool renormalize = false;
};

/// Schmidt spectrum: non-empty, descending, non-negative, summing to one.
class Spectrum {
public:
    /// Sorts descending (stable), clamps entries that stray outside [0, 1] and
    /// optionally renormalizes. Throws InvariantError on negative entries or
    /// a total that is off by more than eps without renormalization.
    static Spectrum canonicalize(std::span<const double> values, CanonicalizeOptions options = {});
    static Spectrum canonicalize(std::initializer_list<double> values, CanonicalizeOptions options = {});

    std::span<const double> values() const noexcept { return probs_; }
    std::size_t size() const noexcept { return probs_.size(); }
    double operator[](std::size_t i) const { return probs_[i]; }
    double max() const noexcept { return probs_.front(); }

    auto begin() const noexcept { return probs_.begin(); }
    auto end() const noexcept { return probs_.end(); }

private:
    explicit Spectrum(std::vector<double> probs) : probs_(std::move(probs)) {}

    std::vector<double> probs_;
};

/// Ordered collection of qubit pairs shared between the two parties.
class Ensemble {
public:
    explicit Ensemble(std::vector<QubitPair> pairs);
    static Ensemble from_values(std::span<const double> a, double eps = kDefaultEps);
    static Ensemble from_values(std::initializer_list<double> a, double eps = kDefaultEps);

    std::span<const QubitPair> pairs() const noexcept { return pairs_; }
    std::size_t size() const noexcept { return pairs_.size(); }
    const QubitPair& operator[](std::size_t i) const { return pairs_[i]; }

private:
    std::vector<QubitPair> pairs_;
};

/// Product a_1 * ... * a_n kept as mantissa * 2^exponent with the mantissa
/// in [1/2, 1). Never underflows, and scaling by powers of two is exact.
class ScaledProduct {
public:
    ScaledProduct() = default;

    ScaledProduct& operator*=(double factor);

    double mantissa() const noexcept { return mantissa_; }
    int exponent() const noexcept { return exponent_; }

    /// Value of the product times 2^shift, computed without intermediate
    /// underflow.
    double scaled(int shift) const noexcept;
    double value() const noexcept { return scaled(0); }
    double log2() const noexcept;

private:
    double mantissa_ = 0.5;
    int exponent_ = 1;
};

/// All pairwise products of x and y, sorted descending.
Spectrum tensor(const Spectrum& x, const Spectrum& y);

/// (a, 1 - a)
Spectrum pair_spectrum(const QubitPair& p);

/// Von Neumann entropy in bits, with 0 log 0 = 0.
double entropy(const Spectrum& s);

/// Renyi entropy of order t in bits. Rejects t < 0 and t = 1 (use entropy()).
double renyi(const Spectrum& s, double t);

}  // namespace detconc
