#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "detconc/concentrate.hpp"
#include "detconc/majorization.hpp"
#include "detconc/oracle.hpp"
#include "detconc/spectra.hpp"

namespace detconc::document {

using Json = nlohmann::ordered_json;

/// Significant digits used for every real number written out.
inline constexpr int kOutputDigits = 12;

/// Input document: either {"pairs": [{"a": ...}, ...]} or
/// {"state": {"p": [...]}}, with optional "eps" and "renormalize".
struct EnsembleDocument {
    std::optional<std::vector<double>> pairs;
    std::optional<std::vector<double>> state;
    std::optional<double> eps;
    bool renormalize = false;
};

/// Throws InvariantError naming the violated rule.
EnsembleDocument parse_ensemble_document(const Json& j);

Ensemble to_ensemble(const EnsembleDocument& doc, double eps);
Spectrum to_spectrum(const EnsembleDocument& doc, double eps);

/// v rounded to kOutputDigits significant digits.
double round_output(double v);

/// Pretty-prints with two-space indentation, writing every floating-point
/// number with kOutputDigits significant digits.
std::string dump(const Json& j);

Json spectrum_to_json(const Spectrum& s);

Json plan_to_json(const ConcentrationPlan& plan);

/// Inverse of plan_to_json. Throws InvariantError on schema violations.
ConcentrationPlan plan_from_json(const Json& j, double eps);

Json measure_report(const Ensemble& e, double eps);
Json measure_report(const Spectrum& s, double eps);
Json drain_report(const Spectrum& s, double eps);
Json majorize_report(const Spectrum& x, const Spectrum& y, bool majorized,
                     const std::vector<PrefixRow>* trace);
Json fig2_report(const oracle::Fig2Report& report);

}  // namespace detconc::document
