#include "detconc/document.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "detconc/measure.hpp"

namespace detconc::document {

namespace {

double read_number(const Json& j, const std::string& where) {
    if (!j.is_number()) {
        throw InvariantError(where + " must be a number");
    }
    const double v = j.get<double>();
    if (!std::isfinite(v)) {
        throw InvariantError(where + " must be finite");
    }
    return v;
}

int read_count(const Json& j, const std::string& where) {
    if (!j.is_number_integer() || j.get<long long>() < 0) {
        throw InvariantError(where + " must be a non-negative integer");
    }
    return j.get<int>();
}

const Json& require_field(const Json& j, const char* field, const std::string& where) {
    if (!j.is_object() || !j.contains(field)) {
        throw InvariantError(where + " requires field \"" + field + "\"");
    }
    return j.at(field);
}

std::vector<double> read_number_list(const Json& j, const std::string& where) {
    if (!j.is_array()) {
        throw InvariantError(where + " must be a list of numbers");
    }
    std::vector<double> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        out.push_back(read_number(j[i], where + "[" + std::to_string(i) + "]"));
    }
    return out;
}

Json number_list(std::span<const double> values) {
    Json out = Json::array();
    for (double v : values) out.push_back(round_output(v));
    return out;
}

}  // namespace

EnsembleDocument parse_ensemble_document(const Json& j) {
    if (!j.is_object()) {
        throw InvariantError("document must be an object");
    }
    const bool has_pairs = j.contains("pairs");
    const bool has_state = j.contains("state");
    if (has_pairs == has_state) {
        throw InvariantError("document must contain exactly one of \"pairs\" or \"state\"");
    }

    EnsembleDocument doc;
    if (has_pairs) {
        const Json& pairs = j.at("pairs");
        if (!pairs.is_array()) {
            throw InvariantError("\"pairs\" must be a list of {\"a\": number}");
        }
        std::vector<double> a;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            const std::string where = "pairs[" + std::to_string(i) + "]";
            a.push_back(read_number(require_field(pairs[i], "a", where), where + ".a"));
        }
        doc.pairs = std::move(a);
    } else {
        doc.state = read_number_list(require_field(j.at("state"), "p", "state"), "state.p");
    }
    if (j.contains("eps")) {
        const double eps = read_number(j.at("eps"), "eps");
        if (eps < 0.0) throw InvariantError("eps must be non-negative");
        doc.eps = eps;
    }
    if (j.contains("renormalize")) {
        if (!j.at("renormalize").is_boolean()) {
            throw InvariantError("renormalize must be a boolean");
        }
        doc.renormalize = j.at("renormalize").get<bool>();
    }
    return doc;
}

Ensemble to_ensemble(const EnsembleDocument& doc, double eps) {
    if (!doc.pairs) {
        throw InvariantError("this command needs a \"pairs\" document");
    }
    return Ensemble::from_values(*doc.pairs, eps);
}

Spectrum to_spectrum(const EnsembleDocument& doc, double eps) {
    if (!doc.state) {
        throw InvariantError("this command needs a \"state\" document");
    }
    return Spectrum::canonicalize(*doc.state, {.eps = eps, .renormalize = doc.renormalize});
}

double round_output(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", kOutputDigits, v);
    const double r = std::strtod(buf, nullptr);
    return r == 0.0 ? 0.0 : r;  // no negative zero in output
}

namespace {

void dump_into(const Json& j, int depth, std::string& out) {
    const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
    const std::string close_pad(static_cast<std::size_t>(2 * depth), ' ');
    switch (j.type()) {
        case Json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            bool first = true;
            for (const auto& [key, value] : j.items()) {
                if (!first) out += ",\n";
                first = false;
                out += pad + Json(key).dump() + ": ";
                dump_into(value, depth + 1, out);
            }
            out += "\n" + close_pad + "}";
            return;
        }
        case Json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            out += "[\n";
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i > 0) out += ",\n";
                out += pad;
                dump_into(j[i], depth + 1, out);
            }
            out += "\n" + close_pad + "]";
            return;
        }
        case Json::value_t::number_float: {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.*g", kOutputDigits, j.get<double>());
            out += buf;
            return;
        }
        default:
            out += j.dump();
            return;
    }
}

}  // namespace

std::string dump(const Json& j) {
    std::string out;
    dump_into(j, 0, out);
    return out;
}

Json spectrum_to_json(const Spectrum& s) {
    return number_list(s.values());
}

Json plan_to_json(const ConcentrationPlan& plan) {
    Json steps = Json::array();
    for (const PairwiseStep& step : plan.steps) {
        steps.push_back(Json{
            {"left_index", step.left_index},
            {"right_index", step.right_index},
            {"case_tag", to_string(step.kind)},
            {"input_a", round_output(step.input_a.value())},
            {"input_b", round_output(step.input_b.value())},
            {"output_residual_a", round_output(step.output_residual_a.value())},
        });
    }
    Json out;
    out["strategy"] = to_string(plan.strategy);
    out["steps"] = std::move(steps);
    out["bells"] = plan.bells;
    out["residual"] = plan.residual ? Json{{"a", round_output(plan.residual->a())}} : Json(nullptr);
    out["disentangled"] = plan.disentangled;
    out["estimated_operations"] = plan.estimated_operations();
    return out;
}

ConcentrationPlan plan_from_json(const Json& j, double eps) {
    if (!j.is_object()) {
        throw InvariantError("plan document must be an object");
    }
    ConcentrationPlan plan;
    if (j.contains("strategy")) {
        const Json& s = j.at("strategy");
        const auto strategy = s.is_string() ? strategy_from_string(s.get<std::string>()) : std::nullopt;
        if (!strategy) throw InvariantError("strategy must be \"chain\" or \"tournament\"");
        plan.strategy = *strategy;
    }

    const Json& steps = require_field(j, "steps", "plan");
    if (!steps.is_array()) throw InvariantError("plan.steps must be a list");
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const std::string where = "steps[" + std::to_string(i) + "]";
        const Json& step = steps[i];
        const Json& tag = require_field(step, "case_tag", where);
        const auto kind = tag.is_string() ? step_kind_from_string(tag.get<std::string>()) : std::nullopt;
        if (!kind) throw InvariantError(where + ".case_tag must be \"ExtractBell\" or \"Merge\"");
        auto probability = [&](const char* field) {
            const std::string path = where + "." + field;
            try {
                return Probability(read_number(require_field(step, field, where), path), eps);
            } catch (const InvariantError& err) {
                throw InvariantError(path + ": " + err.what());
            }
        };
        plan.steps.push_back(PairwiseStep{
            static_cast<std::size_t>(read_count(require_field(step, "left_index", where),
                                                where + ".left_index")),
            static_cast<std::size_t>(read_count(require_field(step, "right_index", where),
                                                where + ".right_index")),
            *kind,
            probability("input_a"),
            probability("input_b"),
            probability("output_residual_a"),
        });
    }

    plan.bells = read_count(require_field(j, "bells", "plan"), "plan.bells");
    plan.disentangled = read_count(require_field(j, "disentangled", "plan"), "plan.disentangled");
    const Json& residual = require_field(j, "residual", "plan");
    if (!residual.is_null()) {
        plan.residual = QubitPair(read_number(require_field(residual, "a", "residual"), "residual.a"), eps);
    }
    return plan;
}

Json measure_report(const Ensemble& e, double eps) {
    Json pairs = Json::array();
    double sum_d = 0.0;
    double sum_e = 0.0;
    for (const QubitPair& p : e.pairs()) {
        const double d = d_pair(p);
        const double h = entropy(pair_spectrum(p));
        sum_d += d;
        sum_e += h;
        pairs.push_back(Json{{"a", round_output(p.a())}, {"D", round_output(d)}, {"E", round_output(h)}});
    }
    Json out;
    out["pairs"] = std::move(pairs);
    out["sum_D"] = round_output(sum_d);
    out["sum_E"] = round_output(sum_e);
    out["k_max"] = k_max(e, eps);
    return out;
}

Json measure_report(const Spectrum& s, double eps) {
    Json out;
    out["state"] = spectrum_to_json(s);
    out["D"] = round_output(d_general(s));
    out["E"] = round_output(entropy(s));
    out["k_max"] = k_max_general(s, eps);
    return out;
}

Json drain_report(const Spectrum& s, double eps) {
    Json out;
    out["state"] = spectrum_to_json(s);
    out["drain"] = spectrum_to_json(drain(s, eps));
    out["d"] = drain_width(s, eps);
    out["D"] = round_output(d_general(s));
    return out;
}

Json majorize_report(const Spectrum& x, const Spectrum& y, bool majorized,
                     const std::vector<PrefixRow>* trace) {
    Json out;
    out["x"] = spectrum_to_json(x);
    out["y"] = spectrum_to_json(y);
    out["majorized"] = majorized;
    if (trace) {
        Json rows = Json::array();
        for (const PrefixRow& row : *trace) {
            rows.push_back(Json{{"k", row.length},
                                {"sum_x", round_output(row.sum_x)},
                                {"sum_y", round_output(row.sum_y)},
                                {"holds", row.holds}});
        }
        out["trace"] = std::move(rows);
    }
    return out;
}

Json fig2_report(const oracle::Fig2Report& report) {
    Json out;
    out["initial"] = spectrum_to_json(report.initial);
    out["final"] = spectrum_to_json(report.final_state);
    out["majorized"] = report.majorized;
    out["entropy"] = Json{{"initial", round_output(report.entropy_initial)},
                          {"final", round_output(report.entropy_final)}};
    out["D"] = Json{{"initial", round_output(report.d_initial)}, {"final", round_output(report.d_final)}};
    out["weakest_initial_a"] = round_output(report.weakest_initial_a);
    out["target_pair_a"] = round_output(report.target_pair_a);
    out["pairwise_reachable"] = report.pairwise_reachable;
    out["note"] = report.note;
    return out;
}

}  // namespace detconc::document
