#include "detconc/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "detconc/document.hpp"
#include "detconc/majorization.hpp"
#include "detconc/oracle.hpp"

namespace detconc::cli {

namespace {

using document::Json;

Json read_json(const std::string& path, std::istream& in) {
    try {
        if (path == "-") return Json::parse(in);
        std::ifstream file(path);
        if (!file) throw InvariantError("cannot open " + path);
        return Json::parse(file);
    } catch (const Json::parse_error& e) {
        throw InvariantError("malformed JSON in " + path + ": " + e.what());
    }
}

// "0.7,0.3", "(0.7, 0.3)" or "[0.7,0.3]"
std::optional<std::vector<double>> parse_inline_list(std::string text) {
    std::replace_if(text.begin(), text.end(), [](char c) { return c == '(' || c == ')' || c == '[' || c == ']'; }, ' ');
    std::vector<double> values;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        const auto first = item.find_first_not_of(" \t");
        if (first == std::string::npos) return std::nullopt;
        const auto last = item.find_last_not_of(" \t");
        const std::string token = item.substr(first, last - first + 1);
        char* end = nullptr;
        const double v = std::strtod(token.c_str(), &end);
        if (end != token.c_str() + token.size()) return std::nullopt;
        values.push_back(v);
    }
    if (values.empty()) return std::nullopt;
    return values;
}

struct Context {
    std::istream& in;
    std::ostream& out;
    std::optional<double> eps_flag;

    double eps_for(const document::EnsembleDocument& doc) const {
        return eps_flag.value_or(doc.eps.value_or(kDefaultEps));
    }

    int emit(const Json& j, bool verdict = true) const {
        out << document::dump(j) << '\n';
        return verdict ? kSuccess : kNegative;
    }
};

int cmd_measure(const Context& ctx, const std::string& path) {
    const auto doc = document::parse_ensemble_document(read_json(path, ctx.in));
    const double eps = ctx.eps_for(doc);
    if (doc.pairs) return ctx.emit(document::measure_report(document::to_ensemble(doc, eps), eps));
    return ctx.emit(document::measure_report(document::to_spectrum(doc, eps), eps));
}

int cmd_plan(const Context& ctx, const std::string& path, const std::string& strategy_name) {
    const auto strategy = strategy_from_string(strategy_name);
    if (!strategy) throw InvariantError("strategy must be \"chain\" or \"tournament\"");
    const auto doc = document::parse_ensemble_document(read_json(path, ctx.in));
    const double eps = ctx.eps_for(doc);
    return ctx.emit(document::plan_to_json(plan(document::to_ensemble(doc, eps), *strategy, eps)));
}

int cmd_verify(const Context& ctx, const std::string& path, const std::string& plan_path) {
    if (path == "-" && plan_path == "-") {
        throw InvariantError("only one of the documents can be read from standard input");
    }
    const auto doc = document::parse_ensemble_document(read_json(path, ctx.in));
    const double eps = ctx.eps_for(doc);
    const Ensemble e = document::to_ensemble(doc, eps);
    const ConcentrationPlan claimed = document::plan_from_json(read_json(plan_path, ctx.in), eps);
    const bool verdict = oracle::verify_plan(e, claimed, eps);
    Json out;
    out["verdict"] = verdict;
    out["bells"] = claimed.bells;
    return ctx.emit(out, verdict);
}

Spectrum read_spectrum_argument(const Context& ctx, const std::string& arg) {
    const double eps = ctx.eps_flag.value_or(kDefaultEps);
    if (arg != "-" && !std::filesystem::exists(arg)) {
        const auto values = parse_inline_list(arg);
        if (!values) throw InvariantError("\"" + arg + "\" is neither a file nor a list of numbers");
        return Spectrum::canonicalize(*values, {.eps = eps});
    }
    const auto doc = document::parse_ensemble_document(read_json(arg, ctx.in));
    return document::to_spectrum(doc, ctx.eps_for(doc));
}

int cmd_majorize(const Context& ctx, const std::string& x_arg, const std::string& y_arg, bool trace) {
    const Spectrum x = read_spectrum_argument(ctx, x_arg);
    const Spectrum y = read_spectrum_argument(ctx, y_arg);
    const double eps = ctx.eps_flag.value_or(kDefaultEps);
    std::vector<PrefixRow> rows;
    const bool verdict = trace ? majorizes(x, y, rows, eps) : majorizes(x, y, eps);
    return ctx.emit(document::majorize_report(x, y, verdict, trace ? &rows : nullptr), verdict);
}

int cmd_drain(const Context& ctx, const std::string& path) {
    const auto doc = document::parse_ensemble_document(read_json(path, ctx.in));
    const double eps = ctx.eps_for(doc);
    return ctx.emit(document::drain_report(document::to_spectrum(doc, eps), eps));
}

int cmd_demo_fig2(const Context& ctx) {
    const auto report = oracle::fig2_demo(ctx.eps_flag.value_or(kDefaultEps));
    return ctx.emit(document::fig2_report(report), report.majorized);
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Deterministic entanglement concentration planner and verifier", "detconc"};
    app.require_subcommand(1);

    std::optional<double> eps;
    app.add_option("--eps", eps, "Comparison tolerance (default 1e-9)")->check(CLI::NonNegativeNumber);

    std::string path;
    std::string second_path;
    std::string strategy = "chain";
    bool trace = false;

    auto* measure = app.add_subcommand("measure", "D, E and k_max of an ensemble or state");
    measure->add_option("doc", path, "Input document, '-' for standard input")->required();

    auto* plan_cmd = app.add_subcommand("plan", "Optimal pairwise concentration plan");
    plan_cmd->add_option("doc", path, "Input document with pairs")->required();
    plan_cmd->add_option("--strategy", strategy, "chain or tournament");

    auto* verify = app.add_subcommand("verify", "Check a plan against the full majorization criterion");
    verify->add_option("doc", path, "Input document with pairs")->required();
    verify->add_option("plan", second_path, "Plan document")->required();

    auto* majorize = app.add_subcommand("majorize", "Is x majorized by y?");
    majorize->add_option("x", path, "Spectrum as a state document or a list like 0.7,0.3")->required();
    majorize->add_option("y", second_path, "Spectrum as a state document or a list")->required();
    majorize->add_flag("--trace", trace, "Include every prefix-sum comparison");

    auto* drain_cmd = app.add_subcommand("drain", "Drain spectrum of a general state");
    drain_cmd->add_option("doc", path, "Input document with a state")->required();

    auto* demo = app.add_subcommand("demo-fig2", "Three-pair transformation that needs a collective operation");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kInputError;
    }

    const Context ctx{in, out, eps};
    try {
        if (measure->parsed()) return cmd_measure(ctx, path);
        if (plan_cmd->parsed()) return cmd_plan(ctx, path, strategy);
        if (verify->parsed()) return cmd_verify(ctx, path, second_path);
        if (majorize->parsed()) return cmd_majorize(ctx, path, second_path, trace);
        if (drain_cmd->parsed()) return cmd_drain(ctx, path);
        if (demo->parsed()) return cmd_demo_fig2(ctx);
    } catch (const InvariantError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const Json::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}

}  // namespace detconc::cli
