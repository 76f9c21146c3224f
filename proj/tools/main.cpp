#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ltimes/render.hpp"
#include "ltimes/workspace.hpp"

using namespace ltimes;

namespace {

// Exit codes: 0 clean (holds/inconclusive/classification), 1 internal
// consistency alarm or contradictory assertions, 2 hypothesis unmet,
// 3 unusable input.
constexpr int kExitOk = 0;
constexpr int kExitAlarm = 1;
constexpr int kExitHypothesis = 2;
constexpr int kExitInput = 3;

struct Options {
    std::string workspace_path;
    std::optional<std::size_t> degree;
    std::string format = "table";
};

std::size_t effective_degree(const Options& opt, const WorkspaceDocument& ws) {
    if (!opt.degree) return ws.truncation_degree;
    if (*opt.degree > ws.truncation_degree)
        throw ValidationError("--degree " + std::to_string(*opt.degree) +
                              " exceeds the workspace truncation degree " +
                              std::to_string(ws.truncation_degree) +
                              "; raise truncation_degree in the document");
    return *opt.degree;
}

void emit(const OrderedJson& report) { std::cout << report.dump(2) << "\n"; }

int run_betti(const Options& opt, const std::string& ideal_name,
              const std::string& module_name, const std::string& route_name) {
    WorkspaceDocument ws = parse_workspace(opt.workspace_path);
    const std::size_t degree = effective_degree(opt, ws);
    const auto& decl = ws.idealization(ideal_name);
    IdealizationRing ideal = idealize(ws.ring(decl.base), ws.module_named(decl.module), degree);
    const ModuleModel& n = ws.module_named(module_name);

    BettiRoute route = BettiRoute::convolution;
    if (route_name == "division") route = BettiRoute::division;
    else if (route_name == "both") route = BettiRoute::both;

    BettiSeries over_base = n.betti().truncated(degree);
    BettiSeries over_ideal = betti_over_idealization(ideal, n, degree, route);

    if (opt.format == "json") {
        OrderedJson report = report_envelope("betti");
        report["idealization"] = ideal_name;
        report["ring"] = ideal.ring.name();
        report["module"] = module_name;
        report["degree"] = degree;
        report["route"] = route_name;
        report["over_base"] = to_json(over_base);
        report["over_idealization"] = to_json(over_ideal);
        emit(report);
    } else {
        std::string base_label = ideal.base.name();
        std::string ideal_label = ideal.ring.name();
        std::cout << "betti numbers of '" << module_name << "' to degree " << degree
                  << "\n";
        std::cout << base_label << ": " << coefficients_line(over_base) << "\n";
        std::cout << ideal_label << ": " << coefficients_line(over_ideal) << "\n";
    }
    return kExitOk;
}

int run_classify(const Options& opt, const std::string& ideal_name) {
    WorkspaceDocument ws = parse_workspace(opt.workspace_path);
    const std::size_t degree = effective_degree(opt, ws);
    const auto& decl = ws.idealization(ideal_name);
    IdealizationRing ideal = idealize(ws.ring(decl.base), ws.module_named(decl.module), degree);
    auto verdicts = classify_all(ideal);
    auto diagnostic = ci_fraction_diagnostic(ideal.base, ideal.zipped);

    if (opt.format == "json") {
        OrderedJson report = report_envelope("classify");
        report["idealization"] = ideal_name;
        report["ring"] = ideal.ring.name();
        report["dim"] = ideal.ring.dim();
        report["depth"] = ideal.ring.depth();
        report["edim"] = ideal.ring.edim();
        OrderedJson arr = OrderedJson::array();
        for (const StructureVerdict& v : verdicts)
            arr.push_back(to_json(v));
        report["verdicts"] = std::move(arr);
        report["ci_fraction"] = to_json(diagnostic);
        emit(report);
    } else {
        std::cout << "classification of " << ideal.ring.name() << " (dim "
                  << ideal.ring.dim() << ", depth " << ideal.ring.depth() << ", edim "
                  << ideal.ring.edim() << ")\n";
        for (const StructureVerdict& v : verdicts)
            std::cout << "  " << to_string(v.property) << ": " << to_string(v.verdict)
                      << "  [" << v.certificate << "]\n";
        std::cout << "  ci fraction diagnostic: " << diagnostic.report << "\n";
    }
    return kExitOk;
}

int report_exit(const ConjectureReport& report) {
    return report.verdict == Verdict::fails ? kExitAlarm : kExitOk;
}

void print_report(const Options& opt, const ConjectureReport& report) {
    if (opt.format == "json") {
        OrderedJson out = report_envelope("check");
        OrderedJson body = to_json(report);
        for (auto& [key, value] : body.items())
            out[key] = value;
        emit(out);
        return;
    }
    std::cout << to_string(report.conjecture) << ": " << to_string(report.verdict) << "\n";
    for (const Witness& w : report.witnesses)
        std::cout << "  index " << w.index << ": " << w.lhs << " vs " << w.rhs << "\n";
    for (const std::string& fact : report.derived_facts)
        std::cout << "  derived: " << fact << "\n";
    std::cout << "  " << report.narrative << "\n";
}

int run_check(const Options& opt, const std::string& conjecture,
              const std::string& ideal_name, const std::string& module_name,
              const std::string& omega_name, const std::string& ring_name,
              bool assert_base_beh, bool assert_base_total_rank) {
    WorkspaceDocument ws = parse_workspace(opt.workspace_path);
    const std::size_t degree = effective_degree(opt, ws);

    auto build = [&](const std::string& name) {
        const auto& decl = ws.idealization(name);
        return idealize(ws.ring(decl.base), ws.module_named(decl.module), degree);
    };

    ConjectureReport report;
    if (conjecture == "jl") {
        if (ideal_name.empty() || omega_name.empty())
            throw ValidationError("check jl needs --idealization and --omega");
        report = jl_check(build(ideal_name), ws.module_named(omega_name));
    } else if (conjecture == "beh") {
        if (ideal_name.empty() || module_name.empty())
            throw ValidationError("check beh needs --idealization and --module");
        report = beh_check(build(ideal_name), ws.module_named(module_name), assert_base_beh);
    } else if (conjecture == "total-rank") {
        if (ideal_name.empty() || module_name.empty())
            throw ValidationError("check total-rank needs --idealization and --module");
        report = total_rank_check(build(ideal_name), ws.module_named(module_name),
                                  assert_base_total_rank, degree);
    } else if (conjecture == "zl") {
        if (ring_name.empty() || module_name.empty())
            throw ValidationError("check zl needs --ring and --module");
        report = zl_check(ws.module_named(module_name), ws.ring(ring_name), degree);
    } else {
        throw ValidationError("unknown conjecture '" + conjecture +
                              "'; expected jl, beh, total-rank or zl");
    }
    print_report(opt, report);
    return report_exit(report);
}

int run_idealize(const Options& opt, const std::string& ideal_name) {
    WorkspaceDocument ws = parse_workspace(opt.workspace_path);
    const std::size_t degree = effective_degree(opt, ws);
    const auto& decl = ws.idealization(ideal_name);
    IdealizationRing ideal = idealize(ws.ring(decl.base), ws.module_named(decl.module), degree);

    if (opt.format == "json") {
        OrderedJson report = report_envelope("idealize");
        report["idealization"] = ideal_name;
        report["ring"] = ideal.ring.name();
        report["base"] = ideal.base.name();
        report["module"] = ideal.zipped.name();
        report["dim"] = ideal.ring.dim();
        report["depth"] = ideal.ring.depth();
        report["edim"] = ideal.ring.edim();
        report["characteristic"] = ideal.ring.characteristic();
        report["betti_k"] = to_json(ideal.ring.betti_k());
        report["structure"] = to_json(ideal.ring.structure());
        emit(report);
    } else {
        std::cout << ideal.ring.name() << "\n";
        std::cout << "  dim   = " << ideal.ring.dim() << "\n";
        std::cout << "  depth = " << ideal.ring.depth() << "\n";
        std::cout << "  edim  = " << ideal.ring.edim() << "\n";
        std::cout << "  betti_k = " << coefficients_line(ideal.ring.betti_k()) << "\n";
        const StructureFlags& f = ideal.ring.structure();
        std::cout << "  regular=" << to_string(f.regular)
                  << " hypersurface=" << to_string(f.hypersurface)
                  << " complete_intersection=" << to_string(f.complete_intersection)
                  << " gorenstein=" << to_string(f.gorenstein)
                  << " cohen_macaulay=" << to_string(f.cohen_macaulay) << "\n";
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Betti-number calculus over idealization rings"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--workspace,-w", opt.workspace_path, "workspace JSON document")
        ->required();
    app.add_option("--degree,-d", opt.degree, "truncation degree for this command");
    app.add_option("--format,-f", opt.format, "output format")
        ->check(CLI::IsMember({"table", "json"}));

    auto* betti = app.add_subcommand("betti", "Betti numbers over base and idealization");
    std::string betti_ideal, betti_module, betti_route = "convolution";
    betti->add_option("idealization", betti_ideal)->required();
    betti->add_option("module", betti_module)->required();
    betti->add_option("--route", betti_route)
        ->check(CLI::IsMember({"division", "convolution", "both"}));

    auto* classify = app.add_subcommand("classify", "structural verdicts with certificates");
    std::string classify_ideal;
    classify->add_option("idealization", classify_ideal)->required();

    auto* check = app.add_subcommand("check", "run a conjecture checker");
    std::string conjecture, check_ideal, check_module, check_omega, check_ring;
    bool assert_base_beh = false, assert_base_total_rank = false;
    check->add_option("--conjecture,-c", conjecture)->required();
    check->add_option("--idealization", check_ideal);
    check->add_option("--module", check_module);
    check->add_option("--omega", check_omega);
    check->add_option("--ring", check_ring);
    check->add_flag("--assert-base-beh", assert_base_beh,
                    "assert the base ring satisfies Buchsbaum-Eisenbud-Horrocks");
    check->add_flag("--assert-base-total-rank", assert_base_total_rank,
                    "assert the base ring satisfies Total Rank");

    auto* idealize_cmd = app.add_subcommand("idealize", "derived invariants of an idealization");
    std::string idealize_name;
    idealize_cmd->add_option("idealization", idealize_name)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (betti->parsed())
            return run_betti(opt, betti_ideal, betti_module, betti_route);
        if (classify->parsed())
            return run_classify(opt, classify_ideal);
        if (check->parsed())
            return run_check(opt, conjecture, check_ideal, check_module, check_omega,
                             check_ring, assert_base_beh, assert_base_total_rank);
        if (idealize_cmd->parsed())
            return run_idealize(opt, idealize_name);
    } catch (const HypothesisUnmetError& e) {
        std::cerr << "hypothesis unmet: " << e.what() << "\n";
        return kExitHypothesis;
    } catch (const InternalConsistencyError& e) {
        std::cerr << "internal consistency alarm: " << e.what() << "\n";
        return kExitAlarm;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
