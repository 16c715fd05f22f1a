#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cbramsey/constructions.hpp"
#include "cbramsey/error.hpp"
#include "cbramsey/formula.hpp"
#include "cbramsey/graph_io.hpp"
#include "cbramsey/oracle.hpp"
#include "cbramsey/verify.hpp"

#ifndef CBRAMSEY_VERSION
#define CBRAMSEY_VERSION "0.0.0"
#endif

namespace cbramsey::cli {

namespace {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

constexpr const char* kOracleNote =
    "exhaustive tiny-scale search: it checks the arrowing definition and small witnesses, "
    "not the exact values for large m";

struct Common {
    std::uint64_t seed = 1;
    int threads = 1;
};

int default_threads() {
    if (const char* env = std::getenv(kThreadsEnv)) {
        try {
            return std::max(1, std::stoi(env));
        } catch (const std::exception&) {
            return 1;
        }
    }
    return 1;
}

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InfeasibleAssembly: return kAssemblyError;
        case ErrorKind::ParseError: return kParseError;
        case ErrorKind::ResourceLimit: return kBudgetExceeded;
        default: return kDomainError;
    }
}

struct Range {
    std::int64_t lo = 0, hi = 0;
};

Range parse_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const std::int64_t v = std::stoll(text);
            return {v, v};
        }
        return {std::stoll(text.substr(0, dots)), std::stoll(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw Error(ErrorKind::OutOfRange, "bad range '" + text + "', expected a..b");
    }
}

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

void write_manifest(const fs::path& path, const std::string& command, const ordered_json& parameters,
                    const Common& common, double wall_ms, const std::vector<fs::path>& outputs) {
    ordered_json j;
    j["command"] = command;
    j["parameters"] = parameters;
    j["tool_version"] = CBRAMSEY_VERSION;
    j["seed"] = common.seed;
    j["wall_time_ms"] = wall_ms;
    auto paths = ordered_json::array();
    for (const auto& p : outputs) paths.push_back(p.string());
    j["outputs"] = std::move(paths);
    write_text(path, j.dump(2) + "\n");
}

double since_ms(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

struct PredictArgs {
    std::int64_t t = 0, k = 0, n = 0, m = 0;
    bool strict = false;
};

int cmd_predict(const PredictArgs& a, std::ostream& out, std::ostream& err) {
    const Prediction pred = predict(a.t, a.k, a.n, a.m);
    ordered_json j = to_json(pred);
    j["parameters"] = {{"t", a.t}, {"k", a.k}, {"n", a.n}, {"m", a.m}};
    out << j.dump() << '\n';
    if (a.strict && !pred.flags.empty()) {
        err << "strict: hypothesis flag " << pred.flags.front() << '\n';
        return kStrictHypothesis;
    }
    return kOk;
}

struct ConstructArgs {
    std::int64_t t = 0, k = 0, n = 0, m = 0;
    std::string out_dir = ".";
    std::string name;
    std::string format = "json";
};

int cmd_construct(const ConstructArgs& a, const Common& common, std::ostream& out) {
    const auto t0 = std::chrono::steady_clock::now();
    const ParamContext ctx = validate(a.t, a.k, a.n, a.m);
    const Witness w = lower_bound_witness(ctx);
    const std::string name = a.name.empty() ? "witness_t" + std::to_string(a.t) + "_k" + std::to_string(a.k) + "_n" +
                                                  std::to_string(a.n) + "_m" + std::to_string(a.m)
                                            : a.name;
    std::error_code ec;
    fs::create_directories(a.out_dir, ec);
    if (ec) throw std::runtime_error("cannot create " + a.out_dir + ": " + ec.message());
    const BundlePaths paths = write_bundle(w, a.out_dir, name);
    const fs::path manifest = fs::path(a.out_dir) / (name + ".manifest.json");
    const ordered_json params = {{"t", a.t}, {"k", a.k}, {"n", a.n}, {"m", a.m}, {"name", name}};
    write_manifest(manifest, "construct", params, common, since_ms(t0), {paths.graph6, paths.spec});

    if (a.format == "text") {
        out << to_string(w.spec.family) << " order=" << w.graph.order() << " claimed_min_union=" << w.spec.claimed_min_union
            << " assembly=" << w.spec.assembly << '\n'
            << "graph6: " << paths.graph6.string() << '\n'
            << "spec: " << paths.spec.string() << '\n';
    } else {
        ordered_json j;
        j["spec"] = to_json(w.spec);
        j["order"] = w.graph.order();
        j["graph6"] = paths.graph6.string();
        j["spec_path"] = paths.spec.string();
        j["manifest"] = manifest.string();
        out << j.dump() << '\n';
    }
    return kOk;
}

struct VerifyArgs {
    std::string graph;
    std::string spec;
    std::optional<std::int64_t> t;
    std::int64_t k = 0, n = 0, m = 0;
    std::string mode = "auto";
    bool min_union = false;
    std::string out;
};

int cmd_verify(const VerifyArgs& a, const Common& common, std::ostream& out) {
    const auto t0 = std::chrono::steady_clock::now();
    const Graph g = read_graph_file(a.graph);

    const std::int64_t t = a.t ? *a.t : (a.n - 1) / std::max<std::int64_t>(a.m - 1, 1) + 1;
    const ParamContext ctx = validate(t, a.k, a.n, a.m);

    WitnessSpec spec;
    spec.claimed_order = g.order();
    spec.k = static_cast<int>(a.k);
    fs::path spec_path = a.spec;
    if (spec_path.empty()) {
        fs::path sibling = fs::path(a.graph).replace_extension(".json");
        if (sibling != fs::path(a.graph) && fs::exists(sibling)) spec_path = sibling;
    }
    if (!spec_path.empty()) {
        std::ifstream in(spec_path);
        if (!in) throw std::runtime_error("cannot open " + spec_path.string());
        const auto j = nlohmann::json::parse(in, nullptr, false);
        if (j.is_discarded()) throw Error(ErrorKind::ParseError, "malformed spec " + spec_path.string());
        spec = witness_spec_from_json(j);
    }

    VerifyMode mode = VerifyMode::Auto;
    if (a.mode == "exhaustive") mode = VerifyMode::Exhaustive;
    else if (a.mode == "structural") mode = VerifyMode::Structural;

    SearchLimits limits;
    limits.threads = common.threads;
    const WitnessReport report = verify_witness(g, spec, ctx, limits, mode);
    ordered_json j = to_json(report);
    j["parameters"] = {{"t", t}, {"k", a.k}, {"n", a.n}, {"m", a.m}, {"mode", a.mode}};
    if (!spec_path.empty()) j["spec_path"] = spec_path.string();
    if (a.min_union) {
        const MinUnion mu = min_union_neighborhood(g, static_cast<int>(a.k), common.threads);
        j["min_union"] = {{"value", mu.value}, {"set", mu.set}, {"claimed", spec.claimed_min_union}};
    }
    out << j.dump() << '\n';
    if (!a.out.empty()) {
        write_text(a.out, j.dump(2) + "\n");
        write_manifest(a.out + ".manifest.json", "verify", j["parameters"], common, since_ms(t0), {a.out});
    }
    return report.pass ? kOk : kDomainError;
}

struct TableArgs {
    std::int64_t k = 0, m = 0;
    std::string t_range;
    std::string format = "md";
};

int cmd_table(const TableArgs& a, std::ostream& out) {
    const Range tr = parse_range(a.t_range);
    if (tr.lo < 2 || tr.hi < tr.lo) throw Error(ErrorKind::OutOfRange, "t range must satisfy 2 <= lo <= hi");
    if (a.m % 2 != 0) throw Error(ErrorKind::OddCycleLength, "m = " + std::to_string(a.m) + " is odd");
    const std::vector<std::string> header{"t", "n", "p", "q", "case", "g", "sigma", "ell", "r_k", "r", "branch"};
    std::vector<std::vector<std::string>> rows;
    for (std::int64_t t = tr.lo; t <= tr.hi; ++t) {
        for (std::int64_t n = (t - 1) * (a.m - 1) + 1; n <= t * (a.m - 1); ++n) {
            const ParamContext ctx = validate(t, a.k, n, a.m);
            const Prediction pred = predict(ctx);
            auto opt = [](const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : std::string("-"); };
            std::vector<std::string> row{std::to_string(t), std::to_string(n), std::to_string(ctx.p), std::to_string(ctx.q),
                                         std::string(to_string(pred.case_tag.kind)), std::to_string(pred.g),
                                         opt(ctx.sigma), opt(pred.case_tag.ell)};
            if (pred.trace.empty()) {
                row.insert(row.end(), {"-", "-", "-"});
            } else {
                const auto& top = pred.trace.back();
                row.insert(row.end(), {std::to_string(top.r_k), top.r.str(), top.r_k_within_r ? "r_k<=r" : "r_k>r"});
            }
            rows.push_back(std::move(row));
        }
    }
    if (rows.empty()) throw Error(ErrorKind::OutOfRange, "no valid (t, n) in range");

    if (a.format == "csv") {
        auto line = [&](const std::vector<std::string>& cells) {
            for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
            out << '\n';
        };
        line(header);
        for (const auto& r : rows) line(r);
    } else {
        auto line = [&](const std::vector<std::string>& cells) {
            out << '|';
            for (const auto& c : cells) out << ' ' << c << " |";
            out << '\n';
        };
        line(header);
        out << '|';
        for (std::size_t i = 0; i < header.size(); ++i) out << " --- |";
        out << '\n';
        for (const auto& r : rows) line(r);
    }
    return kOk;
}

struct OracleArgs {
    int m = 0, n = 0, k = 0, max = 0;
    bool labeled = false;
    std::string out;
};

int cmd_oracle(const OracleArgs& a, const Common& common, std::ostream& out) {
    const auto t0 = std::chrono::steady_clock::now();
    const int cap = a.labeled ? 6 : 8;
    if (a.max > cap)
        throw Error(ErrorKind::ResourceLimit, "--max " + std::to_string(a.max) + " exceeds the enumeration cap " + std::to_string(cap));
    oracle::EnumerationOptions opts;
    opts.up_to_isomorphism = !a.labeled;
    const oracle::TinyRamsey res = oracle::ramsey_number_tiny(a.m, a.n, a.k, a.max, opts);
    ordered_json j;
    j["m"] = a.m;
    j["n"] = a.n;
    j["k"] = a.k;
    j["max"] = a.max;
    j["mode"] = a.labeled ? "labeled" : "isomorphism-classes";
    j["value"] = res.value ? ordered_json(*res.value) : ordered_json(nullptr);
    j["lower_bound"] = res.lower_bound;
    auto scan = ordered_json::array();
    for (std::size_t i = 0; i < res.scan.size(); ++i)
        scan.push_back(oracle::scan_entry_json(a.m, a.n, a.k, static_cast<int>(i) + 1, res.scan[i]));
    j["scan"] = std::move(scan);
    j["note"] = kOracleNote;
    out << j.dump() << '\n';
    if (!a.out.empty()) {
        write_text(a.out, j.dump(2) + "\n");
        const ordered_json params = {{"m", a.m}, {"n", a.n}, {"k", a.k}, {"max", a.max}, {"labeled", a.labeled}};
        write_manifest(a.out + ".manifest.json", "oracle", params, common, since_ms(t0), {a.out});
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cycle-book Ramsey numbers: prediction, witnesses, verification and a tiny oracle", "cbramsey"};
    app.set_version_flag("--version", CBRAMSEY_VERSION);
    app.require_subcommand(1);

    Common common;
    common.threads = default_threads();
    app.add_option("--seed", common.seed, "Seed recorded in manifests");
    app.add_option("--threads", common.threads, std::string("Worker threads (default from ") + kThreadsEnv + ")")
        ->check(CLI::PositiveNumber);

    PredictArgs pa;
    auto* predict_cmd = app.add_subcommand("predict", "Print the predicted Ramsey number as JSON");
    predict_cmd->add_option("--t", pa.t)->required();
    predict_cmd->add_option("--k", pa.k)->required();
    predict_cmd->add_option("--n", pa.n)->required();
    predict_cmd->add_option("--m", pa.m)->required();
    predict_cmd->add_flag("--strict", pa.strict, "Exit 3 when a hypothesis flag is raised");

    ConstructArgs ca;
    auto* construct_cmd = app.add_subcommand("construct", "Build the lower-bound witness and write a bundle");
    construct_cmd->add_option("--t", ca.t)->required();
    construct_cmd->add_option("--k", ca.k)->required();
    construct_cmd->add_option("--n", ca.n)->required();
    construct_cmd->add_option("--m", ca.m)->required();
    construct_cmd->add_option("--out-dir", ca.out_dir);
    construct_cmd->add_option("--name", ca.name, "Bundle file stem");
    construct_cmd->add_option("--format", ca.format)->check(CLI::IsMember({"json", "text"}));

    VerifyArgs va;
    auto* verify_cmd = app.add_subcommand("verify", "Check C_m-freeness and book-freeness of the complement");
    verify_cmd->add_option("--graph", va.graph, "graph6 or JSON graph file")->required();
    verify_cmd->add_option("--spec", va.spec, "Witness spec JSON (defaults to the sibling .json)");
    verify_cmd->add_option("--t", va.t, "Defaults to floor((n-1)/(m-1)) + 1");
    verify_cmd->add_option("--k", va.k)->required();
    verify_cmd->add_option("--n", va.n)->required();
    verify_cmd->add_option("--m", va.m)->required();
    verify_cmd->add_option("--mode", va.mode)->check(CLI::IsMember({"auto", "exhaustive", "structural"}));
    verify_cmd->add_flag("--min-union", va.min_union, "Also report the exact minimum neighbourhood union");
    verify_cmd->add_option("--out", va.out, "Also write the report here, with a manifest beside it");

    TableArgs ta;
    auto* table_cmd = app.add_subcommand("table", "Tabulate predictions over every valid n");
    table_cmd->add_option("--k", ta.k)->required();
    table_cmd->add_option("--m", ta.m)->required();
    table_cmd->add_option("--t", ta.t_range, "Range a..b")->required();
    table_cmd->add_option("--format", ta.format)->check(CLI::IsMember({"md", "csv"}));

    OracleArgs oa;
    auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive tiny Ramsey scan for N = 1..max");
    oracle_cmd->add_option("--m", oa.m)->required();
    oracle_cmd->add_option("--n", oa.n)->required();
    oracle_cmd->add_option("--k", oa.k)->required();
    oracle_cmd->add_option("--max", oa.max)->required();
    oracle_cmd->add_flag("--labeled", oa.labeled, "Enumerate labelled graphs (max <= 6)");
    oracle_cmd->add_option("--out", oa.out, "Also write the scan here, with a manifest beside it");

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, r;
        const int code = app.exit(e, o, r);
        out << o.str();
        err << r.str();
        return code == 0 ? kOk : kDomainError;
    }

    try {
        if (*predict_cmd) return cmd_predict(pa, out, err);
        if (*construct_cmd) return cmd_construct(ca, common, out);
        if (*verify_cmd) return cmd_verify(va, common, out);
        if (*table_cmd) return cmd_table(ta, out);
        if (*oracle_cmd) return cmd_oracle(oa, common, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.kind());
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << '\n';
        return kParseError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kIoError;
    }
    return kDomainError;
}

}  // namespace cbramsey::cli
