#include "addrep/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "addrep/audit.hpp"
#include "addrep/construct.hpp"
#include "addrep/errors.hpp"
#include "addrep/io.hpp"
#include "addrep/report_json.hpp"
#include "addrep/seqcore.hpp"
#include "addrep/sidon.hpp"

namespace addrep::cli {

namespace {

namespace fs = std::filesystem;
using json::Json;

// Every flag the tool understands. Values stay as parsed strings until a
// command needs them so the manifest can record exactly what was given.
struct Flags {
    std::string lambda;
    std::string theta;
    std::string sidon;
    std::string out;
    std::uint64_t seed = 0;
    std::int64_t max_trials = 100;
    std::int64_t horizon = 0;
    std::int64_t k = 2;
    std::int64_t l = 1;
    std::int64_t m = 0;
    std::int64_t n = 0;
    std::int64_t d = 0;
    std::int64_t count = 0;
    std::int64_t p = 0;
};

struct Registered {
    std::map<std::string, CLI::Option*> options;

    bool given(const std::string& name) const {
        const auto it = options.find(name);
        return it != options.end() && it->second->count() > 0;
    }
};

void add_common(CLI::App& app, Flags& f, Registered& reg,
                const std::vector<std::string>& names) {
    for (const auto& name : names) {
        CLI::Option* opt = nullptr;
        if (name == "lambda") {
            opt = app.add_option("--lambda", f.lambda, "weights lambda_0,...,lambda_d");
        } else if (name == "theta") {
            opt = app.add_option("--theta", f.theta, "comma-separated exponents");
        } else if (name == "sidon") {
            opt = app.add_option("--sidon", f.sidon,
                                 "Sidon substrate: greedy:COUNT, algebraic:PRIME or a set file");
        } else if (name == "out") {
            opt = app.add_option("--out", f.out, "output path or prefix");
        } else if (name == "seed") {
            opt = app.add_option("--seed", f.seed, "RNG seed");
        } else if (name == "max-trials") {
            opt = app.add_option("--max-trials", f.max_trials, "rejection-sampling trial cap");
        } else if (name == "horizon") {
            opt = app.add_option("--horizon,--n", f.horizon, "last index of the computed window");
        } else if (name == "k") {
            opt = app.add_option("--k", f.k, "number of addends");
        } else if (name == "l") {
            opt = app.add_option("--l", f.l, "difference order");
        } else if (name == "M") {
            opt = app.add_option("--M", f.m, "interval multiplier M");
        } else if (name == "N") {
            opt = app.add_option("--N", f.n, "number of shifted copies N");
        } else if (name == "d") {
            opt = app.add_option("--d", f.d, "weight degree d");
        } else if (name == "count") {
            opt = app.add_option("--count", f.count, "number of terms");
        } else if (name == "p") {
            opt = app.add_option("--p", f.p, "prime");
        }
        reg.options[name] = opt;
    }
}

void require(const Registered& reg, const std::string& name, const std::string& why) {
    if (!reg.given(name)) {
        throw ParameterError("--" + name + " is required " + why);
    }
}

WeightVector lambda_from(const Flags& f, const Registered& reg) {
    require(reg, "lambda", "for this command");
    return WeightVector(io::parse_int_list(f.lambda));
}

std::string set_text(const IntegerSet& a) {
    std::ostringstream ss;
    io::write_set(ss, a);
    return ss.str();
}

struct Substrate {
    IntegerSet set;
    std::string label;
    std::optional<fs::path> file;
};

Substrate load_substrate(const std::string& spec) {
    if (spec.starts_with("greedy:")) {
        const auto c = io::parse_int_list(spec.substr(7));
        return {greedy_sidon(c.at(0)), spec, std::nullopt};
    }
    if (spec.starts_with("algebraic:")) {
        const auto p = io::parse_int_list(spec.substr(10));
        return {algebraic_sidon(p.at(0)), spec, std::nullopt};
    }
    return {io::read_set(spec), "file:" + spec, fs::path(spec)};
}

Json file_entry(const std::string& role, const fs::path& path) {
    return {{"role", role}, {"path", path.string()}, {"sha256", io::sha256_hex(io::read_file(path))}};
}

// -- generate -----------------------------------------------------------

int cmd_generate(const std::string& kind, const Flags& f, const Registered& reg,
                 const std::vector<std::string>& argv, std::ostream& err) {
    require(reg, "out", "(output path)");
    std::optional<Construction> built;
    std::optional<fs::path> input;

    if (kind == "greedy-sidon" || kind == "algebraic-sidon") {
        const bool greedy = kind == "greedy-sidon";
        require(reg, greedy ? "count" : "p", "for " + kind);
        auto s = greedy ? greedy_sidon(f.count) : algebraic_sidon(f.p);
        ConstructionReport report;
        report.recipe = greedy ? Recipe::greedy_sidon : Recipe::algebraic_sidon;
        report.params = greedy ? decltype(report.params){{"count", std::to_string(f.count)},
                                                         {"start", std::to_string(kGreedySidonStart)}}
                               : decltype(report.params){{"p", std::to_string(f.p)}};
        const auto cert = is_sidon(s);
        report.verified_bounds.push_back(
            {"max_rep", Relation::at_most, std::int64_t{2}, static_cast<std::int64_t>(cert.max_rep)});
        built = Construction{std::move(s), std::move(report)};
    } else if (kind == "theorem2") {
        require(reg, "sidon", "for theorem2");
        require(reg, "N", "for theorem2");
        require(reg, "d", "for theorem2");
        auto sub = load_substrate(f.sidon);
        input = sub.file;
        built = theorem2_construct(sub.set, f.n, f.d, sub.label);
    } else if (kind == "lemma1") {
        require(reg, "M", "for lemma1");
        require(reg, "seed", "for sampling commands");
        const auto lam = lambda_from(f, reg);
        const auto d = reg.given("d") ? f.d : static_cast<std::int64_t>(lam.degree());
        built = lemma1_sample(f.m, d, lam, f.seed, f.max_trials);
    } else if (kind == "theorem4") {
        require(reg, "sidon", "for theorem4");
        require(reg, "M", "for theorem4");
        require(reg, "seed", "for sampling commands");
        const auto lam = lambda_from(f, reg);
        const auto d = reg.given("d") ? f.d : static_cast<std::int64_t>(lam.degree());
        auto sub = load_substrate(f.sidon);
        input = sub.file;
        built = theorem4_construct(sub.set, f.m, d, lam, f.seed, f.max_trials, sub.label);
    } else {
        throw ParameterError("unknown generator kind '" + kind + "'");
    }

    const fs::path set_path = f.out;
    const fs::path report_path = f.out + ".report.json";
    const fs::path manifest_path = f.out + ".manifest.json";
    io::write_file(set_path, set_text(built->set));
    io::write_file(report_path, json::dump(json::to_json(built->report)));

    Json manifest;
    manifest["schema"] = json::kSchemaVersion;
    manifest["kind"] = "run_manifest";
    manifest["tool_version"] = kToolVersion;
    manifest["command"] = "generate " + kind;
    manifest["argv"] = argv;
    manifest["params"] = Json::object();
    for (const auto& [k, v] : built->report.params) {
        manifest["params"][k] = v;
    }
    manifest["seed"] = built->report.seed ? Json(std::to_string(*built->report.seed)) : Json(nullptr);
    manifest["input_files"] = Json::array();
    if (input) {
        manifest["input_files"].push_back(file_entry("sidon", *input));
    }
    manifest["output_files"] = Json::array({file_entry("set", set_path),
                                            file_entry("report", report_path)});
    io::write_file(manifest_path, json::dump(manifest));

    if (!built->report.all_bounds_hold()) {
        err << "warning: a recorded bound does not hold; see " << report_path.string() << '\n';
    }
    return kOk;
}

// -- analyze ------------------------------------------------------------

int cmd_analyze(const std::string& what, const std::string& input, const Flags& f,
                const Registered& reg, std::ostream& out) {
    std::ostringstream tsv;
    if (what == "delta") {
        require(reg, "l", "for delta");
        const auto s = io::read_series(input);
        const auto diff = delta(s.values, static_cast<int>(f.l));
        io::write_series(tsv, s.first_index, std::span<const std::int64_t>(diff));
    } else {
        const auto a = io::read_set(input);
        if (what == "rep") {
            const auto horizon = reg.given("horizon") ? f.horizon : f.k * a.bound();
            const auto rep = rep_series(a, static_cast<int>(f.k), horizon);
            io::write_series(tsv, 0, std::span<const std::uint64_t>(rep.values));
        } else if (what == "blocks") {
            const auto horizon = reg.given("horizon") ? f.horizon : a.bound();
            const auto b = block_count_series(a, horizon);
            io::write_series(tsv, 0, std::span<const std::int64_t>(b));
        } else if (what == "weighted-blocks") {
            const auto horizon = reg.given("horizon") ? f.horizon : a.bound();
            const auto b = weighted_block_series(a, lambda_from(f, reg), horizon);
            io::write_series(tsv, 0, std::span<const std::int64_t>(b));
        } else if (what == "weighted-rep") {
            const auto horizon = reg.given("horizon") ? f.horizon : 2 * a.bound();
            const auto rep = rep_series(a, 2, horizon);
            const auto l = weighted_rep_series(lambda_from(f, reg), rep);
            io::write_series(tsv, 0, std::span<const std::int64_t>(l));
        } else {
            throw ParameterError("unknown analysis '" + what + "'");
        }
    }
    if (reg.given("out")) {
        io::write_file(f.out, tsv.str());
    } else {
        out << tsv.str();
    }
    return kOk;
}

// -- audit --------------------------------------------------------------

int cmd_audit(const std::string& theorem, const std::string& input, const Flags& f,
              const Registered& reg, std::ostream& out) {
    const auto a = io::read_set(input);
    const auto lam = lambda_from(f, reg);
    const auto horizon = reg.given("horizon") ? f.horizon : a.bound();

    std::string report_json;
    std::string tsv;
    int code = kOk;
    if (theorem == "p1-scan") {
        require(reg, "theta", "for p1-scan");
        const auto thetas = io::parse_real_list(f.theta);
        const auto scan = exponent_scan(a, lam, horizon, thetas);
        report_json = json::dump(json::to_json(scan));
        tsv = json::scan_tsv(scan);
    } else {
        AuditReport report;
        if (theorem == "t1") {
            report = audit_theorem1(a, lam, horizon);
        } else if (theorem == "t2") {
            report = audit_theorem2_bound(a, lam, reg.given("N") ? f.n : 0, horizon);
        } else if (theorem == "t3") {
            report = audit_theorem3(a, lam, horizon);
        } else if (theorem == "t4") {
            const auto d = reg.given("d") ? f.d : static_cast<std::int64_t>(lam.degree());
            report = audit_theorem4_bound(a, lam, reg.given("M") ? f.m : 0, d, horizon);
        } else {
            throw ParameterError("unknown theorem '" + theorem + "'");
        }
        report_json = json::dump(json::to_json(report));
        tsv = json::audit_tsv(report);
        const bool extras = std::all_of(report.extra_checks.begin(), report.extra_checks.end(),
                                        [](const auto& b) { return b.holds(); });
        code = report.holds && extras ? kOk : kProxyViolated;
    }
    if (reg.given("out")) {
        io::write_file(f.out + ".json", report_json);
        io::write_file(f.out + ".tsv", tsv);
    } else {
        out << report_json;
    }
    return code;
}

// -- replay -------------------------------------------------------------

int cmd_replay(const std::string& manifest_path, const Flags& f, const Registered& reg,
               std::ostream& out, std::ostream& err) {
    const auto manifest = Json::parse(io::read_file(manifest_path), nullptr, false);
    if (manifest.is_discarded() || !manifest.contains("argv") || !manifest.contains("output_files")) {
        throw ParseError("not a run manifest: " + manifest_path, 0);
    }
    for (const auto& entry : manifest["input_files"]) {
        const fs::path path = entry["path"].get<std::string>();
        if (io::sha256_hex(io::read_file(path)) != entry["sha256"].get<std::string>()) {
            throw ParameterError("input file changed since the run: " + path.string());
        }
    }
    std::vector<std::string> args = manifest["argv"].get<std::vector<std::string>>();
    std::string prefix;
    for (const auto& entry : manifest["output_files"]) {
        if (entry["role"] == "set") {
            prefix = entry["path"].get<std::string>();
        }
    }
    if (reg.given("out")) {
        prefix = f.out;
    }
    args.push_back("--out");
    args.push_back(prefix);
    const int code = run(args, out, err);
    if (code != kOk) {
        return code;
    }
    bool identical = true;
    for (const auto& entry : manifest["output_files"]) {
        const auto role = entry["role"].get<std::string>();
        const fs::path path = role == "set" ? fs::path(prefix) : fs::path(prefix + ".report.json");
        const auto digest = io::sha256_hex(io::read_file(path));
        const bool same = digest == entry["sha256"].get<std::string>();
        out << role << '\t' << path.string() << '\t' << (same ? "identical" : "DIFFERS") << '\n';
        identical = identical && same;
    }
    return identical ? kOk : kProxyViolated;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact additive representation functions: sets, constructions and audits",
                 "addrep"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    Flags f;
    std::string kind, what, theorem, input, manifest_path;

    Registered gen_reg, ana_reg, aud_reg, rep_reg;
    auto* gen = app.add_subcommand("generate", "build a set and its construction report");
    gen->add_option("kind", kind, "greedy-sidon | algebraic-sidon | theorem2 | lemma1 | theorem4")
        ->required();
    add_common(*gen, f, gen_reg,
               {"count", "p", "sidon", "N", "d", "M", "lambda", "seed", "max-trials", "out"});

    auto* ana = app.add_subcommand("analyze", "tabulate a quantity as a TSV series");
    ana->add_option("what", what, "rep | delta | blocks | weighted-blocks | weighted-rep")->required();
    ana->add_option("input", input, "set file (series file for delta)")->required();
    add_common(*ana, f, ana_reg, {"k", "l", "horizon", "lambda", "out"});

    auto* aud = app.add_subcommand("audit", "finite-window proxy of a theorem inequality");
    aud->add_option("theorem", theorem, "t1 | t2 | t3 | t4 | p1-scan")->required();
    aud->add_option("input", input, "set file")->required();
    add_common(*aud, f, aud_reg, {"lambda", "horizon", "N", "M", "d", "theta", "out"});

    auto* rep = app.add_subcommand("replay", "re-run a manifest and compare output hashes");
    rep->add_option("manifest", manifest_path, "manifest JSON written by generate")->required();
    add_common(*rep, f, rep_reg, {"out"});

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForVersion&) {
        out << kToolVersion << '\n';
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kBadInput;
    }

    try {
        if (gen->parsed()) {
            // Manifest argv: everything except the output location.
            std::vector<std::string> argv;
            for (std::size_t i = 0; i < args.size(); ++i) {
                if (args[i] == "--out") {
                    ++i;
                    continue;
                }
                if (args[i].starts_with("--out=")) {
                    continue;
                }
                argv.push_back(args[i]);
            }
            return cmd_generate(kind, f, gen_reg, argv, err);
        }
        if (ana->parsed()) {
            return cmd_analyze(what, input, f, ana_reg, out);
        }
        if (aud->parsed()) {
            return cmd_audit(theorem, input, f, aud_reg, out);
        }
        return cmd_replay(manifest_path, f, rep_reg, out, err);
    } catch (const SamplingFailure& e) {
        err << "sampling failure: " << e.what() << '\n';
        return kSamplingFailure;
    } catch (const ParseError& e) {
        err << "input error: " << e.what() << '\n';
        return kBadInput;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kBadInput;
    }
}

} // namespace addrep::cli
