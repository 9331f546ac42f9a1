// mgraph: build M(t), count its spanning trees, verify the cross-checks and
// report structural statistics.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 resource limit, 4 counting methods disagree.

#include "mgraph/analysis.hpp"
#include "mgraph/error.hpp"
#include "mgraph/exact_count.hpp"
#include "mgraph/graph.hpp"
#include "mgraph/kirchhoff.hpp"
#include "mgraph/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace mgraph;

enum ExitCode : int {
    kOk = 0,
    kVerifyFailed = 1,
    kUsage = 2,
    kResourceLimit = 3,
    kDisagreement = 4,
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Limits {
    unsigned build = kDefaultMaxBuildLevel;
    unsigned materialize = kDefaultMaterializeLimit;
    unsigned exact_kirchhoff = 8;
    unsigned modular_kirchhoff = 11;
};

// MGRAPH_MAX_T raises (or lowers) every level limit at once.
Limits limits_from_env() {
    Limits lim;
    if (const char* env = std::getenv("MGRAPH_MAX_T"); env != nullptr && *env != '\0') {
        unsigned value = 0;
        try {
            std::size_t used = 0;
            const unsigned long parsed = std::stoul(env, &used);
            if (used != std::string(env).size() || parsed > 62) throw std::invalid_argument(env);
            value = static_cast<unsigned>(parsed);
        } catch (const std::exception&) {
            throw UsageError(std::string("MGRAPH_MAX_T must be an integer in [0, 62], got '") + env + "'");
        }
        lim = {value, value, value, value};
    }
    return lim;
}

struct RunConfig {
    unsigned t = 0;
    std::optional<unsigned> t_max;
    std::string method = "recurrence";
    std::string format;
    unsigned precision = 30;
    std::optional<std::uint64_t> modulus;
    std::string out;
    bool digits_only = false;
    bool compare = false;
    bool inject_fault = false;
};

class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw UsageError("cannot open output file " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }
    bool to_file() const { return file_.is_open(); }

private:
    std::ofstream file_;
};

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed) {
        if (format == a) return;
    }
    throw UsageError("format '" + format + "' is not supported by this subcommand");
}

int cmd_build(const RunConfig& cfg, const Limits& lim) {
    const std::string format = cfg.format.empty() ? "text" : cfg.format;
    require_format(format, {"text", "edgelist", "edge-list", "dot", "json"});
    const MGraph g = build(cfg.t, lim.build);
    std::ostringstream summary;
    summary << "V=" << g.num_vertices() << " E=" << g.num_edges() << "\n";
    Output out(cfg.out);
    if (format == "text") {
        out.stream() << summary.str();
        return kOk;
    }
    out.stream() << export_graph(g, parse_export_format(format));
    (out.to_file() ? std::cout : std::cerr) << summary.str();
    return kOk;
}

int cmd_count(const RunConfig& cfg, const Limits& lim) {
    const std::string format = cfg.format.empty() ? "text" : cfg.format;
    require_format(format, {"text", "json"});
    const std::vector<std::string> known{"recurrence", "closed-form", "kirchhoff"};
    std::vector<std::string> methods;
    if (cfg.method == "all") {
        methods = known;
    } else if (std::find(known.begin(), known.end(), cfg.method) != known.end()) {
        methods = {cfg.method};
    } else {
        throw UsageError("unknown method '" + cfg.method + "'");
    }
    if (cfg.modulus && !is_prime(*cfg.modulus)) {
        throw UsageError("modulus " + std::to_string(*cfg.modulus) + " is not prime");
    }
    const unsigned t = cfg.t;
    const bool explicit_method = cfg.method != "all";
    const bool materializable = t <= lim.materialize;

    // method -> decimal value (or residue)
    std::vector<std::pair<std::string, std::string>> values;
    std::vector<std::string> skipped;
    for (const std::string& m : methods) {
        if (m == "recurrence") {
            if (cfg.modulus) {
                values.emplace_back(m, std::to_string(s_recurrence_mod(t, *cfg.modulus)));
            } else if (materializable && !cfg.digits_only) {
                values.emplace_back(m, to_decimal(s_recurrence(t, lim.materialize)));
            } else {
                skipped.push_back(m);
            }
        } else if (m == "closed-form") {
            if (t == 0) {
                skipped.push_back(m);
                continue;
            }
            if (!materializable || cfg.digits_only) {
                if (explicit_method && !cfg.digits_only) {
                    throw ResourceLimitError("closed-form product needs t <= " + std::to_string(lim.materialize));
                }
                skipped.push_back(m);
                continue;
            }
            BigInt s = s_theorem1(t, lim.materialize);
            if (cfg.modulus) {
                s %= BigInt(static_cast<unsigned long>(*cfg.modulus));
            }
            values.emplace_back(m, to_decimal(s));
        } else {
            const unsigned cap = cfg.modulus ? lim.modular_kirchhoff : lim.exact_kirchhoff;
            if (t > cap || cfg.digits_only) {
                if (explicit_method && !cfg.digits_only) {
                    throw ResourceLimitError("kirchhoff determinant needs t <= " + std::to_string(cap) +
                                             (cfg.modulus ? " with --modulus" : ""));
                }
                skipped.push_back(m);
                continue;
            }
            const MGraph g = build(t, lim.build);
            values.emplace_back(m, cfg.modulus ? std::to_string(count_trees_mod(g, *cfg.modulus))
                                               : to_decimal(count_trees(g)));
        }
    }

    bool agree = true;
    for (const auto& [m, v] : values) agree = agree && v == values.front().second;

    // Digit count of s(t): exact when materialized, otherwise from the log-sum.
    std::string digits;
    bool digits_estimated = false;
    if (!cfg.modulus) {
        if (!values.empty()) {
            digits = std::to_string(values.front().second.size());
        } else if (t == 0) {
            digits = "1";
        } else {
            digits = to_decimal(entropy(t, std::max(cfg.precision, 10U)).digits);
            digits_estimated = !materializable;
        }
    }

    Output out(cfg.out);
    if (format == "json") {
        nlohmann::ordered_json j;
        j["t"] = t;
        j["modulus"] = cfg.modulus ? nlohmann::ordered_json(*cfg.modulus) : nlohmann::ordered_json(nullptr);
        auto& mj = j["methods"] = nlohmann::ordered_json::object();
        for (const auto& [m, v] : values) mj[m] = v;
        j["skipped"] = skipped;
        j["agree"] = agree;
        j["value"] = values.empty() || !agree ? nlohmann::ordered_json(nullptr)
                                              : nlohmann::ordered_json(values.front().second);
        j["digits"] = digits.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(digits);
        j["digits_from_log_sum"] = digits_estimated;
        out.stream() << j.dump(2) << "\n";
    } else if (!agree) {
        for (const auto& [m, v] : values) std::cerr << m << "=" << v << "\n";
    } else if (values.empty()) {
        out.stream() << "digits=" << digits;
        if (digits_estimated) {
            out.stream() << " (log-sum estimate; s(t) is not materialized beyond t=" << lim.materialize << ")";
        }
        out.stream() << "\n";
    } else {
        out.stream() << values.front().second << "\n";
        if (values.size() > 1) {
            out.stream() << "agree:";
            for (const auto& [m, v] : values) out.stream() << " " << m;
            out.stream() << "\n";
        }
    }
    if (!agree) {
        std::cerr << "mgraph: counting methods disagree for t=" << t << "\n";
        return kDisagreement;
    }
    return kOk;
}

int cmd_verify(const RunConfig& cfg) {
    const std::string format = cfg.format.empty() ? "json" : cfg.format;
    require_format(format, {"text", "json"});
    VerifyOptions opt;
    opt.t_max = cfg.t_max.value_or(6);
    opt.inject_fault = cfg.inject_fault;
    const auto results = run_verification(opt);
    Output out(cfg.out);
    if (format == "json") {
        out.stream() << verification_json(opt, results);
    } else {
        for (const CheckResult& r : results) {
            out.stream() << (r.passed ? "PASS " : "FAIL ") << r.id << ": " << r.detail << "\n";
        }
    }
    return all_passed(results) ? kOk : kVerifyFailed;
}

std::string text_report(const AnalysisReport& r) {
    std::ostringstream os;
    os << "t: " << r.t << "\n";
    os << "vertices: " << r.vertices << "\n";
    os << "edges: " << r.edges << "\n";
    os << "average_degree: " << to_string(r.average_degree) << "\n";
    os << "degree_histogram:";
    for (const auto& [d, c] : r.degree_histogram) os << " " << d << ":" << c;
    os << "\n";
    os << "cumulative_law_ok: " << (r.cumulative_law_ok ? "true" : "false") << "\n";
    os << "triangle_count: " << r.triangle_count << "\n";
    os << "diameter: " << r.diameter << (r.distances_estimated ? " (sampled lower bound)" : "") << "\n";
    os << "avg_distance: " << to_string(r.avg_distance) << (r.distances_estimated ? " (sampled)" : "") << "\n";
    os << "assortativity_r: ";
    if (r.assortativity_defined) {
        os << std::setprecision(12) << r.assortativity_r;
    } else {
        os << "undefined";
    }
    os << "\n";
    os << "outerplanar_certified: " << (r.outerplanar_certified ? "true" : "false") << "\n";
    os << "entropy_h_t: " << (r.entropy_h_t.empty() ? "undefined" : r.entropy_h_t) << "\n";
    return os.str();
}

int cmd_analyze(const RunConfig& cfg, const Limits& lim) {
    const std::string format = cfg.format.empty() ? "json" : cfg.format;
    require_format(format, {"text", "json", "csv"});
    std::vector<AnalysisReport> reports;
    const unsigned first = cfg.t_max ? 0 : cfg.t;
    const unsigned last = cfg.t_max.value_or(cfg.t);
    for (unsigned t = first; t <= last; ++t) reports.push_back(analyze(build(t, lim.build)));

    Output out(cfg.out);
    if (format == "json") {
        out.stream() << (cfg.t_max ? to_json(reports) : to_json(reports.front()));
    } else if (format == "csv") {
        out.stream() << csv_header();
        for (const auto& r : reports) out.stream() << to_csv_row(r);
    } else {
        for (std::size_t i = 0; i < reports.size(); ++i) {
            if (i) out.stream() << "\n";
            out.stream() << text_report(reports[i]);
        }
    }
    return kOk;
}

int cmd_entropy(const RunConfig& cfg) {
    const std::string format = cfg.format.empty() ? "text" : cfg.format;
    require_format(format, {"text", "json"});
    if (cfg.t < 1) throw UsageError("entropy needs --t >= 1");
    if (cfg.precision < 10) throw UsageError("--precision must be at least 10");
    const EntropyEstimate est = entropy(cfg.t, cfg.precision);
    std::vector<EntropyRow> table;
    if (cfg.compare) table = entropy_table();

    Output out(cfg.out);
    if (format == "json") {
        nlohmann::ordered_json j;
        j["t"] = cfg.t;
        j["precision"] = cfg.precision;
        j["h_t"] = est.h_t.to_fixed(cfg.precision);
        j["tail_bound"] = entropy_tail_bound(cfg.t);
        j["digits"] = to_decimal(est.digits);
        if (cfg.compare) {
            auto& rows = j["compare"] = nlohmann::ordered_json::array();
            for (const auto& r : table) {
                rows.push_back({{"family", r.family}, {"entropy", r.value}, {"source", r.source},
                                {"computed", r.computed}});
            }
        }
        out.stream() << j.dump(2) << "\n";
        return kOk;
    }
    out.stream() << "h_" << cfg.t << " = " << est.h_t.to_fixed(cfg.precision) << "\n";
    out.stream() << "digits(s(" << cfg.t << ")) = " << to_decimal(est.digits) << "\n";
    if (cfg.compare) {
        out.stream() << "\n" << std::left << std::setw(32) << "family" << std::setw(9) << "entropy"
                     << "source\n";
        for (const auto& r : table) {
            out.stream() << std::left << std::setw(32) << r.family << std::setw(9) << r.value << r.source << "\n";
        }
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spanning trees and structure of the self-similar outerplanar family M(t)", "mgraph"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_out = [&](CLI::App* sub) { sub->add_option("--out", cfg.out, "Write the result to this file"); };

    auto* build_cmd = app.add_subcommand("build", "Construct M(t) and export it");
    build_cmd->add_option("--t", cfg.t, "Iteration level")->required();
    build_cmd->add_option("--format", cfg.format, "text | edgelist | dot | json");
    add_out(build_cmd);

    auto* count_cmd = app.add_subcommand("count", "Count the spanning trees of M(t)");
    count_cmd->add_option("--t", cfg.t, "Iteration level")->required();
    count_cmd->add_option("--method", cfg.method, "recurrence | closed-form | kirchhoff | all");
    count_cmd->add_option("--modulus", cfg.modulus, "Report s(t) modulo this prime");
    count_cmd->add_flag("--digits-only", cfg.digits_only, "Print only the decimal digit count of s(t)");
    count_cmd->add_option("--precision", cfg.precision, "Working decimal digits for the log-sum");
    count_cmd->add_option("--format", cfg.format, "text | json");
    add_out(count_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "Run every cross-check up to t-max");
    verify_cmd->add_option("--t-max", cfg.t_max, "Largest level to check (default 6)");
    verify_cmd->add_option("--format", cfg.format, "json | text");
    verify_cmd->add_flag("--inject-fault", cfg.inject_fault, "Remove one edge from every graph (negative control)");
    add_out(verify_cmd);

    auto* analyze_cmd = app.add_subcommand("analyze", "Structural statistics of M(t)");
    auto* t_opt = analyze_cmd->add_option("--t", cfg.t, "Iteration level");
    auto* tmax_opt = analyze_cmd->add_option("--t-max", cfg.t_max, "Report every level 0..t-max");
    t_opt->excludes(tmax_opt);
    analyze_cmd->add_option("--format", cfg.format, "json | csv | text");
    add_out(analyze_cmd);

    auto* entropy_cmd = app.add_subcommand("entropy", "Spanning-tree entropy estimate h_t");
    entropy_cmd->add_option("--t", cfg.t, "Iteration level")->required();
    entropy_cmd->add_option("--precision", cfg.precision, "Decimal digits of h_t");
    entropy_cmd->add_flag("--compare", cfg.compare, "Also print the comparison with other families");
    entropy_cmd->add_option("--format", cfg.format, "text | json");
    add_out(entropy_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        const Limits lim = limits_from_env();
        if (app.got_subcommand(build_cmd)) return cmd_build(cfg, lim);
        if (app.got_subcommand(count_cmd)) return cmd_count(cfg, lim);
        if (app.got_subcommand(verify_cmd)) return cmd_verify(cfg);
        if (app.got_subcommand(analyze_cmd)) {
            if (t_opt->count() == 0 && tmax_opt->count() == 0) throw UsageError("analyze needs --t or --t-max");
            return cmd_analyze(cfg, lim);
        }
        if (app.got_subcommand(entropy_cmd)) return cmd_entropy(cfg);
    } catch (const UsageError& e) {
        std::cerr << "mgraph: " << e.what() << "\n";
        return kUsage;
    } catch (const ResourceLimitError& e) {
        std::cerr << "mgraph: " << e.what() << "\n";
        return kResourceLimit;
    } catch (const std::bad_alloc&) {
        std::cerr << "mgraph: out of memory for this level\n";
        return kResourceLimit;
    } catch (const std::invalid_argument& e) {
        std::cerr << "mgraph: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
