// circulant: exact and numerical resistance, Kirchhoff, and random-walk
// statistics for circulant graphs.
//
// Subcommands: resist, walk, kirchhoff, verify, sweep. Exit codes: 0 on
// success, 1 on usage or input errors, 2 when a verification check fails.

#include <CLI11.hpp>
#include <json.hpp>

#include <circulant/circulant.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace {

using circulant::BigRational;
using circulant::CheckResult;
using circulant::CirculantSpec;
using circulant::VerificationReport;

constexpr std::uint64_t kDefaultSeed = 42; // fixed documented default
constexpr double kCrossCheckTolerance = 1e-9;

enum class Mode { kAuto, kExact, kFloat };

Mode parse_mode(const std::string& text) {
    if (text == "auto") return Mode::kAuto;
    if (text == "exact") return Mode::kExact;
    if (text == "float") return Mode::kFloat;
    throw circulant::DomainError("unknown mode: " + text);
}

std::vector<int> parse_jumps(const std::string& text) {
    std::vector<int> jumps;
    std::stringstream stream(text);
    std::string token;
    while (std::getline(stream, token, ',')) {
        const auto first = token.find_first_not_of(" \t");
        const auto last = token.find_last_not_of(" \t");
        if (first == std::string::npos) {
            throw circulant::DomainError("empty entry in jump list: " + text);
        }
        token = token.substr(first, last - first + 1);
        try {
            std::size_t used = 0;
            const int value = std::stoi(token, &used);
            if (used != token.size()) throw std::invalid_argument(token);
            jumps.push_back(value);
        } catch (const std::exception&) {
            throw circulant::DomainError("invalid jump value: " + token);
        }
    }
    if (jumps.empty()) throw circulant::DomainError("jump list is empty");
    return jumps;
}

std::pair<int, int> parse_range(const std::string& text) {
    const auto sep = text.find("..");
    try {
        if (sep == std::string::npos) {
            const int n = std::stoi(text);
            return {n, n};
        }
        const int lo = std::stoi(text.substr(0, sep));
        const int hi = std::stoi(text.substr(sep + 2));
        if (lo > hi) throw circulant::DomainError("empty range: " + text);
        return {lo, hi};
    } catch (const circulant::Error&) {
        throw;
    } catch (const std::exception&) {
        throw circulant::DomainError("invalid range (expected A..B): " + text);
    }
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw circulant::DomainError("cannot open output path: " + path);
    out << content;
    out.flush();
    if (!out) throw circulant::DomainError("failed while writing output path: " + path);
}

// Closed forms exist for the cycle, for jumps {1,2}, and for jumps {2}.
bool exact_capable(int n, const std::vector<int>& jumps) {
    if (jumps == std::vector<int>{1}) return n >= 3;
    if (jumps == std::vector<int>{1, 2}) return n >= 5;
    if (jumps == std::vector<int>{2}) return n >= 5;
    return false;
}

Mode effective_mode(Mode requested, int n, const std::vector<int>& jumps) {
    if (requested == Mode::kAuto) {
        return exact_capable(n, jumps) ? Mode::kExact : Mode::kFloat;
    }
    if (requested == Mode::kExact && !exact_capable(n, jumps)) {
        throw circulant::DomainError("no exact closed form for jumps on this graph; use --mode float");
    }
    return requested;
}

// Exact resistance rendered as a reduced fraction, or "unreachable" for the
// split C_N(2) case.
std::string exact_resistance_string(int n, const std::vector<int>& jumps, int l) {
    if (jumps == std::vector<int>{1, 2}) return circulant::to_string(circulant::c12_resistance(n, l));
    if (jumps == std::vector<int>{1}) return circulant::to_string(circulant::cycle_resistance(n, l));
    const circulant::C2Resistance r = circulant::c2_resistance(n, l);
    return r.unreachable() ? std::string("unreachable") : circulant::to_string(*r.value);
}

nlohmann::json check_to_json(const CheckResult& check) {
    return nlohmann::json{{"name", check.name}, {"residual", check.residual}, {"pass", check.pass}};
}

nlohmann::json graph_to_json(int n, const std::vector<int>& jumps) {
    return nlohmann::json{{"n", n}, {"jumps", jumps}};
}

nlohmann::json report_object(int n, const std::vector<int>& jumps, nlohmann::json results,
                             const std::vector<CheckResult>& checks) {
    nlohmann::json check_array = nlohmann::json::array();
    for (const CheckResult& c : checks) check_array.push_back(check_to_json(c));
    return nlohmann::json{
        {"graph", graph_to_json(n, jumps)},
        {"results", std::move(results)},
        {"checks", std::move(check_array)},
    };
}

std::string render_check_line(const CheckResult& check) {
    std::string line = check.pass ? "PASS " : "FAIL ";
    line += check.name;
    line += " residual=" + circulant::format_double(check.residual);
    line += " lhs=" + circulant::format_double(check.lhs);
    line += " rhs=" + circulant::format_double(check.rhs);
    return line;
}

CheckResult tagged(CheckResult check, int n) {
    check.name += " n=" + std::to_string(n);
    return check;
}

// ---------------------------------------------------------------------------
// resist

struct ResistArgs {
    int n = 0;
    std::string jumps_text = "1,2";
    int l = -1; // -1 means full profile
    std::string mode_text = "auto";
    std::string format_text = "text";
    std::string output_path;
};

int run_resist(const ResistArgs& args) {
    const std::vector<int> jumps = parse_jumps(args.jumps_text);
    const CirculantSpec spec(args.n, jumps);
    const Mode mode = effective_mode(parse_mode(args.mode_text), args.n, jumps);

    std::vector<int> offsets;
    if (args.l >= 0) {
        offsets.push_back(args.l);
    } else {
        for (int l = 1; l < args.n; ++l) offsets.push_back(l);
    }

    std::vector<std::string> exact_values;
    std::vector<double> float_values;
    std::vector<CheckResult> checks;
    if (mode == Mode::kExact) {
        for (int l : offsets) exact_values.push_back(exact_resistance_string(args.n, jumps, l));
        // Cross-check the exact route against the spectral sum wherever the
        // graph is connected; disagreement beyond tolerance is an internal
        // error, reported with exit code 2.
        if (spec.connected()) {
            for (std::size_t i = 0; i < offsets.size(); ++i) {
                const int l = offsets[i];
                if (l == 0) continue;
                const double exact_val =
                    circulant::to_double(circulant::parse_rational(exact_values[i]));
                checks.push_back(circulant::make_check_relative(
                    "exact-vs-spectral l=" + std::to_string(l), exact_val,
                    circulant::resistance_spectral(spec, l), kCrossCheckTolerance));
            }
        }
    } else {
        for (int l : offsets) float_values.push_back(circulant::resistance_spectral(spec, l));
    }

    std::string text;
    nlohmann::json resistance = nlohmann::json::object();
    for (std::size_t i = 0; i < offsets.size(); ++i) {
        const std::string key = std::to_string(offsets[i]);
        std::string rendered;
        if (mode == Mode::kExact) {
            rendered = exact_values[i];
            resistance[key] = exact_values[i];
        } else {
            rendered = circulant::format_double(float_values[i]);
            resistance[key] = float_values[i];
        }
        if (offsets.size() == 1) {
            text = rendered + "\n";
        } else {
            text += key + " " + rendered + "\n";
        }
    }

    if (args.format_text == "json") {
        nlohmann::json results{{"mode", mode == Mode::kExact ? "exact" : "float"},
                               {"resistance", std::move(resistance)}};
        write_output(args.output_path,
                     circulant::canonical_json(report_object(args.n, jumps, std::move(results), checks)) + "\n");
    } else if (args.format_text == "text") {
        write_output(args.output_path, text);
    } else {
        throw circulant::DomainError("csv format is only available for sweep");
    }

    for (const CheckResult& c : checks) {
        if (!c.pass) {
            std::cerr << "internal cross-check failed: " << render_check_line(c) << "\n";
            return 2;
        }
    }
    return 0;
}

// ---------------------------------------------------------------------------
// walk

struct WalkArgs {
    int n = 0;
    std::string jumps_text = "1,2";
    int l = -1;
    bool mfpt = false;
    std::int64_t trials = 0;
    std::uint64_t seed = kDefaultSeed;
    std::string mode_text = "auto";
    std::string format_text = "text";
    std::string output_path;
};

int run_walk(const WalkArgs& args) {
    const std::vector<int> jumps = parse_jumps(args.jumps_text);
    const CirculantSpec spec(args.n, jumps);
    const bool closed_capable = jumps == std::vector<int>{1, 2} && args.n >= 5;
    const Mode requested = parse_mode(args.mode_text);
    Mode mode;
    if (requested == Mode::kAuto) {
        mode = closed_capable ? Mode::kExact : Mode::kFloat;
    } else if (requested == Mode::kExact && !closed_capable) {
        throw circulant::DomainError("exact walk statistics exist for jumps 1,2 only; use --mode float");
    } else {
        mode = requested;
    }

    std::vector<CheckResult> checks;
    std::string text;
    nlohmann::json results{{"mode", mode == Mode::kExact ? "exact" : "float"}};

    if (args.mfpt) {
        if (mode == Mode::kExact) {
            const BigRational value = circulant::mfpt_closed(args.n);
            checks.push_back(circulant::make_check_relative(
                "mfpt-exact-vs-eigentime", circulant::to_double(value),
                circulant::eigentime_mfpt(spec), kCrossCheckTolerance));
            text = circulant::to_string(value) + "\n";
            results["mfpt"] = circulant::to_string(value);
        } else {
            const double value = circulant::mfpt_spectral(spec);
            text = circulant::format_double(value) + "\n";
            results["mfpt"] = value;
        }
    } else {
        if (args.l < 1 || args.l >= args.n) {
            throw circulant::DomainError("walk needs --l in [1, n-1] (or --mfpt)");
        }
        if (mode == Mode::kExact) {
            const BigRational fpt = circulant::fpt_closed(args.n, args.l);
            const BigRational com = circulant::commute_closed(args.n, args.l);
            checks.push_back(circulant::make_check_relative(
                "fpt-exact-vs-spectral l=" + std::to_string(args.l), circulant::to_double(fpt),
                circulant::fpt_general(spec, args.l), kCrossCheckTolerance));
            text += "fpt " + circulant::to_string(fpt) + "\n";
            text += "commute " + circulant::to_string(com) + "\n";
            results["fpt"] = circulant::to_string(fpt);
            results["commute"] = circulant::to_string(com);
        } else {
            const double fpt = circulant::fpt_general(spec, args.l);
            const double com = circulant::commute(spec, args.l);
            text += "fpt " + circulant::format_double(fpt) + "\n";
            text += "commute " + circulant::format_double(com) + "\n";
            results["fpt"] = fpt;
            results["commute"] = com;
        }
        if (args.trials > 0) {
            const circulant::McEstimate est =
                circulant::simulate_fpt(spec, args.l, args.trials, args.seed);
            text += "mc_mean " + circulant::format_double(est.mean) + "\n";
            text += "mc_std_error " + circulant::format_double(est.std_error) + "\n";
            text += "mc_trials " + std::to_string(est.trials) + "\n";
            text += "mc_seed " + std::to_string(est.seed) + "\n";
            results["mc"] = nlohmann::json{{"mean", est.mean},
                                           {"std_error", est.std_error},
                                           {"trials", est.trials},
                                           {"seed", est.seed}};
        }
    }

    if (args.format_text == "json") {
        write_output(args.output_path,
                     circulant::canonical_json(report_object(args.n, jumps, std::move(results), checks)) + "\n");
    } else if (args.format_text == "text") {
        write_output(args.output_path, text);
    } else {
        throw circulant::DomainError("csv format is only available for sweep");
    }

    for (const CheckResult& c : checks) {
        if (!c.pass) {
            std::cerr << "internal cross-check failed: " << render_check_line(c) << "\n";
            return 2;
        }
    }
    return 0;
}

// ---------------------------------------------------------------------------
// kirchhoff

struct KirchhoffArgs {
    int n = 0;
    std::string jumps_text = "1,2";
    std::string mode_text = "auto";
    std::string format_text = "text";
    std::string output_path;
};

int run_kirchhoff(const KirchhoffArgs& args) {
    const std::vector<int> jumps = parse_jumps(args.jumps_text);
    const CirculantSpec spec(args.n, jumps);
    const bool closed_capable = jumps == std::vector<int>{1, 2} && args.n >= 5;
    const Mode requested = parse_mode(args.mode_text);
    Mode mode;
    if (requested == Mode::kAuto) {
        mode = closed_capable ? Mode::kExact : Mode::kFloat;
    } else if (requested == Mode::kExact && !closed_capable) {
        throw circulant::DomainError("exact Kirchhoff index exists for jumps 1,2 only; use --mode float");
    } else {
        mode = requested;
    }

    std::vector<CheckResult> checks;
    std::string text;
    nlohmann::json results{{"mode", mode == Mode::kExact ? "exact" : "float"}};
    if (mode == Mode::kExact) {
        const BigRational value = circulant::c12_kirchhoff(args.n);
        checks.push_back(circulant::make_check_relative(
            "kirchhoff-exact-vs-spectral", circulant::to_double(value),
            circulant::kirchhoff_spectral(spec), kCrossCheckTolerance));
        text = circulant::to_string(value) + "\n";
        results["kirchhoff"] = circulant::to_string(value);
    } else {
        const double value = circulant::kirchhoff_spectral(spec);
        text = circulant::format_double(value) + "\n";
        results["kirchhoff"] = value;
    }

    if (args.format_text == "json") {
        write_output(args.output_path,
                     circulant::canonical_json(report_object(args.n, jumps, std::move(results), checks)) + "\n");
    } else if (args.format_text == "text") {
        write_output(args.output_path, text);
    } else {
        throw circulant::DomainError("csv format is only available for sweep");
    }

    for (const CheckResult& c : checks) {
        if (!c.pass) {
            std::cerr << "internal cross-check failed: " << render_check_line(c) << "\n";
            return 2;
        }
    }
    return 0;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
    std::string range_text;
    std::string check = "all";
    std::string format_text = "text";
    std::string output_path;
};

bool check_selected(const std::string& selected, const std::string& group) {
    if (selected == "all") return true;
    if (selected == "identities") return group == "trig" || group == "symmetry";
    return selected == group;
}

VerificationReport verify_one(int n, const std::string& selected) {
    VerificationReport report;
    if (check_selected(selected, "trig") && n >= 2) {
        report.add(tagged(circulant::check_inverse_sin_sum(n), n));
        report.add(tagged(circulant::check_inverse_cos_sum(n), n));
    }
    if (check_selected(selected, "schwatt") && n >= 2) {
        report.add(tagged(circulant::check_trig_power_sum(n, std::min(3 * n, 36)), n));
    }
    if (check_selected(selected, "symmetry") && n >= 5) {
        report.add(tagged(circulant::check_fib_symmetry(n), n));
        report.add(tagged(circulant::check_c12_symmetry(n), n));
        if (n % 2 != 0) report.add(tagged(circulant::check_c2_symmetry(n), n));
    }
    if (check_selected(selected, "recursion") && n >= 5) {
        report.add(tagged(circulant::check_c12_recursion(n), n));
        if (n % 2 != 0) report.add(tagged(circulant::check_c2_recursion(n), n));
    }
    if (check_selected(selected, "foster") && n >= 5) {
        report.add(tagged(circulant::check_foster_exact(n), n));
        if (n <= 60) report.merge(circulant::foster_audit(CirculantSpec(n, {1, 2})));
    }
    if (check_selected(selected, "hitting") && n >= 7) {
        report.add(tagged(circulant::check_hitting_relation(n), n));
    }
    if (check_selected(selected, "kirchhoff") && n >= 5) {
        report.add(tagged(circulant::check_kirchhoff_profile_sum(n), n));
        report.add(tagged(circulant::check_mfpt_mean_fpt(n), n));
        report.add(tagged(circulant::check_mfpt_eigentime(n), n));
    }
    if (check_selected(selected, "equivalence") && n >= 3) {
        report.merge(circulant::equivalence_sweep(n, n, {{1}, {2}, {1, 2}}));
    }
    return report;
}

int run_verify(const VerifyArgs& args) {
    const auto [lo, hi] = parse_range(args.range_text);
    if (lo < 2) throw circulant::DomainError("verify needs n >= 2");

    std::string text;
    nlohmann::json objects = nlohmann::json::array();
    VerificationReport combined;
    std::size_t passed = 0;
    for (int n = lo; n <= hi; ++n) {
        const VerificationReport report = verify_one(n, args.check);
        for (const CheckResult& c : report.checks()) {
            text += render_check_line(c) + "\n";
            if (c.pass) ++passed;
        }
        nlohmann::json results{{"checks_run", report.size()},
                               {"all_pass", report.all_pass()},
                               {"worst_residual", report.worst_residual()}};
        objects.push_back(report_object(n, {1, 2}, std::move(results), report.checks()));
        combined.merge(report);
    }
    if (combined.empty()) {
        throw circulant::DomainError("no checks applicable to this range (try a larger n)");
    }
    text += std::to_string(passed) + "/" + std::to_string(combined.size()) + " checks passed\n";

    if (args.format_text == "json") {
        const nlohmann::json& payload = objects.size() == 1 ? objects.front() : objects;
        write_output(args.output_path, circulant::canonical_json(payload) + "\n");
    } else if (args.format_text == "text") {
        write_output(args.output_path, text);
    } else {
        throw circulant::DomainError("csv format is only available for sweep");
    }
    return circulant::exit_code_for(combined);
}

// ---------------------------------------------------------------------------
// sweep

struct SweepArgs {
    std::string range_text;
    std::string jumps_text = "1,2";
    std::string format_text = "csv";
    std::string output_path;
};

int run_sweep(const SweepArgs& args) {
    const auto [lo, hi] = parse_range(args.range_text);
    const std::vector<int> jumps = parse_jumps(args.jumps_text);
    const bool c12 = jumps == std::vector<int>{1, 2};
    const bool cycle = jumps == std::vector<int>{1};
    if (!c12 && !cycle) {
        throw circulant::DomainError("sweep emits exact columns and supports jumps 1,2 or 1 only");
    }
    if (lo < (c12 ? 5 : 3)) {
        throw circulant::DomainError("sweep range starts below the smallest supported graph");
    }

    std::string csv = "n,l,resistance_exact,resistance_float,fpt_exact,kirchhoff_exact,mfpt_exact\n";
    nlohmann::json objects = nlohmann::json::array();
    for (int n = lo; n <= hi; ++n) {
        const CirculantSpec spec(n, jumps);
        BigRational kirchhoff;
        BigRational mfpt;
        circulant::ResistanceProfile profile;
        if (c12) {
            profile = circulant::c12_profile(n);
            kirchhoff = circulant::c12_kirchhoff(n);
            mfpt = circulant::mfpt_closed(n);
        } else {
            profile.n = n;
            for (int l = 1; l < n; ++l) profile.values.push_back(circulant::cycle_resistance(n, l));
            kirchhoff = BigRational(n, 2) * profile.sum();
            // MFPT = (d/N) R(G) with d = 2 for the cycle.
            mfpt = BigRational(2, n) * kirchhoff;
        }
        const std::string kirchhoff_str = circulant::to_string(kirchhoff);
        const std::string mfpt_str = circulant::to_string(mfpt);
        nlohmann::json rows = nlohmann::json::array();
        for (int l = 1; l < n; ++l) {
            const BigRational& exact = profile.at(l);
            const double numeric = circulant::resistance_spectral(spec, l);
            // H_{0,l} = |E| R(l), with the exact edge count of the spec.
            const BigRational fpt = BigRational(spec.edge_count()) * exact;
            const std::string exact_str = circulant::to_string(exact);
            const std::string fpt_str = circulant::to_string(fpt);
            csv += std::to_string(n) + "," + std::to_string(l) + "," + exact_str + "," +
                   circulant::format_double(numeric) + "," + fpt_str + "," + kirchhoff_str + "," +
                   mfpt_str + "\n";
            rows.push_back(nlohmann::json{{"n", n},
                                          {"l", l},
                                          {"resistance_exact", exact_str},
                                          {"resistance_float", numeric},
                                          {"fpt_exact", fpt_str},
                                          {"kirchhoff_exact", kirchhoff_str},
                                          {"mfpt_exact", mfpt_str}});
        }
        objects.push_back(report_object(n, jumps, nlohmann::json{{"rows", std::move(rows)}}, {}));
    }

    if (args.format_text == "json") {
        const nlohmann::json& payload = objects.size() == 1 ? objects.front() : objects;
        write_output(args.output_path, circulant::canonical_json(payload) + "\n");
    } else {
        // text and csv are the same tabular rendering for a sweep
        write_output(args.output_path, csv);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact and numerical resistance, Kirchhoff index, and random-walk\n"
                 "first-passage statistics for circulant graphs"};
    app.require_subcommand(1);
    app.fallthrough(); // let --config placed after a subcommand reach the top-level app
    app.set_config("--config", "", "key=value config file supplying defaults; flags override");

    const std::vector<std::string> modes{"auto", "exact", "float"};
    const std::vector<std::string> formats{"text", "json", "csv"};
    const std::vector<std::string> checks{"all",        "identities", "trig",   "schwatt",
                                          "symmetry",   "recursion",  "foster", "hitting",
                                          "kirchhoff",  "equivalence"};

    ResistArgs resist;
    CLI::App* resist_cmd = app.add_subcommand("resist", "two-point effective resistance");
    resist_cmd->add_option("--n", resist.n, "vertex count")->required();
    resist_cmd->add_option("--jumps", resist.jumps_text, "comma-separated jump list")
        ->capture_default_str();
    resist_cmd->add_option("--l", resist.l, "vertex offset (omit for the full profile)");
    resist_cmd->add_option("--mode", resist.mode_text, "exact | float | auto")
        ->check(CLI::IsMember(modes))
        ->capture_default_str();
    resist_cmd->add_option("--format", resist.format_text, "text | json")
        ->check(CLI::IsMember(formats))
        ->capture_default_str();
    resist_cmd->add_option("--output", resist.output_path, "write to file instead of stdout");

    WalkArgs walk;
    CLI::App* walk_cmd = app.add_subcommand("walk", "first-passage and commute times");
    walk_cmd->add_option("--n", walk.n, "vertex count")->required();
    walk_cmd->add_option("--jumps", walk.jumps_text, "comma-separated jump list")
        ->capture_default_str();
    walk_cmd->add_option("--l", walk.l, "walk target offset");
    walk_cmd->add_flag("--mfpt", walk.mfpt, "report the mean first-passage time instead");
    walk_cmd->add_option("--trials", walk.trials, "Monte Carlo trials (0 = closed form only)")
        ->capture_default_str();
    walk_cmd->add_option("--seed", walk.seed, "simulation seed (default 42)")
        ->capture_default_str();
    walk_cmd->add_option("--mode", walk.mode_text, "exact | float | auto")
        ->check(CLI::IsMember(modes))
        ->capture_default_str();
    walk_cmd->add_option("--format", walk.format_text, "text | json")
        ->check(CLI::IsMember(formats))
        ->capture_default_str();
    walk_cmd->add_option("--output", walk.output_path, "write to file instead of stdout");

    KirchhoffArgs kirchhoff;
    CLI::App* kirchhoff_cmd = app.add_subcommand("kirchhoff", "total effective resistance");
    kirchhoff_cmd->add_option("--n", kirchhoff.n, "vertex count")->required();
    kirchhoff_cmd->add_option("--jumps", kirchhoff.jumps_text, "comma-separated jump list")
        ->capture_default_str();
    kirchhoff_cmd->add_option("--mode", kirchhoff.mode_text, "exact | float | auto")
        ->check(CLI::IsMember(modes))
        ->capture_default_str();
    kirchhoff_cmd->add_option("--format", kirchhoff.format_text, "text | json")
        ->check(CLI::IsMember(formats))
        ->capture_default_str();
    kirchhoff_cmd->add_option("--output", kirchhoff.output_path, "write to file instead of stdout");

    VerifyArgs verify;
    CLI::App* verify_cmd = app.add_subcommand("verify", "run identity and equivalence checks");
    verify_cmd->add_option("--n-range", verify.range_text, "size range A..B (or a single N)")
        ->required();
    verify_cmd->add_option("--check", verify.check, "check group to run")
        ->check(CLI::IsMember(checks))
        ->capture_default_str();
    verify_cmd->add_option("--format", verify.format_text, "text | json")
        ->check(CLI::IsMember(formats))
        ->capture_default_str();
    verify_cmd->add_option("--output", verify.output_path, "write to file instead of stdout");

    SweepArgs sweep;
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "emit a plot-ready table over a size range");
    sweep_cmd->add_option("--n-range", sweep.range_text, "size range A..B (or a single N)")
        ->required();
    sweep_cmd->add_option("--jumps", sweep.jumps_text, "jump list: 1,2 or 1")
        ->capture_default_str();
    sweep_cmd->add_option("--format", sweep.format_text, "csv | json | text")
        ->check(CLI::IsMember(formats))
        ->capture_default_str();
    sweep_cmd->add_option("--output", sweep.output_path, "write to file instead of stdout");

    try {
        app.parse(argc, argv);
        if (resist_cmd->parsed()) return run_resist(resist);
        if (walk_cmd->parsed()) return run_walk(walk);
        if (kirchhoff_cmd->parsed()) return run_kirchhoff(kirchhoff);
        if (verify_cmd->parsed()) return run_verify(verify);
        if (sweep_cmd->parsed()) return run_sweep(sweep);
        return 1;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const circulant::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
