#include "regge3j/cli.hpp"

#include "regge3j/census.hpp"
#include "regge3j/classical.hpp"
#include "regge3j/flat.hpp"
#include "regge3j/regge.hpp"
#include "regge3j/super.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <functional>
#include <vector>

namespace regge3j {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ViolationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnbalancedSymbol : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Symbol3j read_symbol(const std::vector<std::string>& tokens)
{
    if (tokens.size() != 7 || tokens[3] != "/") {
        throw UsageError("expected a symbol as: j1 j2 j3 / m1 m2 m3");
    }
    for (std::size_t i = 0; i < 7; ++i) {
        if (i != 3 && !HalfInt::try_parse(tokens[i])) {
            throw UsageError("malformed half-integer '" + tokens[i] + "'");
        }
    }
    try {
        return parse_symbol(tokens);
    } catch (const std::invalid_argument& e) {
        throw UnbalancedSymbol(e.what());
    }
}

Json symbol_json(const Symbol3j& s)
{
    Json j;
    j["j"] = {s.j(0).to_string(), s.j(1).to_string(), s.j(2).to_string()};
    j["m"] = {s.m(0).to_string(), s.m(1).to_string(), s.m(2).to_string()};
    return j;
}

Json value_json(const SqrtRational& v) { return Json::parse(v.to_json()); }

void print_value(std::ostream& out, const SqrtRational& v, bool decimal)
{
    out << v.to_json() << '\n';
    if (decimal) {
        out << to_decimal(v) << '\n';
    }
}

Json orbit_json(const OrbitReport& o, std::string_view closure)
{
    Json j;
    j["closure"] = closure;
    j["classes"] = Json::array();
    for (const auto& c : o.classes) {
        j["classes"].push_back(symbol_json(c.canonical()));
    }
    j["n_empty"] = o.n_empty;
    return j;
}

std::optional<ClauseTable> parse_table(const std::string& text)
{
    if (text == "printed") {
        return ClauseTable::printed;
    }
    if (text == "amended") {
        return ClauseTable::amended;
    }
    return std::nullopt;
}

Json clause_names(const std::vector<ClauseMatch>& matches)
{
    Json names = Json::array();
    for (const auto& m : matches) {
        names.push_back(m.name);
    }
    return names;
}

void run_orbit(const Symbol3j& s, std::ostream& out)
{
    if (validate_classical(s) || validate_super(s)) {
        if (classify_parity(s).family == ParityFamily::beta) {
            out << orbit_json(beta_orbit(s), "beta").dump() << '\n';
        } else {
            out << orbit_json(orbit(s), "full").dump() << '\n';
        }
        return;
    }
    if (auto f = detect_flat_forbidden(s)) {
        out << orbit_json(flat_orbit(*f), "flat").dump() << '\n';
        return;
    }
    throw InvalidSymbol(s, validate_super(s));
}

void run_classify(const Symbol3j& s, ClauseTable table, std::ostream& out)
{
    Json j = symbol_json(s);
    j["parity"] = classify_parity(s).name();
    if (auto f = detect_flat_forbidden(s)) {
        const auto profile = flat_selector_profile(*f);
        j["family"] = "flat";
        j["selectors"] = Json::parse(selectors_json(profile.counts));
        j["clauses"] = clause_names(matching_flat_clauses(profile, table));
        j["oracle"] = flat_orbit(*f).n_empty;
        j["partition"] = classify_flat(*f, table).n;
    } else {
        if (!validate_classical(s) && !validate_super(s)) {
            throw InvalidSymbol(s, validate_super(s));
        }
        const auto profile = selector_profile(s);
        j["selectors"] = Json::parse(selectors_json(profile));
        if (classify_parity(s).family == ParityFamily::beta) {
            j["family"] = "beta";
            j["oracle"] = beta_orbit(s).n_empty;
            j["partition"] = classify_super_beta(s).n;
        } else {
            j["family"] = "regge";
            j["clauses"] = clause_names(matching_clauses(profile, table));
            j["oracle"] = orbit(s).n_empty;
            j["partition"] = classify(s, table).n;
        }
    }
    j["table"] = clause_table_name(table);
    out << j.dump() << '\n';
    if (j["partition"] != j["oracle"]) {
        throw ViolationError("classifier label " + j["partition"].dump() + " differs from orbit oracle " +
                             j["oracle"].dump());
    }
}

void run_prolong(const Symbol3j& s, bool decimal, std::ostream& out)
{
    auto f = detect_flat_forbidden(s);
    if (!f) {
        auto v = validate_super(s);
        if (v.ok()) {
            v = {Validity::parent, "symbol has an so(3) parent; use super-eval"};
        }
        throw InvalidSymbol(s, v);
    }
    Json j;
    j["value"] = value_json(prolong_value(*f));
    j["kappa"] = f->kappa;
    j["alpha"] = symbol_json(identify_alpha(*f));
    out << j.dump() << '\n';
    if (decimal) {
        out << to_decimal(prolong_value(*f)) << '\n';
    }
}

int run_census_command(CensusConfig config, const std::string& output, std::ostream& out, std::ostream& err)
{
    const CensusReport report = run_census(config);
    std::ofstream file;
    if (!output.empty()) {
        file.open(output, std::ios::binary);
        if (!file) {
            err << "error: cannot open " << output << '\n';
            return exit_usage;
        }
    }
    std::ostream& sink = output.empty() ? out : file;
    write_rows(report, sink);
    if (config.format == OutputFormat::json_lines) {
        sink << summary_json(report) << '\n';
    } else {
        err << summary_json(report) << '\n';
    }
    sink.flush();
    if (!sink) {
        err << "error: write failed\n";
        return exit_usage;
    }
    if (!report.violations.empty()) {
        err << "census: " << report.violations.size() << " violation(s)\n";
        return exit_violation;
    }
    return exit_ok;
}

} // namespace

int cli_main(std::span<const std::string> args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact Wigner 3-j and super 3-j symbols with Regge symmetry", "regge3j"};
    app.require_subcommand(1);

    std::vector<std::string> tokens;
    bool decimal = false;
    auto add_symbol = [&](CLI::App* sub) {
        sub->add_option("symbol", tokens, "j1 j2 j3 / m1 m2 m3")->expected(7)->required();
        sub->add_flag("--decimal", decimal, "also print a 12-digit decimal rendering");
    };

    auto* eval = app.add_subcommand("eval", "classical 3-j value");
    add_symbol(eval);

    std::string path = "product";
    auto* super_eval = app.add_subcommand("super-eval", "super 3-j value");
    add_symbol(super_eval);
    super_eval->add_option("--path", path, "product, direct or both")
        ->check(CLI::IsMember({"product", "direct", "both"}));

    auto* orbit_cmd = app.add_subcommand("orbit", "classes reached by Regge closure");
    orbit_cmd->add_option("symbol", tokens, "j1 j2 j3 / m1 m2 m3")->expected(7)->required();

    std::string clauses = "printed";
    auto* classify_cmd = app.add_subcommand("classify", "partition label and selectors");
    classify_cmd->add_option("symbol", tokens, "j1 j2 j3 / m1 m2 m3")->expected(7)->required();
    classify_cmd->add_option("--clauses", clauses, "printed or amended")
        ->check(CLI::IsMember({"printed", "amended"}));

    auto* prolong_cmd = app.add_subcommand("prolong", "value of a forbidden flat beta symbol");
    add_symbol(prolong_cmd);

    std::string kind = "classical";
    std::string jmax = "2";
    std::string format = "json";
    std::string output;
    int threads = 0;
    auto* census = app.add_subcommand("census", "exhaustive partition census");
    census->add_option("--kind", kind, "classical, super or flat")
        ->check(CLI::IsMember({"classical", "super", "flat"}));
    census->add_option("--jmax", jmax, "largest spin, e.g. 4 or 7/2");
    census->add_option("--format", format, "json (JSON lines) or csv")->check(CLI::IsMember({"json", "csv"}));
    census->add_option("--threads", threads, "worker count (default: REGGE3J_THREADS or 1)")
        ->check(CLI::PositiveNumber);
    census->add_option("--clauses", clauses, "printed or amended")->check(CLI::IsMember({"printed", "amended"}));
    census->add_option("--output", output, "write rows to this file instead of stdout");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*eval) {
            print_value(out, compute_3j(read_symbol(tokens)), decimal);
        } else if (*super_eval) {
            const Symbol3j s = read_symbol(tokens);
            if (path == "direct") {
                print_value(out, compute_super_3j_direct(s), decimal);
            } else {
                const SqrtRational v = compute_super_3j(s);
                if (path == "both" && compute_super_3j_direct(s) != v) {
                    throw ViolationError("product path " + v.to_string() + " and direct path " +
                                         compute_super_3j_direct(s).to_string() + " disagree");
                }
                print_value(out, v, decimal);
            }
        } else if (*orbit_cmd) {
            run_orbit(read_symbol(tokens), out);
        } else if (*classify_cmd) {
            run_classify(read_symbol(tokens), *parse_table(clauses), out);
        } else if (*prolong_cmd) {
            run_prolong(read_symbol(tokens), decimal, out);
        } else if (*census) {
            CensusConfig config;
            auto j = HalfInt::try_parse(jmax);
            if (!j || *j < HalfInt(0)) {
                throw UsageError("--jmax must be a nonnegative half-integer, got '" + jmax + "'");
            }
            config.j_max = *j;
            config.kind = *parse_kind(kind);
            config.format = format == "csv" ? OutputFormat::csv : OutputFormat::json_lines;
            config.threads = threads > 0 ? threads : parallelism_from_env().value_or(1);
            config.clauses = *parse_table(clauses);
            return run_census_command(config, output, out, err);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const InvalidSymbol& e) {
        err << "invalid symbol " << e.what() << '\n';
        return exit_invalid_symbol;
    } catch (const UnbalancedSymbol& e) {
        err << "invalid symbol: " << e.what() << '\n';
        return exit_invalid_symbol;
    } catch (const ClassificationError& e) {
        err << "invariant violation: " << e.what() << '\n';
        return exit_violation;
    } catch (const ViolationError& e) {
        err << "invariant violation: " << e.what() << '\n';
        return exit_violation;
    }
    return exit_ok;
}

} // namespace regge3j
