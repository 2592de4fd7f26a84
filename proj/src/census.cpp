#include "regge3j/census.hpp"

#include "regge3j/classical.hpp"
#include "regge3j/flat.hpp"
#include "regge3j/regge.hpp"
#include "regge3j/super.hpp"

#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <exception>
#include <set>
#include <thread>

namespace regge3j {

std::string_view kind_name(CensusKind k)
{
    switch (k) {
    case CensusKind::classical:
        return "classical";
    case CensusKind::super:
        return "super";
    case CensusKind::flat:
        return "flat";
    }
    return "unknown";
}

std::optional<CensusKind> parse_kind(std::string_view text)
{
    for (auto k : {CensusKind::classical, CensusKind::super, CensusKind::flat}) {
        if (kind_name(k) == text) {
            return k;
        }
    }
    return std::nullopt;
}

namespace {

bool admitted(const Symbol3j& s, CensusKind kind)
{
    switch (kind) {
    case CensusKind::classical:
        return validate_classical(s).ok();
    case CensusKind::super:
        return validate_super(s).ok();
    case CensusKind::flat:
        return detect_flat_forbidden(s).has_value();
    }
    return false;
}

} // namespace

std::vector<Symbol3j> enumerate(const CensusConfig& config)
{
    const std::int64_t top = config.j_max.twice();
    const std::int64_t step = config.kind == CensusKind::classical ? 2 : 1;
    std::vector<Symbol3j> out;
    for (std::int64_t a = 0; a <= top; ++a) {
        for (std::int64_t b = 0; b <= top; ++b) {
            for (std::int64_t c = std::abs(a - b); c <= std::min(a + b, top); ++c) {
                for (std::int64_t m1 = -a; m1 <= a; m1 += step) {
                    for (std::int64_t m2 = -b; m2 <= b; m2 += step) {
                        const std::int64_t m3 = -m1 - m2;
                        if (std::abs(m3) > c) {
                            continue;
                        }
                        const Symbol3j s = Symbol3j::from_twice({a, b, c, m1, m2, m3});
                        if (admitted(s, config.kind) && SetClass(s).canonical() == s) {
                            out.push_back(s);
                        }
                    }
                }
            }
        }
    }
    return out;
}

namespace {

struct RowResult {
    std::optional<CensusRow> row;
    std::vector<Violation> violations;
    long agree_unordered = 0;
    long agree_ordered = 0;
    SignLawStats signs;
};

std::vector<Symbol3j> distinct_members(const Symbol3j& s)
{
    auto images = classical_images(s);
    std::sort(images.begin(), images.end());
    images.erase(std::unique(images.begin(), images.end()), images.end());
    return images;
}

template <typename Label>
std::optional<PartitionLabel> try_label(Label&& label)
{
    try {
        return label();
    } catch (const ClassificationError&) {
        return std::nullopt;
    }
}

bool allowed(int n, CensusKind kind, ParityClass parity)
{
    const bool two_sets = kind == CensusKind::flat || parity.family == ParityFamily::beta;
    if (two_sets) {
        return n == 0 || n == 1;
    }
    return n == 0 || n == 1 || n == 2 || n == 4 || n == 5;
}

// Classifier for a member under a given convention and the configured clause table.
std::optional<PartitionLabel> member_label(const Symbol3j& m, const CensusConfig& config, PairConvention conv)
{
    return try_label([&] {
        switch (config.kind) {
        case CensusKind::flat:
            return classify_flat(*detect_flat_forbidden(m), config.clauses, conv);
        case CensusKind::super:
            if (classify_parity(m).family == ParityFamily::beta) {
                return classify_super_beta(m, conv);
            }
            [[fallthrough]];
        case CensusKind::classical:
            break;
        }
        return classify(m, config.clauses, conv);
    });
}

void check_beta_sign_law(const Symbol3j& m, RowResult& result)
{
    const int kappa = classify_parity(m).kappa;
    const SqrtRational v = compute_super_3j(m);
    const Symbol3j image = apply_regge(m, kappa);
    const SqrtRational w = compute_super_3j(image);
    const SqrtRational predicted = beta_phase(m, kappa) > 0 ? v : -v;
    if (w != predicted) {
        result.violations.push_back({m, "beta sign law fails: image " + image.to_string() + " has " +
                                            w.to_string() + ", predicted " + predicted.to_string()});
    }
    if (!v.is_zero()) {
        (w == v ? result.signs.same : result.signs.opposite) += 1;
    }
}

RowResult census_row(const Symbol3j& s, const CensusConfig& config)
{
    RowResult result;
    CensusRow row{s, classify_parity(s), {}, std::nullopt, 0, 1, {}, 0, 0};
    OrbitReport report;
    switch (config.kind) {
    case CensusKind::classical:
        row.value = compute_3j(s);
        row.selectors = selector_profile(s);
        report = orbit(s);
        break;
    case CensusKind::super: {
        row.value = compute_super_3j(s);
        row.selectors = selector_profile(s);
        if (const auto direct = compute_super_3j_direct(s); direct != row.value) {
            result.violations.push_back({s, "direct path gives " + direct.to_string() + ", product path " +
                                                row.value.to_string()});
        }
        if (row.parity.family == ParityFamily::beta) {
            report = beta_orbit(s);
        } else {
            report = orbit(s);
            for (int k : all_regge_maps) {
                const Symbol3j image = apply_regge(s, k);
                if (compute_super_3j(image) != row.value) {
                    result.violations.push_back({s, "value changes under Regge map " + std::to_string(k)});
                }
            }
        }
        break;
    }
    case CensusKind::flat: {
        const FlatBetaSymbol f = *detect_flat_forbidden(s);
        row.value = prolong_value(f);
        row.selectors = flat_selector_profile(f).counts;
        if (const auto alpha = compute_super_3j(identify_alpha(f)); alpha != row.value) {
            result.violations.push_back({s, "prolonged value " + row.value.to_string() +
                                                " differs from identified symbol " + alpha.to_string()});
        }
        report = flat_orbit(f);
        break;
    }
    }
    row.oracle = report.n_empty;
    row.orbit_classes = static_cast<int>(report.classes.size());
    if (!allowed(row.oracle, config.kind, row.parity)) {
        result.violations.push_back({s, "orbit has " + std::to_string(row.orbit_classes) + " classes"});
    }
    row.partition = member_label(s, config, kCalibratedPairConvention);

    std::string first_disagreement;
    for (const auto& m : distinct_members(s)) {
        ++row.members;
        const auto frozen = member_label(m, config, kCalibratedPairConvention);
        const auto other = member_label(m, config, kCalibratedPairConvention == PairConvention::unordered
                                                       ? PairConvention::ordered
                                                       : PairConvention::unordered);
        const bool frozen_ok = frozen && frozen->n == row.oracle;
        const bool other_ok = other && other->n == row.oracle;
        row.members_agreeing += frozen_ok;
        result.agree_unordered += kCalibratedPairConvention == PairConvention::unordered ? frozen_ok : other_ok;
        result.agree_ordered += kCalibratedPairConvention == PairConvention::ordered ? frozen_ok : other_ok;
        if (!frozen_ok && first_disagreement.empty()) {
            first_disagreement = m.to_string() + (frozen ? " labelled " + std::to_string(frozen->n)
                                                         : std::string(" unclassifiable"));
        }
        if (config.kind == CensusKind::super && row.parity.family == ParityFamily::beta) {
            check_beta_sign_law(m, result);
        }
    }
    if (row.members_agreeing != row.members) {
        result.violations.push_back({s, "classifier disagrees with orbit size " + std::to_string(row.orbit_classes) +
                                            " on " + std::to_string(row.members - row.members_agreeing) + " of " +
                                            std::to_string(row.members) + " members, e.g. " + first_disagreement});
    }
    result.row = std::move(row);
    return result;
}

RowResult guarded_row(const Symbol3j& s, const CensusConfig& config)
{
    try {
        return census_row(s, config);
    } catch (const std::exception& e) {
        RowResult failed;
        failed.violations.push_back({s, std::string("evaluation failed: ") + e.what()});
        return failed;
    }
}

} // namespace

CensusReport run_census(const CensusConfig& config)
{
    const std::vector<Symbol3j> classes = enumerate(config);
    std::vector<RowResult> results(classes.size());
    const int workers = std::max(1, std::min<int>(config.threads, static_cast<int>(classes.size())));
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < classes.size(); i = next++) {
            results[i] = guarded_row(classes[i], config);
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back(work);
        }
    }

    CensusReport report;
    report.config = config;
    for (auto& r : results) {
        report.calibration.agree_unordered += r.agree_unordered;
        report.calibration.agree_ordered += r.agree_ordered;
        report.sign_law.same += r.signs.same;
        report.sign_law.opposite += r.signs.opposite;
        for (auto& v : r.violations) {
            report.violations.push_back(std::move(v));
        }
        if (!r.row) {
            continue;
        }
        const CensusRow& row = *r.row;
        report.partition_counts[row.partition ? std::to_string(row.partition->n) : "none"] += 1;
        report.oracle_counts[row.oracle] += 1;
        report.orbit_class_counts[row.orbit_classes] += 1;
        report.symbols_checked += row.members;
        report.symbols_agreeing += row.members_agreeing;
        report.rows.push_back(std::move(*r.row));
    }
    report.calibration.symbols = report.symbols_checked;
    return report;
}

namespace {

nlohmann::ordered_json halfint_array(const std::array<HalfInt, 3>& v)
{
    return {v[0].to_string(), v[1].to_string(), v[2].to_string()};
}

} // namespace

void write_rows(const CensusReport& report, std::ostream& out)
{
    if (report.config.format == OutputFormat::csv) {
        out << "j1,j2,j3,m1,m2,m3,parity,sign,radicand,partition\n";
        for (const auto& row : report.rows) {
            for (std::size_t k = 0; k < 3; ++k) {
                out << row.symbol.j(k).to_string() << ',';
            }
            for (std::size_t k = 0; k < 3; ++k) {
                out << row.symbol.m(k).to_string() << ',';
            }
            out << row.parity.name() << ',' << row.value.sign() << ',' << row.value.radicand().to_string() << ','
                << (row.partition ? std::to_string(row.partition->n) : "") << '\n';
        }
        return;
    }
    for (const auto& row : report.rows) {
        nlohmann::ordered_json j;
        j["j"] = halfint_array(row.symbol.spins());
        j["m"] = halfint_array(row.symbol.projections());
        j["parity"] = row.parity.name();
        j["value"] = nlohmann::ordered_json::parse(row.value.to_json());
        j["partition"] = row.partition ? nlohmann::ordered_json(row.partition->n) : nlohmann::ordered_json();
        j["orbit_classes"] = row.orbit_classes;
        j["selectors"] = nlohmann::ordered_json::parse(selectors_json(row.selectors));
        out << j.dump() << '\n';
    }
}

std::string summary_json(const CensusReport& report)
{
    nlohmann::ordered_json s;
    s["kind"] = kind_name(report.config.kind);
    s["j_max"] = report.config.j_max.to_string();
    s["clauses"] = clause_table_name(report.config.clauses);
    s["classes"] = report.rows.size();
    s["symbols"] = report.symbols_checked;
    s["symbols_agreeing"] = report.symbols_agreeing;
    auto& partitions = s["partition_counts"] = nlohmann::ordered_json::object();
    for (const auto& [label, count] : report.partition_counts) {
        partitions[label] = count;
    }
    auto& oracle = s["oracle_counts"] = nlohmann::ordered_json::object();
    for (const auto& [n, count] : report.oracle_counts) {
        oracle[std::to_string(n)] = count;
    }
    auto& sizes = s["orbit_class_counts"] = nlohmann::ordered_json::object();
    for (const auto& [k, count] : report.orbit_class_counts) {
        sizes[std::to_string(k)] = count;
    }
    s["calibration"] = {
        {"frozen", convention_name(report.calibration.frozen)},
        {"best", convention_name(report.calibration.best())},
        {"symbols", report.calibration.symbols},
        {"agreement",
         {{"unordered", report.calibration.agree_unordered}, {"ordered", report.calibration.agree_ordered}}}};
    if (report.config.kind == CensusKind::super) {
        s["sign_law"] = {{"same", report.sign_law.same}, {"opposite", report.sign_law.opposite}};
    }
    s["violations"] = report.violations.size();
    auto& list = s["violation_list"] = nlohmann::ordered_json::array();
    for (const auto& v : report.violations) {
        list.push_back({{"symbol", v.symbol.to_string()}, {"reason", v.reason}});
    }
    nlohmann::ordered_json wrapper;
    wrapper["summary"] = std::move(s);
    return wrapper.dump();
}

std::optional<int> parallelism_from_env()
{
    const char* text = std::getenv("REGGE3J_THREADS");
    if (text == nullptr) {
        return std::nullopt;
    }
    std::string_view sv(text);
    int value = 0;
    auto [ptr, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), value);
    if (ec != std::errc{} || ptr != sv.data() + sv.size() || value < 1) {
        return std::nullopt;
    }
    return value;
}

} // namespace regge3j
