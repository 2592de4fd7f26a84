#include "oracles.hpp"

#include "regge3j/census.hpp"
#include "regge3j/regge.hpp"
#include "regge3j/super.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <set>
#include <sstream>

using namespace regge3j;

namespace {

Symbol3j t(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t x, std::int64_t y, std::int64_t z)
{
    return Symbol3j::from_twice({a, b, c, x, y, z});
}

CensusConfig config(const char* jmax, CensusKind kind, int threads = 1)
{
    CensusConfig c;
    c.j_max = HalfInt::parse(jmax);
    c.kind = kind;
    c.threads = threads;
    return c;
}

std::string rendered(const CensusReport& r)
{
    std::ostringstream out;
    write_rows(r, out);
    out << summary_json(r) << '\n';
    return out.str();
}

} // namespace

TEST(Enumerate, ZeroSpin)
{
    const auto reps = enumerate(config("0", CensusKind::classical));
    ASSERT_EQ(reps.size(), 1u);
    EXPECT_EQ(reps[0], t(0, 0, 0, 0, 0, 0));
}

TEST(Enumerate, SpinOneByHand)
{
    // Spin triangles (0 0 0), (0 ½ ½), (0 1 1), (½ ½ 1), (1 1 1), one class per
    // projection pattern up to permutation and sign.
    const auto reps = enumerate(config("1", CensusKind::classical));
    const std::vector<Symbol3j> expected{t(0, 0, 0, 0, 0, 0),   t(0, 1, 1, 0, -1, 1),  t(0, 2, 2, 0, -2, 2),
                                         t(0, 2, 2, 0, 0, 0),   t(1, 1, 2, -1, -1, 2), t(1, 1, 2, -1, 1, 0),
                                         t(2, 2, 2, -2, 0, 2),  t(2, 2, 2, 0, 0, 0)};
    EXPECT_EQ(reps, expected);
}

TEST(Enumerate, SuperIncludesSmallestGamma)
{
    const auto reps = enumerate(config("1/2", CensusKind::super));
    EXPECT_NE(std::find(reps.begin(), reps.end(), t(1, 1, 1, 0, 0, 0)), reps.end());
    for (const auto& s : reps) {
        EXPECT_TRUE(validate_super(s));
    }
}

TEST(Enumerate, CoversEveryClassExactlyOnce)
{
    struct Case {
        CensusKind kind;
        int twice_max;
    };
    for (const Case& c : {Case{CensusKind::classical, 8}, Case{CensusKind::super, 5}, Case{CensusKind::flat, 8}}) {
        CensusConfig cfg;
        cfg.j_max = HalfInt::from_twice(c.twice_max);
        cfg.kind = c.kind;
        const auto reps = enumerate(cfg);
        std::set<oracle::Key> got;
        for (const auto& s : reps) {
            EXPECT_TRUE(got.insert(s.key()).second) << s.to_string();
            EXPECT_EQ(oracle::canonical_key(s), s.key());
        }
        EXPECT_TRUE(std::is_sorted(reps.begin(), reps.end()));
        std::set<oracle::Key> want;
        for (const auto& s : oracle::all_symbols(c.twice_max, c.kind == CensusKind::classical)) {
            bool admitted = false;
            switch (c.kind) {
            case CensusKind::classical:
                admitted = validate_classical(s).ok();
                break;
            case CensusKind::super:
                admitted = validate_super(s).ok();
                break;
            case CensusKind::flat:
                admitted = detect_flat_forbidden(s).has_value();
                break;
            }
            if (admitted) {
                want.insert(oracle::canonical_key(s));
            }
        }
        EXPECT_EQ(got, want);
    }
}

TEST(RunCensus, SmallClassicalCounts)
{
    CensusConfig cfg = config("2", CensusKind::classical);
    cfg.clauses = ClauseTable::amended;
    const CensusReport r = run_census(cfg);
    EXPECT_TRUE(r.violations.empty());
    EXPECT_EQ(r.symbols_agreeing, r.symbols_checked);
    EXPECT_EQ(r.calibration.best(), PairConvention::unordered);
    EXPECT_GT(r.calibration.agree_unordered, r.calibration.agree_ordered);
    long classes = 0;
    for (const auto& [n, count] : r.oracle_counts) {
        EXPECT_TRUE(n == 0 || n == 1 || n == 2 || n == 4 || n == 5);
        classes += count;
    }
    EXPECT_EQ(classes, static_cast<long>(r.rows.size()));
    for (const auto& row : r.rows) {
        ASSERT_TRUE(row.partition.has_value());
        EXPECT_EQ(row.partition->n, row.oracle);
        EXPECT_EQ(row.orbit_classes, static_cast<int>(oracle::array_group_orbit(row.symbol).size()));
    }
}

TEST(RunCensus, PrintedClassicalReportsTheGap)
{
    const CensusReport r = run_census(config("4", CensusKind::classical));
    EXPECT_EQ(r.rows.size(), 449u);
    EXPECT_EQ(r.violations.size(), 2u);
    EXPECT_EQ(r.symbols_checked, 4451);
    EXPECT_EQ(r.symbols_agreeing, 4427);
}

TEST(RunCensus, SuperSignLawAndValues)
{
    const CensusReport r = run_census(config("2", CensusKind::super));
    EXPECT_TRUE(r.violations.empty());
    EXPECT_GT(r.sign_law.same, 0);
    EXPECT_GT(r.sign_law.opposite, 0);
    for (const auto& row : r.rows) {
        EXPECT_EQ(row.value, compute_super_3j(row.symbol));
    }
}

TEST(RunCensus, FlatAmendedIsClean)
{
    CensusConfig cfg = config("4", CensusKind::flat);
    cfg.clauses = ClauseTable::amended;
    const CensusReport r = run_census(cfg);
    EXPECT_FALSE(r.rows.empty());
    EXPECT_TRUE(r.violations.empty());
    for (const auto& [n, count] : r.oracle_counts) {
        EXPECT_TRUE(n == 0 || n == 1);
    }
}

TEST(RunCensus, OutputIndependentOfThreads)
{
    for (CensusKind kind : {CensusKind::classical, CensusKind::super, CensusKind::flat}) {
        const std::string one = rendered(run_census(config("5/2", kind, 1)));
        const std::string four = rendered(run_census(config("5/2", kind, 4)));
        EXPECT_EQ(one, four);
        EXPECT_EQ(one, rendered(run_census(config("5/2", kind, 1))));
    }
}

TEST(WriteRows, CsvHeaderAndJsonShape)
{
    CensusConfig cfg = config("1", CensusKind::classical);
    cfg.format = OutputFormat::csv;
    std::ostringstream csv;
    write_rows(run_census(cfg), csv);
    std::istringstream lines(csv.str());
    std::string header;
    std::getline(lines, header);
    EXPECT_EQ(header, "j1,j2,j3,m1,m2,m3,parity,sign,radicand,partition");
    std::string first;
    std::getline(lines, first);
    EXPECT_EQ(first, "0,0,0,0,0,0,alpha,1,1/1,0");

    cfg.format = OutputFormat::json_lines;
    std::ostringstream json;
    write_rows(run_census(cfg), json);
    std::istringstream jl(json.str());
    std::getline(jl, first);
    EXPECT_EQ(first.rfind("{\"j\":[\"0\",\"0\",\"0\"],\"m\":[\"0\",\"0\",\"0\"],\"parity\":\"alpha\"", 0), 0u);
}

TEST(Summary, CarriesCalibration)
{
    const std::string s = summary_json(run_census(config("1", CensusKind::classical)));
    EXPECT_NE(s.find("\"frozen\":\"unordered\""), std::string::npos);
    EXPECT_NE(s.find("\"violations\":0"), std::string::npos);
}

TEST(Parallelism, ReadsEnvironment)
{
    ::setenv("REGGE3J_THREADS", "3", 1);
    EXPECT_EQ(parallelism_from_env(), 3);
    ::setenv("REGGE3J_THREADS", "zero", 1);
    EXPECT_EQ(parallelism_from_env(), std::nullopt);
    ::setenv("REGGE3J_THREADS", "0", 1);
    EXPECT_EQ(parallelism_from_env(), std::nullopt);
    ::unsetenv("REGGE3J_THREADS");
    EXPECT_EQ(parallelism_from_env(), std::nullopt);
}

TEST(Kinds, RoundTripNames)
{
    for (CensusKind k : {CensusKind::classical, CensusKind::super, CensusKind::flat}) {
        EXPECT_EQ(parse_kind(kind_name(k)), k);
    }
    EXPECT_EQ(parse_kind("quantum"), std::nullopt);
}
