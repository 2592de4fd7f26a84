#pragma once

#include "regge3j/exact.hpp"
#include "regge3j/selectors.hpp"
#include "regge3j/symbol.hpp"

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace regge3j {

enum class CensusKind { classical, super, flat };
enum class OutputFormat { json_lines, csv };

std::string_view kind_name(CensusKind k);
std::optional<CensusKind> parse_kind(std::string_view text);

struct CensusConfig {
    HalfInt j_max;
    CensusKind kind = CensusKind::classical;
    OutputFormat format = OutputFormat::json_lines;
    int threads = 1;
    ClauseTable clauses = ClauseTable::printed;
};

/// Canonical representatives of every class of the requested kind with all
/// spins ≤ j_max, in increasing key order. Classical: valid classical
/// symbols. Super: symbols passing validate_super. Flat: forbidden flat β
/// symbols. In every case |m_k| ≤ j_k.
std::vector<Symbol3j> enumerate(const CensusConfig& config);

/// One census record per class.
struct CensusRow {
    Symbol3j symbol;
    ParityClass parity;
    SqrtRational value;
    std::optional<PartitionLabel> partition;  ///< classifier label on the representative
    int oracle = 0;                           ///< n_empty of the applicable orbit
    int orbit_classes = 1;
    SelectorProfile selectors;
    int members = 0;            ///< distinct symbols in the class
    int members_agreeing = 0;   ///< members whose classifier label equals the oracle
};

struct Violation {
    Symbol3j symbol;
    std::string reason;
};

/// Agreement of the classifier with the oracle under each pair convention,
/// over every symbol of the census.
struct CalibrationRecord {
    long symbols = 0;
    long agree_unordered = 0;
    long agree_ordered = 0;
    PairConvention frozen = kCalibratedPairConvention;

    /// The convention with the larger agreement (unordered on a tie).
    PairConvention best() const
    {
        return agree_ordered > agree_unordered ? PairConvention::ordered : PairConvention::unordered;
    }
};

/// Signs relating β values to their images under the matching map.
struct SignLawStats {
    long same = 0;
    long opposite = 0;
};

struct CensusReport {
    CensusConfig config;
    std::vector<CensusRow> rows;
    std::map<std::string, long> partition_counts;  ///< classifier label (or "none") → classes
    std::map<int, long> oracle_counts;             ///< oracle n_empty → classes
    std::map<int, long> orbit_class_counts;        ///< orbit size in classes → classes
    long symbols_checked = 0;
    long symbols_agreeing = 0;
    CalibrationRecord calibration;
    SignLawStats sign_law;
    std::vector<Violation> violations;
};

CensusReport run_census(const CensusConfig& config);

/// One line per row, JSON objects or CSV with a header.
void write_rows(const CensusReport& report, std::ostream& out);
/// Single-line JSON summary: counts, calibration, sign law and violations.
std::string summary_json(const CensusReport& report);

/// REGGE3J_THREADS when set to a positive integer.
std::optional<int> parallelism_from_env();

} // namespace regge3j
