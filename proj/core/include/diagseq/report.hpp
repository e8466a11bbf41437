#pragma once

#include "diagseq/enumeration.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace diagseq {

/// Aggregate view of one class: canonical profile, admissible part
/// counts, stratum sizes, total size, the two extremal members and
/// (optionally) the full member list. For the weight-0 class the profile
/// is absent and the single "stratum" is the empty partition with zero
/// parts, reported under k = 0.
struct ClassReport {
    DiagonalSequence d;
    Int n = 0;
    std::optional<SProfile> profile;
    std::vector<Int> a1;
    std::vector<std::pair<Int, BigCount>> strata;  // ascending k, nonzero counts
    BigCount total;
    Partition alpha_bar;
    Partition alpha_under;
    std::optional<std::vector<Partition>> members;
};

ClassReport build_class_report(const DiagonalSequence& d, bool with_members = false,
                               Int cap = kDefaultClassCap);

/// "k:count" pairs joined by single spaces, e.g. "4:6 6:12 7:6 8:12".
std::string strata_to_text(const ClassReport& report);

/// One "key: value" line per field; members (when present) follow a
/// "members:" line, one partition text per line.
std::string report_to_text(const ClassReport& report);

/// JSON document with exactly the fields d, n, profile, a1, strata,
/// total, alpha_bar, alpha_under, members; counts rendered as decimal
/// strings, partition/diagonal values in the shared text formats.
std::string report_to_json(const ClassReport& report, int indent = 2);

}  // namespace diagseq
