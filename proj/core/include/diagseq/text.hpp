#pragma once

#include "diagseq/counting.hpp"
#include "diagseq/enumeration.hpp"

#include <string>
#include <string_view>

namespace diagseq {

// Shared text formats. A partition or diagonal sequence is a
// comma-separated decimal list with no spaces, e.g. "8,6,4,3"; the empty
// string denotes the empty value. A multiset is a comma-separated list of
// "value" or "value^multiplicity" terms, e.g. "6^2,7,8".

std::string format_values(std::span<const Int> values);

std::string format_partition(const Partition& p);
Partition parse_partition(std::string_view text);

std::string format_diagonal(const DiagonalSequence& d);
DiagonalSequence parse_diagonal(std::string_view text);

std::string format_multiset(const VnMultiset& m);
VnMultiset parse_multiset(std::string_view text);

/// One census record per class. Serialized as "key=value" lines (d, n,
/// count, members), records separated by blank lines, sorted by d
/// lexicographically; members are "; "-separated partition texts.
struct ClassRecord {
    DiagonalSequence d;
    Int n = 0;
    BigCount count;
    std::vector<Partition> members;

    friend bool operator==(const ClassRecord&, const ClassRecord&) = default;
};

std::vector<ClassRecord> class_records(const ClassTable& table);
std::string class_records_to_text(std::span<const ClassRecord> records);
std::vector<ClassRecord> parse_class_records(std::string_view text);

}  // namespace diagseq
