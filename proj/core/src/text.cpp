#include "diagseq/text.hpp"

#include "diagseq/errors.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

namespace diagseq {

namespace {

Int parse_int(std::string_view token, std::string_view what) {
    Int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        fail(ErrorKind::ParseError,
             "bad token '" + std::string(token) + "' in " + std::string(what));
    return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = text.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(text.substr(start));
            return out;
        }
        out.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

std::vector<Int> parse_values(std::string_view text, std::string_view what) {
    std::vector<Int> values;
    if (text.empty()) return values;
    for (std::string_view token : split(text, ','))
        values.push_back(parse_int(token, what));
    return values;
}

}  // namespace

std::string format_values(std::span<const Int> values) {
    std::ostringstream out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out << ',';
        out << values[i];
    }
    return out.str();
}

std::string format_partition(const Partition& p) { return format_values(p.parts()); }

Partition parse_partition(std::string_view text) {
    const std::vector<Int> values = parse_values(text, "partition text");
    return make_partition(values);
}

std::string format_diagonal(const DiagonalSequence& d) { return format_values(d.values()); }

DiagonalSequence parse_diagonal(std::string_view text) {
    const std::vector<Int> values = parse_values(text, "diagonal text");
    return validate_diagonal(values);
}

std::string format_multiset(const VnMultiset& m) {
    std::ostringstream out;
    bool first = true;
    const auto mults = m.mults();
    for (std::size_t j = 0; j < mults.size(); ++j) {
        if (mults[j] == 0) continue;
        if (!first) out << ',';
        first = false;
        out << m.base() + static_cast<Int>(j);
        if (mults[j] > 1) out << '^' << mults[j];
    }
    return out.str();
}

VnMultiset parse_multiset(std::string_view text) {
    std::map<Int, Int> tally;
    if (!text.empty()) {
        for (std::string_view term : split(text, ',')) {
            const std::size_t caret = term.find('^');
            Int value = 0;
            Int mult = 1;
            if (caret == std::string_view::npos) {
                value = parse_int(term, "multiset text");
            } else {
                value = parse_int(term.substr(0, caret), "multiset text");
                mult = parse_int(term.substr(caret + 1), "multiset text");
                if (mult < 0)
                    fail(ErrorKind::ParseError,
                         "bad token '" + std::string(term) + "' in multiset text");
            }
            tally[value] += mult;
        }
    }
    if (tally.empty()) return {};
    const Int base = tally.begin()->first;
    const Int top = tally.rbegin()->first;
    std::vector<Int> mults(static_cast<std::size_t>(top - base) + 1, 0);
    for (const auto& [value, mult] : tally) mults[static_cast<std::size_t>(value - base)] = mult;
    return VnMultiset(base, std::move(mults));
}

std::vector<ClassRecord> class_records(const ClassTable& table) {
    std::vector<ClassRecord> records;
    records.reserve(table.classes.size());
    for (const auto& [d, members] : table.classes) {
        ClassRecord rec;
        rec.d = d;
        rec.n = table.n;
        rec.count = static_cast<Int>(members.size());
        rec.members = members;
        records.push_back(std::move(rec));
    }
    return records;
}

std::string class_records_to_text(std::span<const ClassRecord> records) {
    std::vector<const ClassRecord*> order;
    order.reserve(records.size());
    for (const ClassRecord& rec : records) order.push_back(&rec);
    std::stable_sort(order.begin(), order.end(),
                     [](const ClassRecord* a, const ClassRecord* b) { return a->d < b->d; });
    std::ostringstream out;
    bool first = true;
    for (const ClassRecord* rec : order) {
        if (!first) out << '\n';
        first = false;
        out << "d=" << format_diagonal(rec->d) << '\n';
        out << "n=" << rec->n << '\n';
        out << "count=" << rec->count.str() << '\n';
        out << "members=";
        for (std::size_t i = 0; i < rec->members.size(); ++i) {
            if (i) out << "; ";
            out << format_partition(rec->members[i]);
        }
        out << '\n';
    }
    return out.str();
}

std::vector<ClassRecord> parse_class_records(std::string_view text) {
    std::vector<ClassRecord> records;
    ClassRecord current;
    bool open = false;
    auto flush = [&] {
        if (open) records.push_back(std::move(current));
        current = {};
        open = false;
    };
    for (std::string_view line : split(text, '\n')) {
        if (line.empty()) {
            flush();
            continue;
        }
        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos)
            fail(ErrorKind::ParseError, "bad census line '" + std::string(line) + "'");
        const std::string_view key = line.substr(0, eq);
        const std::string_view value = line.substr(eq + 1);
        open = true;
        if (key == "d") {
            current.d = parse_diagonal(value);
        } else if (key == "n") {
            current.n = parse_int(value, "census record");
        } else if (key == "count") {
            current.count = BigCount(std::string(value));
        } else if (key == "members") {
            if (!value.empty())
                for (std::string_view member : split(value, ';')) {
                    if (!member.empty() && member.front() == ' ') member.remove_prefix(1);
                    current.members.push_back(parse_partition(member));
                }
            else
                current.members.push_back(Partition{});
        } else {
            fail(ErrorKind::ParseError, "unknown census field '" + std::string(key) + "'");
        }
    }
    flush();
    return records;
}

}  // namespace diagseq
