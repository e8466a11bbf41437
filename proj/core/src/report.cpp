#include "diagseq/report.hpp"

#include "diagseq/text.hpp"

#include <json.hpp>

#include <cassert>
#include <sstream>

namespace diagseq {

ClassReport build_class_report(const DiagonalSequence& d, bool with_members, Int cap) {
    ClassReport report;
    report.d = d;
    report.n = d.weight();
    if (d.empty()) {
        // Weight-0 class: one member (the empty partition) with zero parts.
        report.a1 = {0};
        report.strata = {{0, 1}};
        report.total = 1;
        if (with_members) report.members = std::vector<Partition>{Partition{}};
        return report;
    }
    report.profile = to_s_profile(d);
    report.a1 = a1_set(d).values;
    for (Int k : report.a1) report.strata.emplace_back(k, count_stratum(d, k));
    report.total = count_class(d);
    report.alpha_bar = alpha_bar(*report.profile);
    report.alpha_under = alpha_under(*report.profile);
    if (with_members) report.members = enumerate_class(d, cap);
#ifndef NDEBUG
    BigCount sum = 0;
    for (const auto& [k, count] : report.strata) sum += count;
    assert(sum == report.total);
#endif
    return report;
}

std::string strata_to_text(const ClassReport& report) {
    std::ostringstream out;
    for (std::size_t i = 0; i < report.strata.size(); ++i) {
        if (i) out << ' ';
        out << report.strata[i].first << ':' << report.strata[i].second.str();
    }
    return out.str();
}

std::string report_to_text(const ClassReport& report) {
    std::ostringstream out;
    out << "d: " << format_diagonal(report.d) << '\n';
    out << "n: " << report.n << '\n';
    if (report.profile) {
        out << "profile: q=" << report.profile->q << " s=" << format_values(report.profile->s)
            << '\n';
    }
    out << "a1: " << format_values(report.a1) << '\n';
    out << "strata: " << strata_to_text(report) << '\n';
    out << "total: " << report.total.str() << '\n';
    out << "alpha_bar: " << format_partition(report.alpha_bar) << '\n';
    out << "alpha_under: " << format_partition(report.alpha_under) << '\n';
    if (report.members) {
        out << "members:" << '\n';
        for (const Partition& member : *report.members) out << format_partition(member) << '\n';
    }
    return out.str();
}

std::string report_to_json(const ClassReport& report, int indent) {
    nlohmann::ordered_json j;
    j["d"] = format_diagonal(report.d);
    j["n"] = report.n;
    if (report.profile) {
        j["profile"] = {{"q", report.profile->q}, {"s", report.profile->s}};
    } else {
        j["profile"] = nullptr;
    }
    j["a1"] = report.a1;
    nlohmann::ordered_json strata = nlohmann::ordered_json::object();
    for (const auto& [k, count] : report.strata) strata[std::to_string(k)] = count.str();
    j["strata"] = std::move(strata);
    j["total"] = report.total.str();
    j["alpha_bar"] = format_partition(report.alpha_bar);
    j["alpha_under"] = format_partition(report.alpha_under);
    if (report.members) {
        auto members = nlohmann::ordered_json::array();
        for (const Partition& member : *report.members) members.push_back(format_partition(member));
        j["members"] = std::move(members);
    }
    return j.dump(indent);
}

}  // namespace diagseq
