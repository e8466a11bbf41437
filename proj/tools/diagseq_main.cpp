// diagseq — command-line front end for the diagonal-sequence library.
//
// Exit codes: 0 success, 2 parse/validation failure, 3 resource bound hit,
// 4 verification mismatch, 5 domain error.

#include "diagseq/census.hpp"
#include "diagseq/enumeration.hpp"
#include "diagseq/errors.hpp"
#include "diagseq/render.hpp"
#include "diagseq/report.hpp"
#include "diagseq/text.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace diagseq;

int exit_code_for(const Error& e) {
    switch (e.kind()) {
        case ErrorKind::ParseError:
        case ErrorKind::NotSorted:
        case ErrorKind::NonPositivePart:
        case ErrorKind::BadShape:
            return 2;
        case ErrorKind::BoundExceeded:
        case ErrorKind::CapExceeded:
            return 3;
        case ErrorKind::NotStrict:
        case ErrorKind::WeightMismatch:
        case ErrorKind::InvalidPeel:
        case ErrorKind::EmptyStratum:
            return 5;
    }
    return 1;
}

Int enumeration_cap() {
    if (const char* env = std::getenv("DIAGSEQ_MAX_ENUM")) {
        try {
            return std::stoll(env);
        } catch (const std::exception&) {
            fail(ErrorKind::ParseError, "DIAGSEQ_MAX_ENUM is not an integer");
        }
    }
    return kDefaultClassCap;
}

std::pair<Int, Int> parse_range(const std::string& text) {
    const std::size_t dots = text.find("..");
    Int lo = 0;
    Int hi = 0;
    try {
        if (dots == std::string::npos) {
            lo = hi = std::stoll(text);
        } else {
            lo = std::stoll(text.substr(0, dots));
            hi = std::stoll(text.substr(dots + 2));
        }
    } catch (const std::exception&) {
        fail(ErrorKind::ParseError, "bad range '" + text + "'; expected N or LO..HI");
    }
    if (lo < 0 || hi < lo) fail(ErrorKind::ParseError, "bad range '" + text + "'");
    return {lo, hi};
}

struct CensusArgs {
    std::string range;
    bool check_oracle = false;
    bool json = false;
    std::string out_file;
    Int perturb_factor = -1;
};

int run_census_command(const CensusArgs& args) {
    const auto [lo, hi] = parse_range(args.range);
    CensusOptions options;
    options.check_oracle = args.check_oracle;
    if (args.perturb_factor >= 0) {
        options.perturb_factor = args.perturb_factor;
        options.check_oracle = true;
    }
    const CensusResult result = run_census(lo, hi, options);

    if (args.json) {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (const CensusRow& row : result.rows)
            rows.push_back({{"n", row.n},
                            {"p", row.partitions.str()},
                            {"classes", row.classes.str()},
                            {"min_class", row.min_class.str()},
                            {"max_class", row.max_class.str()}});
        nlohmann::ordered_json doc;
        doc["rows"] = std::move(rows);
        if (result.mismatch)
            doc["mismatch"] = {{"n", result.mismatch->n},
                               {"d", format_diagonal(result.mismatch->d)},
                               {"detail", result.mismatch->detail}};
        std::cout << doc.dump(2) << '\n';
    } else {
        for (const CensusRow& row : result.rows)
            std::cout << "n=" << row.n << " p=" << row.partitions.str()
                      << " classes=" << row.classes.str()
                      << " min_class=" << row.min_class.str()
                      << " max_class=" << row.max_class.str() << '\n';
        if (result.mismatch)
            std::cout << "oracle mismatch at n=" << result.mismatch->n
                      << " d=" << format_diagonal(result.mismatch->d) << ": "
                      << result.mismatch->detail << '\n';
        else if (options.check_oracle)
            std::cout << "oracle check passed for n=" << lo << ".." << hi << '\n';
    }

    if (!args.out_file.empty()) {
        std::vector<ClassRecord> records;
        for (Int n = lo; n <= hi; ++n) {
            const auto per_n = class_records(classes_oracle(n));
            records.insert(records.end(), per_n.begin(), per_n.end());
        }
        std::ofstream out(args.out_file, std::ios::binary);
        if (!out) fail(ErrorKind::ParseError, "cannot open '" + args.out_file + "' for writing");
        out << class_records_to_text(records);
    }

    return result.mismatch ? 4 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"diagonal-sequence toolkit for integer partitions"};
    app.require_subcommand(1);
    int rc = 0;

    // delta
    std::string delta_text;
    auto* delta = app.add_subcommand("delta", "diagonal sequence of a partition");
    delta->add_option("partition", delta_text, "partition text, e.g. 7,7,4,1,1,1");
    delta->callback([&] {
        std::cout << format_diagonal(diagonal_sequence(parse_partition(delta_text))) << '\n';
    });

    // class
    std::string class_text;
    bool class_count_only = false;
    bool class_strata = false;
    bool class_members = false;
    bool class_json = false;
    auto* cls = app.add_subcommand("class", "report on the class of a diagonal sequence");
    cls->add_option("diagonal", class_text, "diagonal text, e.g. 1,2,3,4,4,4,2,1");
    cls->add_flag("--count-only", class_count_only, "print only the class size");
    cls->add_flag("--strata", class_strata, "print only k:count pairs");
    cls->add_flag("--members", class_members, "enumerate all members (capped)");
    cls->add_flag("--json", class_json, "emit the report as JSON");
    cls->callback([&] {
        const DiagonalSequence d = parse_diagonal(class_text);
        const ClassReport report = build_class_report(d, class_members, enumeration_cap());
        if (class_json) {
            std::cout << report_to_json(report) << '\n';
        } else if (class_count_only || class_strata) {
            if (class_count_only) std::cout << report.total.str() << '\n';
            if (class_strata) std::cout << strata_to_text(report) << '\n';
        } else {
            std::cout << report_to_text(report);
        }
    });

    // census
    CensusArgs census_args;
    auto* census = app.add_subcommand("census", "per-weight class statistics");
    census->add_option("--n", census_args.range, "weight or weight range, e.g. 21 or 1..22")
        ->required();
    census->add_flag("--check-oracle", census_args.check_oracle,
                     "verify the counting formulas against brute-force grouping");
    census->add_flag("--json", census_args.json, "emit rows as JSON");
    census->add_option("--out", census_args.out_file, "write per-class census records to FILE");
    census
        ->add_option("--perturb-class-factor", census_args.perturb_factor,
                     "self-test: bump one class-size factor and expect the oracle to object")
        ->group("");
    census->callback([&] { rc = run_census_command(census_args); });

    // extremes
    std::string extremes_text;
    Int stratum_k = -1;
    auto* extremes = app.add_subcommand("extremes", "majorization extremes of a class");
    extremes->add_option("diagonal", extremes_text, "diagonal text");
    extremes->add_option("--stratum", stratum_k, "restrict to members with exactly K parts");
    extremes->callback([&] {
        const DiagonalSequence d = parse_diagonal(extremes_text);
        if (stratum_k >= 0) {
            std::cout << format_partition(stratum_max(d, stratum_k)) << '\n';
            std::cout << format_partition(stratum_min(d, stratum_k)) << '\n';
        } else if (d.empty()) {
            std::cout << '\n' << '\n';
        } else {
            const SProfile sp = to_s_profile(d);
            std::cout << format_partition(alpha_bar(sp)) << '\n';
            std::cout << format_partition(alpha_under(sp)) << '\n';
        }
    });

    // render
    std::string render_text;
    std::string render_mode = "index";
    bool render_conj = false;
    auto* render = app.add_subcommand("render", "draw the Young diagram as text");
    render->add_option("partition", render_text, "partition text");
    render->add_option("--mode", render_mode, "cell contents: index or letter")
        ->check(CLI::IsMember({"index", "letter"}));
    render->add_flag("--conjugate", render_conj, "render the conjugate instead");
    render->callback([&] {
        Partition p = parse_partition(render_text);
        if (render_conj) p = conjugate(p);
        const RenderMode mode =
            render_mode == "letter" ? RenderMode::Letter : RenderMode::Index;
        for (const std::string& row : render_young(p, mode)) std::cout << row << '\n';
    });

    // vn
    std::string vn_text;
    Int vn_k = 1;
    bool vn_count_only = false;
    auto* vn = app.add_subcommand("vn", "rise-bounded orderings of a multiset");
    vn->add_option("multiset", vn_text, "multiset text, e.g. 6^2,7,8");
    vn->add_option("--k", vn_k, "largest allowed rise (default 1)");
    vn->add_flag("--count-only", vn_count_only, "print only the count");
    vn->callback([&] {
        const VnMultiset m = parse_multiset(vn_text);
        if (vn_count_only) {
            std::cout << kvn_count(m, vn_k).str() << '\n';
        } else {
            for_each_kvn(m, vn_k,
                         [](std::span<const Int> v) { std::cout << format_values(v) << '\n'; });
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e);
    }
    return rc;
}
