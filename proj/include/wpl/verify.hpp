#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "collection.hpp"
#include "presentation.hpp"
#include "quiver.hpp"
#include "verification.hpp"

namespace wpl {

struct FullReport {
    WeightSequence weights{1, 1, 1};
    DynkinClass classification;
    std::vector<std::string> flags;
    VerificationReport report;
    std::optional<long long> coxeter_order;
    std::optional<std::size_t> root_count;

    bool passed() const { return report.passed(); }
};

inline constexpr const char* presentation_check_names[] = {"generator_degrees", "relation_homogeneity",
                                                           "relation_membership", "hilbert_match",
                                                           "gorenstein_parameter"};

/**
 * Every applicable check for one weight sequence. Non-Dynkin weights only
 * run the strong-exceptionality check; the others are reported as not
 * applicable. An optional tamper corrupts the presentation row first.
 */
inline FullReport verify_all(const WeightSequence& p, std::size_t max_degree = 500,
                             std::optional<Tamper> corrupt = std::nullopt) {
    FullReport out;
    out.weights = p;
    out.classification = dynkin_classify(p);
    const GradingGroup g(p);

    if (out.classification.dynkin) {
        PresentationRow row = table_row(p);
        if (corrupt) row = tamper(std::move(row), *corrupt);
        out.flags = row.flags;
        out.report.append(verify_presentation(row, max_degree));
    } else {
        for (const char* n : presentation_check_names)
            out.report.add(CheckResult::not_applicable(n, "weights are not of Dynkin type"));
    }

    out.report.add(check_strong_exceptional(g, build_collection(p)));

    LatticeComparison lattice = compare_lattices(p);
    out.report.append(lattice.report);
    out.coxeter_order = lattice.coxeter_order;
    out.root_count = lattice.root_count;
    return out;
}

} // namespace wpl
