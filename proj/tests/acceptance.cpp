// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <wpl/cli.hpp>
#include <wpl/wpl.hpp>

#include "oracles.hpp"

using wpl::GradingGroup;
using wpl::WeightSequence;

namespace {

struct Outcome {
    bool ok = true;
    std::ostringstream detail;

    void fail(const std::string& why) {
        if (ok) detail.str("");
        ok = false;
        detail << why << "; ";
    }
};

std::string label(const WeightSequence& p) { return p.to_string(); }

Outcome presentation_table() {
    Outcome out;
    const std::vector<WeightSequence> weights{{1, 1, 1}, {1, 2, 2}, {1, 2, 3}, {1, 3, 4}, {2, 2, 4}, {2, 2, 6},
                                              {2, 2, 5}, {2, 2, 7}, {2, 3, 3}, {2, 3, 4}, {2, 3, 5}};
    for (const auto& p : weights) {
        const auto row = wpl::table_row(p);
        if (row.smallest_parameter()) {
            std::cout << "  info: " << label(p) << " is a D row at l=1, excluded\n";
            continue;
        }
        const auto report = wpl::verify_presentation(row, 500);
        if (!report.passed()) out.fail(label(p) + " presentation checks failed");
        const auto m = wpl::relation_membership(row);
        if (row.family == wpl::RowFamily::A) {
            if (!m.substituted.is_zero()) out.fail(label(p) + " A row does not vanish identically");
        } else if (!m.division.cofactor.is_monomial() || !m.division.remainder.is_zero()) {
            out.fail(label(p) + " cofactor is not a monomial: " + m.division.cofactor.to_string());
        }
    }
    if (out.ok) out.detail << weights.size() << " rows, N=500";
    return out;
}

Outcome strong_exceptional() {
    Outcome out;
    int count = 0;
    for (int a = 1; a <= 16; ++a)
        for (int b = a; a + b <= 17; ++b)
            for (int c = b; a + b + c <= 18; ++c, ++count) {
                const WeightSequence p(a, b, c);
                const auto r = wpl::check_strong_exceptional(GradingGroup(p), wpl::build_collection(p));
                if (!r.passed()) out.fail(label(p) + ": " + r.witness);
            }
    if (out.ok) out.detail << count << " weight triples";
    return out;
}

Outcome theorem_shadow() {
    Outcome out;
    int count = 0;
    for (int a = 1; a <= 16; ++a)
        for (int b = a; a + b <= 17; ++b)
            for (int c = b; a + b + c <= 18; ++c) {
                const WeightSequence p(a, b, c);
                if (!p.is_dynkin()) continue;
                ++count;
                const auto cls = wpl::dynkin_classify(p);
                const auto cmp = wpl::compare_lattices(p);
                if (!cmp.report.passed()) {
                    out.fail(label(p) + " lattice comparison failed");
                    continue;
                }
                const long long h = oracle::classical_coxeter_number(cls.type_by_vertex_count);
                if (cmp.coxeter_order != h) out.fail(label(p) + " Coxeter order differs from " + std::to_string(h));
                if (cmp.root_count != static_cast<std::size_t>(h * cls.vertex_count))
                    out.fail(label(p) + " root count differs from N*h");
            }
    const std::vector<std::pair<WeightSequence, std::size_t>> named{
        {{2, 2, 2}, 24}, {{2, 3, 3}, 72}, {{2, 3, 4}, 126}, {{2, 3, 5}, 240}};
    for (const auto& [p, roots] : named)
        if (wpl::compare_lattices(p).root_count != roots) out.fail(label(p) + " named root count");
    if (out.ok) out.detail << count << " Dynkin weights, D4/E6/E7/E8 roots 24/72/126/240";
    return out;
}

Outcome oracle_equivalence() {
    Outcome out;
    long long points = 0;
    for (const WeightSequence p : {WeightSequence(2, 3, 5), WeightSequence(2, 2, 2), WeightSequence(1, 2, 3),
                                   WeightSequence(3, 3, 3)}) {
        const GradingGroup g(p);
        for (int l0 = 0; l0 < p[0]; ++l0)
            for (int l1 = 0; l1 < p[1]; ++l1)
                for (int l2 = 0; l2 < p[2]; ++l2)
                    for (int l = -1; l <= 8; ++l, ++points) {
                        const wpl::DegreeElement x{l0, l1, l2, l};
                        if (wpl::graded_dim(g, x) != oracle::brute_force_graded_dim(p, x))
                            out.fail(label(p) + " at [" + x.wire() + "]");
                    }
    }
    if (points < 500) out.fail("only " + std::to_string(points) + " degree points");
    if (out.ok) out.detail << points << " degree points";
    return out;
}

Outcome boundary() {
    Outcome out;
    for (const WeightSequence p : {WeightSequence(2, 3, 6), WeightSequence(2, 4, 4), WeightSequence(3, 3, 3)}) {
        if (wpl::dynkin_classify(p).type_by_vertex_count != "NotDynkin") out.fail(label(p) + " classified as Dynkin");
        const auto c = wpl::cartan_from_quiver(wpl::build_quiver(p));
        if (wpl::determinant(c) != 0) out.fail(label(p) + " Cartan determinant nonzero");
        try {
            wpl::enumerate_roots(c);
            out.fail(label(p) + " root enumeration accepted the form");
        } catch (const wpl::indefinite_form_error&) {
        }
    }
    if (out.ok) out.detail << "(2,3,6), (2,4,4), (3,3,3)";
    return out;
}

Outcome negative_controls() {
    Outcome out;
    const std::vector<WeightSequence> weights{{1, 1, 1}, {1, 2, 2}, {1, 2, 3}, {1, 3, 4}, {2, 2, 4}, {2, 2, 6},
                                              {2, 2, 5}, {2, 2, 7}, {2, 3, 3}, {2, 3, 4}, {2, 3, 5}};
    int cases = 0;
    for (const auto& p : weights)
        for (auto kind : {wpl::Tamper::degree, wpl::Tamper::sign, wpl::Tamper::exponent}) {
            ++cases;
            const auto report = wpl::verify_all(p, 500, kind);
            bool witnessed = false;
            for (const auto& c : report.report.checks)
                if (c.failed() && !c.witness.empty()) witnessed = true;
            if (report.passed() || !witnessed)
                out.fail(label(p) + " tamper " + wpl::to_string(kind) + " not caught");

            wpl::cli::Command cmd;
            cmd.name = "verify";
            cmd.weights = p;
            cmd.corrupt = kind;
            if (wpl::cli::run(cmd).exit_code != wpl::cli::exit_failed)
                out.fail(label(p) + " tamper " + wpl::to_string(kind) + " CLI exit code");
        }
    if (out.ok) out.detail << cases << " tampered rows, CLI exit 1";
    return out;
}

} // namespace

int main() {
    struct Criterion {
        const char* name;
        Outcome (*run)();
    };
    const Criterion criteria[] = {
        {"1 presentation table", presentation_table}, {"2 strong exceptional", strong_exceptional},
        {"3 lattice comparison", theorem_shadow},     {"4 oracle equivalence", oracle_equivalence},
        {"5 boundary weights", boundary},             {"6 negative controls", negative_controls},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        const Outcome o = c.run();
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << c.name << ": " << o.detail.str() << " ("
                  << secs << " s)\n";
        if (!o.ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
