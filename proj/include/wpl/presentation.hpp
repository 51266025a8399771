#pragma once

/**
 * @file presentation.hpp
 * @brief Simple-singularity presentations of R'(p) for Dynkin weights.
 *
 * For 1/p0 + 1/p1 + 1/p2 > 1 the Z-graded algebra R'(p), R'_n = R_{-n*omega},
 * is k[x,y,z]/(f_p) for three homogeneous generators. The rows below encode
 * generators, Z-degrees and relation for the A, D and E series; every cell
 * is checked mechanically against R(p):
 *
 *  - each generator has L(p)-degree -d*omega for its Z-degree d,
 *  - the relation is Z-homogeneous of the stated degree,
 *  - substituting the generators into the relation lands in (f),
 *  - the Hilbert series of R'(p) equals (1 - t^e) / prod(1 - t^{d_i}),
 *  - sum(d_i) - e = 1 (Gorenstein parameter one).
 *
 * Type names in reports are derived from the vertex count N = p0+p1+p2-2 of
 * the star quiver. The first-column labels of the original table are kept
 * verbatim in a separate field and never used for computation.
 */

#include <algorithm>
#include <array>
#include <cstddef>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "errors.hpp"
#include "graded_ring.hpp"
#include "grading_group.hpp"
#include "polynomial.hpp"
#include "verification.hpp"

namespace wpl {

/// Sorting permutation: sorted[i] == p[order[i]].
inline std::array<std::size_t, 3> sorting_permutation(const WeightSequence& p) {
    std::array<std::size_t, 3> order{0, 1, 2};
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return p[a] < p[b]; });
    return order;
}

struct DynkinClass {
    bool dynkin = false;
    /// "A4", "D6", "E8", ... from the vertex count, or "NotDynkin".
    std::string type_by_vertex_count = "NotDynkin";
    int vertex_count = 0;
    std::optional<std::string> paper_label;
    /// The first-column label with its parameters substituted, e.g. "A_{5}" for (1,2,3).
    std::optional<std::string> paper_label_instantiated;
};

enum class RowFamily { A, DEven, DOdd, E6, E7, E8 };

struct PresentationRow {
    std::string paper_label;
    std::string paper_label_instantiated;
    RowFamily family = RowFamily::A;
    WeightSequence weight{1, 1, 1};
    /// Generators (x, y, z) as polynomials in x0, x1, x2.
    std::array<Polynomial, 3> generators;
    std::array<int, 3> z_degrees{};
    /// Relation in the abstract variables x, y, z.
    Polynomial relation;
    int relation_z_degree = 0;
    /// l for the D rows, 0 otherwise.
    int parameter = 0;
    std::vector<std::string> flags;

    /// D rows at l = 1, whose label and degree cells are not self-consistent.
    bool smallest_parameter() const {
        return (family == RowFamily::DEven || family == RowFamily::DOdd) && parameter == 1;
    }
};

namespace detail {

inline Polynomial x(std::size_t s, int k = 1) { return Polynomial::variable(s, k); }

/// Renames sorted-weight variable i to the original variable order[i].
inline Polynomial rename_variables(const Polynomial& poly, const std::array<std::size_t, 3>& order) {
    Polynomial r;
    for (const auto& [e, c] : poly.terms()) {
        Exponents m{0, 0, 0};
        for (std::size_t i = 0; i < 3; ++i) m[order[i]] = e[i];
        r.add_term(m, c);
    }
    return r;
}

inline std::string subscript(const std::string& base, long long n) { return base + "_{" + std::to_string(n) + "}"; }

} // namespace detail

inline DynkinClass dynkin_classify(const WeightSequence& p) {
    DynkinClass out;
    out.vertex_count = p.vertex_count();
    if (!p.is_dynkin()) return out;
    out.dynkin = true;

    const auto order = sorting_permutation(p);
    const int a = p[order[0]], b = p[order[1]], c = p[order[2]];
    const int n = out.vertex_count;
    if (a == 1) {
        out.type_by_vertex_count = "A" + std::to_string(n);
        out.paper_label = "A_{p+q}";
        out.paper_label_instantiated = detail::subscript("A", b + c);
    } else if (b == 2) {
        out.type_by_vertex_count = "D" + std::to_string(n);
        const int l = c / 2;
        if (c % 2 == 0) {
            out.paper_label = "D_{2l-2}";
            out.paper_label_instantiated = detail::subscript("D", 2LL * l - 2);
        } else {
            out.paper_label = "D_{2l-1}";
            out.paper_label_instantiated = detail::subscript("D", 2LL * l - 1);
        }
    } else {
        out.type_by_vertex_count = "E" + std::to_string(n);
        out.paper_label = "E_" + std::to_string(n);
        out.paper_label_instantiated = out.paper_label;
    }
    return out;
}

inline PresentationRow table_row(const WeightSequence& p) {
    if (!p.is_dynkin()) throw no_table_row_error("weights " + p.to_string() + " are not of Dynkin type");
    using detail::x;
    const auto order = sorting_permutation(p);
    const int a = p[order[0]], b = p[order[1]], c = p[order[2]];
    const Polynomial X = Polynomial::variable(0), Y = Polynomial::variable(1), Z = Polynomial::variable(2);

    PresentationRow row;
    row.weight = p;
    if (a == 1) {
        const int n = b + c;
        row.family = RowFamily::A;
        row.paper_label = "A_{p+q}";
        row.generators = {x(1) * x(2), x(2, n), x(1, n)};
        row.z_degrees = {1, b, c};
        row.relation = X.pow(n) - Y * Z;
        row.relation_z_degree = n;
    } else if (b == 2 && c % 2 == 0) {
        const int l = c / 2;
        row.family = RowFamily::DEven;
        row.paper_label = "D_{2l-2}";
        row.parameter = l;
        row.generators = {x(2, 2), x(0, 2), x(0) * x(1) * x(2)};
        row.z_degrees = {2, 2 * l, 2 * l + 1};
        row.relation = Z.pow(2) + X * (Y.pow(2) + Y * X.pow(l));
        row.relation_z_degree = 4 * l + 2;
    } else if (b == 2) {
        const int l = (c - 1) / 2;
        row.family = RowFamily::DOdd;
        row.paper_label = "D_{2l-1}";
        row.parameter = l;
        row.generators = {x(2, 2), x(0) * x(1), x(0, 2) * x(2)};
        row.z_degrees = {2, 2 * l + 1, 2 * l + 2};
        row.relation = Z.pow(2) + X * (Y.pow(2) + Z * X.pow(l));
        row.relation_z_degree = 4 * l + 4;
    } else if (c == 3) {
        row.family = RowFamily::E6;
        row.paper_label = "E_6";
        row.generators = {x(0), x(1) * x(2), x(1, 3)};
        row.z_degrees = {3, 4, 6};
        row.relation = Z.pow(2) + Y.pow(3) + X.pow(2) * Z;
        row.relation_z_degree = 12;
    } else if (c == 4) {
        row.family = RowFamily::E7;
        row.paper_label = "E_7";
        row.generators = {x(1), x(2, 2), x(0) * x(2)};
        row.z_degrees = {4, 6, 9};
        row.relation = Z.pow(2) + Y.pow(3) + X.pow(3) * Y;
        row.relation_z_degree = 18;
    } else {
        row.family = RowFamily::E8;
        row.paper_label = "E_8";
        row.generators = {x(2), x(1), x(0)};
        row.z_degrees = {6, 10, 15};
        row.relation = Z.pow(2) + Y.pow(3) + X.pow(5);
        row.relation_z_degree = 30;
    }
    for (auto& gen : row.generators) gen = detail::rename_variables(gen, order);
    row.paper_label_instantiated = dynkin_classify(p).paper_label_instantiated.value_or(row.paper_label);
    if (row.smallest_parameter())
        row.flags.push_back("D row at smallest parameter l=1: label evaluates to " + row.paper_label_instantiated +
                            " while the star quiver has " + std::to_string(p.vertex_count()) +
                            " vertices; excluded from acceptance");
    return row;
}

// ---------------------------------------------------------------------------
// Checks

inline CheckResult check_generator_degrees(const GradingGroup& g, const PresentationRow& row) {
    const DegreeElement omega = g.dualizing_element();
    for (std::size_t i = 0; i < 3; ++i) {
        const DegreeElement expected = g.normalize(Integer(-row.z_degrees[i]) * omega);
        if (row.generators[i].is_zero())
            return CheckResult::fail("generator_degrees", std::string(presentation_variable_names[i]) + " is zero");
        for (const auto& [e, coef] : row.generators[i].terms()) {
            const DegreeElement got = degree_of_monomial(g, e);
            if (got != expected)
                return CheckResult::fail(
                    "generator_degrees",
                    std::string(presentation_variable_names[i]) + " = " + row.generators[i].to_string() +
                        " has degree [" + got.wire() + "] but Z-degree " + std::to_string(row.z_degrees[i]) +
                        " requires -" + std::to_string(row.z_degrees[i]) + "*omega = [" + expected.wire() + "]");
        }
    }
    return CheckResult::pass("generator_degrees");
}

/// The relation is Z-homogeneous of degree relation_z_degree under z_degrees.
inline CheckResult check_relation_homogeneity(const PresentationRow& row) {
    if (row.relation.is_zero()) return CheckResult::fail("relation_homogeneity", "relation is zero");
    for (const auto& [e, coef] : row.relation.terms()) {
        long long d = 0;
        for (std::size_t i = 0; i < 3; ++i) d += static_cast<long long>(e[i]) * row.z_degrees[i];
        if (d != row.relation_z_degree)
            return CheckResult::fail("relation_homogeneity",
                                     "term " + Polynomial::monomial(e, coef).to_string(presentation_variable_names) +
                                         " has Z-degree " + std::to_string(d) + ", expected " +
                                         std::to_string(row.relation_z_degree));
    }
    return CheckResult::pass("relation_homogeneity");
}

struct MembershipData {
    Polynomial substituted;
    DivisionResult division;
};

inline MembershipData relation_membership(const PresentationRow& row) {
    MembershipData m;
    m.substituted = row.relation.substitute(row.generators);
    m.division = reduce_mod_f(row.weight, m.substituted);
    return m;
}

inline CheckResult check_relation_membership(const PresentationRow& row) {
    const MembershipData m = relation_membership(row);
    if (m.division.remainder.is_zero())
        return CheckResult::pass("relation_membership", "cofactor = " + m.division.cofactor.to_string());
    return CheckResult::fail("relation_membership", "remainder = " + m.division.remainder.to_string());
}

inline CheckResult check_hilbert_match(const GradingGroup& g, const PresentationRow& row, std::size_t max_degree) {
    const auto& d = row.z_degrees;
    const long long needed = static_cast<long long>(row.relation_z_degree) + d[0] + d[1] + d[2];
    if (static_cast<long long>(max_degree) < needed)
        throw std::invalid_argument("hilbert check needs truncation >= " + std::to_string(needed));

    const auto h = hilbert_Rprime(g, max_degree);
    const auto closed = closed_form_series(d, row.relation_z_degree, max_degree);
    for (std::size_t n = 0; n <= max_degree; ++n)
        if (h[n] != closed[n])
            return CheckResult::fail("hilbert_match", "first mismatch at n=" + std::to_string(n) + ": dim R'_n = " +
                                                          h[n].str() + ", closed form = " + closed[n].str());

    // Cross-multiplied form: h(t) * prod(1 - t^{d_i}) == 1 - t^e through degree max_degree.
    std::vector<Integer> lhs = h;
    for (int di : d)
        for (std::size_t n = max_degree + 1; n-- > static_cast<std::size_t>(di);) lhs[n] -= lhs[n - di];
    for (std::size_t n = 0; n <= max_degree; ++n) {
        Integer expect = n == 0 ? 1 : 0;
        if (n == static_cast<std::size_t>(row.relation_z_degree)) expect -= 1;
        if (lhs[n] != expect)
            return CheckResult::fail("hilbert_match", "cross-multiplied series differs at n=" + std::to_string(n) +
                                                          ": " + lhs[n].str() + " vs " + expect.str());
    }
    return CheckResult::pass("hilbert_match", "agree through n=" + std::to_string(max_degree));
}

/// sum of generator Z-degrees minus the relation degree.
inline long long gorenstein_parameter(const PresentationRow& row) {
    return static_cast<long long>(row.z_degrees[0]) + row.z_degrees[1] + row.z_degrees[2] - row.relation_z_degree;
}

inline CheckResult check_gorenstein(const PresentationRow& row) {
    const long long a = gorenstein_parameter(row);
    if (a == 1) return CheckResult::pass("gorenstein_parameter", "1");
    return CheckResult::fail("gorenstein_parameter", "sum of degrees minus relation degree = " + std::to_string(a));
}

/// All presentation checks for one row, in a fixed order.
inline VerificationReport verify_presentation(const PresentationRow& row, std::size_t max_degree) {
    const GradingGroup g(row.weight);
    VerificationReport r;
    r.add(check_generator_degrees(g, row));
    r.add(check_relation_homogeneity(row));
    r.add(check_relation_membership(row));
    r.add(check_hilbert_match(g, row, max_degree));
    r.add(check_gorenstein(row));
    return r;
}

// ---------------------------------------------------------------------------
// Negative controls

enum class Tamper { degree, sign, exponent };

inline const char* to_string(Tamper t) {
    switch (t) {
    case Tamper::degree: return "degree";
    case Tamper::sign: return "sign";
    case Tamper::exponent: return "exponent";
    }
    return "?";
}

inline std::optional<Tamper> parse_tamper(const std::string& s) {
    if (s == "degree") return Tamper::degree;
    if (s == "sign") return Tamper::sign;
    if (s == "exponent") return Tamper::exponent;
    return std::nullopt;
}

/**
 * Corrupts one cell of a row:
 *  degree   - Z-degree of x raised by one,
 *  sign     - sign of the lexicographically largest relation term flipped,
 *  exponent - x-exponent of that term raised by one.
 */
inline PresentationRow tamper(PresentationRow row, Tamper kind) {
    switch (kind) {
    case Tamper::degree:
        row.z_degrees[0] += 1;
        break;
    case Tamper::sign:
    case Tamper::exponent: {
        const auto lead = *row.relation.terms().rbegin();
        Polynomial changed = row.relation - Polynomial::monomial(lead.first, lead.second);
        if (kind == Tamper::sign) {
            changed.add_term(lead.first, -lead.second);
        } else {
            Exponents e = lead.first;
            e[0] += 1;
            changed.add_term(e, lead.second);
        }
        row.relation = changed;
        break;
    }
    }
    row.flags.push_back(std::string("tampered: ") + to_string(kind));
    return row;
}

} // namespace wpl
