#pragma once

/**
 * @file quiver.hpp
 * @brief The star quiver of a weight sequence and the lattice data attached to it.
 *
 * Vertices are the twists x0, 2x0, ..., (p0-1)x0, x1, ..., (p2-1)x2, c of
 * the collection without its first object; every arm is a chain of arrows
 * labeled by its variable that ends in the hub c. For Dynkin weights the
 * path algebra of this quiver is the endomorphism algebra of the
 * collection, which is checked here on the level of Grothendieck groups:
 * Hom dimensions against path counts, Cartan matrices, Coxeter
 * transformation and roots.
 */

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "collection.hpp"
#include "errors.hpp"
#include "grading_group.hpp"
#include "matrix.hpp"
#include "presentation.hpp"
#include "verification.hpp"

namespace wpl {

struct Arrow {
    std::size_t source = 0;
    std::size_t target = 0;
    /// Arm variable index s of the label x_s.
    int label = 0;
};

struct Quiver {
    std::vector<DegreeElement> vertices;
    std::vector<Arrow> arrows;

    std::size_t size() const noexcept { return vertices.size(); }
};

inline Quiver build_quiver(const WeightSequence& p) {
    Quiver q;
    q.vertices = build_collection(p, false).twists;
    const std::size_t hub = q.vertices.size() - 1;
    std::size_t index = 0;
    for (int s = 0; s < 3; ++s) {
        for (int k = 1; k < p[static_cast<std::size_t>(s)]; ++k, ++index) {
            const bool last = k == p[static_cast<std::size_t>(s)] - 1;
            q.arrows.push_back({index, last ? hub : index + 1, s});
        }
    }
    return q;
}

/// Number of directed paths u -> v, the empty path included when u == v.
inline Integer path_count(const Quiver& q, std::size_t u, std::size_t v) {
    if (u >= q.size() || v >= q.size()) throw std::out_of_range("quiver vertex index out of range");
    // paths[w] = number of paths w -> v, filled by memoized descent; the quiver is acyclic.
    std::vector<std::optional<Integer>> paths(q.size());
    auto count = [&](auto&& self, std::size_t w) -> Integer {
        if (paths[w]) return *paths[w];
        Integer total = w == v ? 1 : 0;
        for (const auto& a : q.arrows)
            if (a.source == w) total += self(self, a.target);
        paths[w] = total;
        return total;
    };
    return count(count, u);
}

/// 2I minus the adjacency of the underlying graph.
inline IntegerMatrix cartan_from_quiver(const Quiver& q) {
    IntegerMatrix c = IntegerMatrix::identity(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) c(i, i) = 2;
    for (const auto& a : q.arrows) {
        c(a.source, a.target) -= 1;
        c(a.target, a.source) -= 1;
    }
    return c;
}

/// E + E^T: the symmetrized Euler form in the basis of the collection.
inline IntegerMatrix symmetrized_euler(const IntegerMatrix& e) {
    if (!e.is_square()) throw std::invalid_argument("Euler matrix must be square");
    return e + e.transpose();
}

/**
 * The symmetrized Euler form in the dual basis, E^{-1} + E^{-T}.
 *
 * The collection objects play the role of projective modules, whose Gram
 * matrix is E itself; the dual basis corresponds to simple modules, where
 * the symmetrized form is the Cartan matrix 2I - adjacency. The two are
 * congruent: E + E^T = E^T (E^{-1} + E^{-T}) E.
 */
inline IntegerMatrix cartan_from_euler(const IntegerMatrix& e) {
    if (!e.is_square()) throw std::invalid_argument("Euler matrix must be square");
    const IntegerMatrix inv = inverse_unimodular(e);
    return inv + inv.transpose();
}

/// Phi = -E^{-T} E acting on column vectors; satisfies Phi^T E Phi = E.
inline IntegerMatrix coxeter_matrix(const IntegerMatrix& e) {
    return -(inverse_unimodular(e).transpose() * e);
}

namespace detail {

inline long long euler_phi(long long m) {
    long long result = m;
    for (long long f = 2; f * f <= m; ++f) {
        if (m % f != 0) continue;
        while (m % f == 0) m /= f;
        result -= result / f;
    }
    if (m > 1) result -= result / m;
    return result;
}

/**
 * Largest order of a finite-order element of GL_n(Z). Such an element is
 * diagonalizable over C with roots of unity as eigenvalues, so its order is
 * lcm(m_i) over cyclotomic factors with sum of phi(m_i) <= n. Returns
 * nullopt when n is too large for the search.
 */
inline std::optional<long long> max_finite_order(std::size_t n) {
    if (n > 40) return std::nullopt;
    const long long limit = 2LL * static_cast<long long>(n) * static_cast<long long>(n) + 2;
    std::vector<std::set<long long>> reach(n + 1);
    reach[0].insert(1);
    for (long long m = 2; m <= limit; ++m) {
        const long long cost = euler_phi(m);
        if (cost > static_cast<long long>(n)) continue;
        for (std::size_t used = n + 1; used-- > 0;) {
            if (used + static_cast<std::size_t>(cost) > n) continue;
            for (long long l : std::set<long long>(reach[used]))
                reach[used + static_cast<std::size_t>(cost)].insert(std::lcm(l, m));
        }
    }
    long long best = n >= 1 ? 2 : 1;
    for (const auto& s : reach)
        if (!s.empty()) best = std::max(best, *s.rbegin());
    return best;
}

} // namespace detail

/**
 * Least k >= 1 with M^k = I, or nullopt when no such k <= bound exists.
 * Iteration stops early once k exceeds the largest possible finite order
 * of an integer matrix of that size.
 */
inline std::optional<long long> matrix_order(const IntegerMatrix& m, long long bound = 10000) {
    if (!m.is_square()) throw std::invalid_argument("matrix order of a non-square matrix");
    const IntegerMatrix id = IntegerMatrix::identity(m.rows());
    long long limit = bound;
    if (const auto cap = detail::max_finite_order(m.rows())) limit = std::min(limit, *cap);
    IntegerMatrix p = m;
    for (long long k = 1; k <= limit; ++k) {
        if (p == id) return k;
        p = p * m;
    }
    return std::nullopt;
}

struct RootSet {
    /// Sorted lexicographically.
    std::vector<std::vector<long long>> roots;

    std::size_t count() const noexcept { return roots.size(); }
    bool contains(const std::vector<long long>& v) const { return std::binary_search(roots.begin(), roots.end(), v); }
};

inline bool is_positive_definite(const IntegerMatrix& c) {
    if (!c.is_symmetric()) return false;
    const auto minors = leading_principal_minors(c);
    return std::all_of(minors.begin(), minors.end(), [](const Integer& d) { return d > 0; });
}

/**
 * All integer vectors v with v^T C v = 2 and |v_i| <= box_bound.
 *
 * The search completes squares, v^T C v = sum_i d_i (v_i + sum_{j>i} mu_ij v_j)^2,
 * and fixes coordinates from the last to the first, pruning every branch
 * whose partial sum already exceeds 2. The result equals a scan of the full
 * box. A root with a coordinate on the box boundary raises
 * box_too_small_error.
 */
inline RootSet enumerate_roots(const IntegerMatrix& c, long long box_bound = 8) {
    if (!c.is_square()) throw std::invalid_argument("form matrix must be square");
    if (!is_positive_definite(c))
        throw indefinite_form_error("quadratic form is not positive definite (or not symmetric)");
    if (box_bound < 1) throw std::invalid_argument("box bound must be positive");

    const std::size_t n = c.rows();
    std::vector<Rational> d(n);
    std::vector<std::vector<Rational>> mu(n, std::vector<Rational>(n));
    {
        std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(c(i, j));
        for (std::size_t i = 0; i < n; ++i) {
            d[i] = a[i][i];
            for (std::size_t j = i + 1; j < n; ++j) mu[i][j] = a[i][j] / d[i];
            for (std::size_t j = i + 1; j < n; ++j)
                for (std::size_t k = i + 1; k < n; ++k) a[j][k] -= a[i][j] * a[i][k] / d[i];
        }
    }

    RootSet out;
    if (n == 0) return out;
    std::vector<long long> v(n, 0);
    const Rational target = 2;

    auto descend = [&](auto&& self, std::size_t level_plus_one, const Rational& used) -> void {
        const std::size_t i = level_plus_one - 1;
        Rational center = 0;
        for (std::size_t j = i + 1; j < n; ++j)
            if (v[j] != 0) center += mu[i][j] * v[j];
        const Rational budget = target - used;

        auto visit = [&](long long x) -> bool {
            const Rational t = Rational(x) + center;
            const Rational contribution = d[i] * t * t;
            if (contribution > budget) return false;
            v[i] = x;
            if (i == 0) {
                if (used + contribution == target) out.roots.push_back(v);
            } else {
                self(self, i, used + contribution);
            }
            return true;
        };

        // Integers nearest to -center first, then outward in both directions.
        const Rational neg = -center;
        long long start = boost::multiprecision::numerator(neg).convert_to<long long>() /
                          boost::multiprecision::denominator(neg).convert_to<long long>();
        if (Rational(start) < neg) ++start;
        for (long long x = start; x <= box_bound; ++x) {
            if (x < -box_bound) continue;
            if (!visit(x)) break;
        }
        for (long long x = start - 1; x >= -box_bound; --x) {
            if (x > box_bound) continue;
            if (!visit(x)) break;
        }
        v[i] = 0;
    };
    descend(descend, n, Rational(0));

    std::sort(out.roots.begin(), out.roots.end());
    for (const auto& r : out.roots)
        for (long long x : r)
            if (x == box_bound || x == -box_bound)
                throw box_too_small_error("a root touches the box boundary " + std::to_string(box_bound));
    return out;
}

struct LatticeComparison {
    VerificationReport report;
    std::optional<long long> coxeter_order;
    std::optional<std::size_t> root_count;
};

/**
 * Compares the collection side (E_1..E_N) with the quiver side:
 * Cartan matrices, Hom dimensions against path counts, vanishing Ext^1,
 * Coxeter isometry and order, and the root count identity |roots| = N * order.
 */
inline LatticeComparison compare_lattices(const WeightSequence& p, long long box_bound = 8,
                                          long long order_bound = 10000) {
    LatticeComparison out;
    const char* names[] = {"cartan_agreement", "hom_equals_paths", "ext1_vanishing", "coxeter_isometry",
                           "coxeter_order_roots"};
    if (!p.is_dynkin()) {
        for (const char* n : names) out.report.add(CheckResult::not_applicable(n, "weights are not of Dynkin type"));
        return out;
    }

    const GradingGroup g(p);
    const ExceptionalCollection sub = build_collection(p, false);
    const Quiver q = build_quiver(p);
    const IntegerMatrix e = euler_matrix(g, sub);
    const IntegerMatrix cartan = cartan_from_quiver(q);
    const std::size_t n = sub.size();

    {
        const IntegerMatrix from_euler = cartan_from_euler(e);
        const IntegerMatrix congruent = e.transpose() * cartan * e;
        if (from_euler != cartan)
            out.report.add(CheckResult::fail(names[0], "E^{-1} + E^{-T} differs from 2I - adjacency"));
        else if (congruent != symmetrized_euler(e))
            out.report.add(CheckResult::fail(names[0], "E + E^T is not E^T C E"));
        else
            out.report.add(CheckResult::pass(names[0]));
    }
    {
        std::string witness;
        for (std::size_t i = 0; i < n && witness.empty(); ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const Integer h = hom_dim(g, sub[i], sub[j]);
                const Integer pc = path_count(q, i, j);
                if (h != pc) {
                    witness = "vertices " + std::to_string(i) + "," + std::to_string(j) + ": dim Hom = " + h.str() +
                              ", paths = " + pc.str();
                    break;
                }
            }
        out.report.add(witness.empty() ? CheckResult::pass(names[1], std::to_string(n * n) + " pairs")
                                       : CheckResult::fail(names[1], witness));
    }
    {
        std::string witness;
        for (std::size_t i = 0; i < n && witness.empty(); ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const Integer x = ext1_dim(g, sub[i], sub[j]);
                if (x != 0) {
                    witness = "dim Ext^1(E_" + std::to_string(i + 1) + ", E_" + std::to_string(j + 1) + ") = " + x.str();
                    break;
                }
            }
        out.report.add(witness.empty() ? CheckResult::pass(names[2]) : CheckResult::fail(names[2], witness));
    }

    const IntegerMatrix phi = coxeter_matrix(e);
    out.report.add(phi.transpose() * e * phi == e ? CheckResult::pass(names[3])
                                                  : CheckResult::fail(names[3], "Phi^T E Phi != E"));

    out.coxeter_order = matrix_order(phi, order_bound);
    if (!out.coxeter_order) {
        out.report.add(CheckResult::fail(names[4], "Coxeter transformation has no finite order within the bound"));
        return out;
    }
    const RootSet roots = enumerate_roots(cartan, box_bound);
    out.root_count = roots.count();
    const long long expected = static_cast<long long>(n) * *out.coxeter_order;
    const std::string summary = "order " + std::to_string(*out.coxeter_order) + ", roots " +
                                std::to_string(roots.count()) + ", N*order " + std::to_string(expected);
    out.report.add(static_cast<long long>(roots.count()) == expected ? CheckResult::pass(names[4], summary)
                                                                     : CheckResult::fail(names[4], summary));
    return out;
}

/// Graphviz rendering; vertex names are degree wire strings, arrow labels x0/x1/x2.
inline std::string to_dot(const Quiver& q) {
    std::ostringstream out;
    out << "digraph quiver {\n";
    for (const auto& v : q.vertices) out << "  \"" << v.wire() << "\";\n";
    for (const auto& a : q.arrows)
        out << "  \"" << q.vertices[a.source].wire() << "\" -> \"" << q.vertices[a.target].wire() << "\" [label=\"x"
            << a.label << "\"];\n";
    out << "}\n";
    return out.str();
}

} // namespace wpl
