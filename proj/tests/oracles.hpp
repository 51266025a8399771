#pragma once

// Independent reference computations used only by the tests.

#include <array>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include <wpl/wpl.hpp>

namespace oracle {

using wpl::Integer;
using wpl::Rational;

/// d in the span of (p0,0,0,-1), (0,p1,0,-1), (0,0,p2,-1), solved coordinatewise.
inline bool in_relation_lattice_direct(const wpl::WeightSequence& p, const std::array<Integer, 4>& d) {
    Integer k_sum = 0;
    for (std::size_t s = 0; s < 3; ++s) {
        if (d[s] % p[s] != 0) return false;
        k_sum += d[s] / p[s];
    }
    return d[3] == -k_sum;
}

/**
 * Same membership via Smith normal form: with U A V = D, x A = d is solvable
 * iff y D = d V is, i.e. (dV)_i divisible by D_ii and zero past the rank.
 */
inline bool in_relation_lattice_snf(const wpl::WeightSequence& p, const std::array<Integer, 4>& d) {
    const auto snf = wpl::smith_normal_form(wpl::GradingGroup::relation_matrix(p));
    std::vector<Integer> dv(4);
    for (std::size_t j = 0; j < 4; ++j)
        for (std::size_t i = 0; i < 4; ++i) dv[j] += d[i] * snf.right(i, j);
    for (std::size_t j = 0; j < 4; ++j) {
        const Integer diag = j < 3 ? snf.diagonal(j, j) : Integer(0);
        if (diag == 0) {
            if (dv[j] != 0) return false;
        } else if (dv[j] % diag != 0) {
            return false;
        }
    }
    return true;
}

inline std::array<Integer, 4> difference(const wpl::DegreeElement& a, const wpl::DegreeElement& b) {
    return {a.v[0] - b.v[0], a.v[1] - b.v[1], a.v[2] - b.v[2], a.v[3] - b.v[3]};
}

/// Monomials x0^a0 x1^a1 x2^a2 whose degree equals target, by enumeration.
inline std::vector<wpl::Exponents> monomials_of_degree(const wpl::WeightSequence& p, const wpl::DegreeElement& target) {
    // The homomorphism L(p) -> Z sending x_s to L/p_s and c to L bounds the search.
    const long long l = std::lcm(std::lcm(static_cast<long long>(p[0]), static_cast<long long>(p[1])),
                                 static_cast<long long>(p[2]));
    const std::array<long long, 3> w{l / p[0], l / p[1], l / p[2]};
    long long total = l * target.v[3].convert_to<long long>();
    for (std::size_t s = 0; s < 3; ++s) total += w[s] * target.v[s].convert_to<long long>();

    std::vector<wpl::Exponents> out;
    if (total < 0) return out;
    for (long long a0 = 0; a0 * w[0] <= total; ++a0)
        for (long long a1 = 0; a0 * w[0] + a1 * w[1] <= total; ++a1) {
            const long long rest = total - a0 * w[0] - a1 * w[1];
            if (rest % w[2] != 0) continue;
            const long long a2 = rest / w[2];
            const std::array<Integer, 4> d{Integer(a0) - target.v[0], Integer(a1) - target.v[1],
                                           Integer(a2) - target.v[2], -target.v[3]};
            if (in_relation_lattice_direct(p, d))
                out.push_back({static_cast<int>(a0), static_cast<int>(a1), static_cast<int>(a2)});
        }
    return out;
}

/// Rank over Q by plain Gaussian elimination.
inline std::size_t rank(std::vector<std::vector<Rational>> m) {
    std::size_t r = 0;
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            const Rational f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j)
                if (m[r][j] != 0) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

/**
 * dim R_x = #monomials of degree x minus the rank of multiplication by f
 * from the degree x - c monomials into the degree x monomials.
 */
inline long long brute_force_graded_dim(const wpl::WeightSequence& p, const wpl::DegreeElement& x) {
    const auto target = monomials_of_degree(p, x);
    const auto source = monomials_of_degree(p, x - wpl::DegreeElement::canonical());
    if (target.empty()) return 0;
    std::vector<std::vector<Rational>> m(source.size(), std::vector<Rational>(target.size()));
    for (std::size_t i = 0; i < source.size(); ++i)
        for (std::size_t s = 0; s < 3; ++s) {
            wpl::Exponents e = source[i];
            e[s] += p[s];
            for (std::size_t j = 0; j < target.size(); ++j)
                if (target[j] == e) m[i][j] += 1;
        }
    return static_cast<long long>(target.size() - rank(std::move(m)));
}

/// Coxeter number h of an ADE type name such as "A4", "D6", "E8".
inline long long classical_coxeter_number(const std::string& type) {
    const long long n = std::stoll(type.substr(1));
    switch (type[0]) {
    case 'A': return n + 1;
    case 'D': return 2 * n - 2;
    case 'E': return n == 6 ? 12 : n == 7 ? 18 : 30;
    }
    return -1;
}

/// Plain scan of the whole box [-b, b]^n for v^T C v == 2.
inline std::size_t naive_root_count(const wpl::IntegerMatrix& c, long long b) {
    const std::size_t n = c.rows();
    std::vector<long long> v(n, -b);
    std::size_t count = 0;
    for (;;) {
        Integer q = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) q += c(i, j) * v[i] * v[j];
        if (q == 2) ++count;
        std::size_t k = 0;
        while (k < n && v[k] == b) v[k++] = -b;
        if (k == n) break;
        ++v[k];
    }
    return count;
}

} // namespace oracle
