#pragma once

/**
 * @file graded_ring.hpp
 * @brief Graded pieces of R(p) = k[x0,x1,x2] / (x0^p0 + x1^p1 + x2^p2).
 *
 * A monomial x0^a0 x1^a1 x2^a2 has degree a0*x0 + a1*x1 + a2*x2 in L(p).
 * Writing a_s = l_s + p_s*b_s shows that the monomials of a degree with
 * normal form (l0,l1,l2,l) correspond to triples b with b0+b1+b2 = l, so
 * there are C(l+2,2) of them. Since f is a nonzerodivisor of degree c,
 * dim R_x = m(x) - m(x - c).
 */

#include <array>
#include <cstddef>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "grading_group.hpp"
#include "integer.hpp"
#include "polynomial.hpp"

namespace wpl {

inline DegreeElement degree_of_monomial(const GradingGroup& g, const Exponents& e) {
    for (int a : e)
        if (a < 0) throw invalid_monomial_error("monomial exponents must be nonnegative");
    return g.normalize({e[0], e[1], e[2], 0});
}

/// m(x): number of monomials of k[x0,x1,x2] of degree x.
inline Integer monomial_count(const GradingGroup& g, const DegreeElement& x) {
    return monomials_of_total_degree(g.normalize(x).hub());
}

/// dim_k R(p)_x.
inline Integer graded_dim(const GradingGroup& g, const DegreeElement& x) {
    return monomial_count(g, x) - monomial_count(g, x - DegreeElement::canonical());
}

/// f = x0^p0 + x1^p1 + x2^p2.
inline Polynomial defining_polynomial(const WeightSequence& p) {
    return Polynomial::variable(0, p[0]) + Polynomial::variable(1, p[1]) + Polynomial::variable(2, p[2]);
}

/**
 * Graded reverse lexicographic order with x0 > x1 > x2, graded by the
 * L(p)-degree: x_s has weight lcm(p)/p_s, so every term of f has the same
 * weight and x0^p0 leads.
 */
class WeightedGrevlex {
public:
    explicit WeightedGrevlex(const WeightSequence& p) {
        const long long l = std::lcm(std::lcm(static_cast<long long>(p[0]), static_cast<long long>(p[1])),
                                     static_cast<long long>(p[2]));
        for (std::size_t s = 0; s < 3; ++s) w_[s] = l / p[s];
    }

    Integer weight(const Exponents& e) const {
        Integer total = 0;
        for (std::size_t s = 0; s < 3; ++s) total += Integer(w_[s]) * e[s];
        return total;
    }

    /// a < b in the order.
    bool operator()(const Exponents& a, const Exponents& b) const {
        const Integer wa = weight(a), wb = weight(b);
        if (wa != wb) return wa < wb;
        for (std::size_t s = 3; s-- > 0;)
            if (a[s] != b[s]) return a[s] > b[s];
        return false;
    }

private:
    std::array<long long, 3> w_{};
};

struct DivisionResult {
    Polynomial remainder;
    Polynomial cofactor;
};

/**
 * Division by f. Returns (remainder, cofactor) with
 * poly = cofactor * f + remainder and no remainder term divisible by x0^p0.
 * Since {f} is a Groebner basis of (f), remainder == 0 iff poly lies in (f).
 */
inline DivisionResult reduce_mod_f(const WeightSequence& p, const Polynomial& poly) {
    const WeightedGrevlex order(p);
    std::map<Exponents, Rational, WeightedGrevlex> work(order);
    for (const auto& [e, c] : poly.terms()) work.emplace(e, c);

    // x0^p0 -> -(x1^p1 + x2^p2)
    const std::array<Exponents, 2> tail{Exponents{0, p[1], 0}, Exponents{0, 0, p[2]}};

    DivisionResult out;
    while (!work.empty()) {
        auto lead = std::prev(work.end());
        const Exponents e = lead->first;
        const Rational c = lead->second;
        work.erase(lead);
        if (e[0] < p[0]) {
            out.remainder.add_term(e, c);
            continue;
        }
        const Exponents q{e[0] - p[0], e[1], e[2]};
        out.cofactor.add_term(q, c);
        for (const auto& t : tail) {
            const Exponents shifted{q[0] + t[0], q[1] + t[1], q[2] + t[2]};
            auto [it, inserted] = work.try_emplace(shifted, -c);
            if (!inserted) {
                it->second -= c;
                if (it->second == 0) work.erase(it);
            }
        }
    }
    return out;
}

/// h_n = dim R'(p)_n = dim R(p)_{-n*omega} for 0 <= n <= max_degree.
inline std::vector<Integer> hilbert_Rprime(const GradingGroup& g, std::size_t max_degree) {
    const DegreeElement minus_omega = -g.dualizing_element();
    std::vector<Integer> h;
    h.reserve(max_degree + 1);
    DegreeElement x = DegreeElement::zero();
    for (std::size_t n = 0; n <= max_degree; ++n) {
        h.push_back(graded_dim(g, x));
        x = g.normalize(x + minus_omega);
    }
    return h;
}

/// Coefficients of (1 - t^e) / prod_i (1 - t^{d_i}) up to t^max_degree.
inline std::vector<Integer> closed_form_series(const std::array<int, 3>& degrees, int relation_degree,
                                               std::size_t max_degree) {
    for (int d : degrees)
        if (d < 1) throw std::invalid_argument("generator degrees must be positive");
    if (relation_degree < 1) throw std::invalid_argument("relation degree must be positive");

    std::vector<Integer> s(max_degree + 1);
    s[0] = 1;
    if (static_cast<std::size_t>(relation_degree) <= max_degree) s[relation_degree] = -1;
    // Dividing by (1 - t^d) is a running sum with stride d.
    for (int d : degrees)
        for (std::size_t n = static_cast<std::size_t>(d); n <= max_degree; ++n) s[n] += s[n - d];
    return s;
}

/// Truncated Hilbert series of R'(p) together with the presentation data it is compared against.
struct HilbertData {
    std::vector<Integer> coefficients;
    std::array<int, 3> generator_degrees{};
    int relation_degree = 0;
};

} // namespace wpl
