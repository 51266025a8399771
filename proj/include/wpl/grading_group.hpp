#pragma once

/**
 * @file grading_group.hpp
 * @brief The rank-one grading group L(p) of a weighted projective line.
 *
 * L(p) is generated by x0, x1, x2, c subject to p0*x0 = p1*x1 = p2*x2 = c.
 * Every element has a unique normal form l0*x0 + l1*x1 + l2*x2 + l*c with
 * 0 <= l_s < p_s, which is what all public operations return.
 */

#include <array>
#include <cstddef>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "integer.hpp"
#include "matrix.hpp"

namespace wpl {

class WeightSequence {
public:
    WeightSequence(long long p0, long long p1, long long p2) {
        for (long long w : {p0, p1, p2})
            if (w < 1) throw invalid_weight_error("weights must be positive integers, got " + std::to_string(w));
        p_ = {static_cast<int>(p0), static_cast<int>(p1), static_cast<int>(p2)};
        if (p_[0] != p0 || p_[1] != p1 || p_[2] != p2) throw invalid_weight_error("weight too large");
    }

    int operator[](std::size_t s) const { return p_.at(s); }
    const std::array<int, 3>& values() const noexcept { return p_; }

    /// N = p0 + p1 + p2 - 2, the index of the last object of the collection.
    int vertex_count() const noexcept { return p_[0] + p_[1] + p_[2] - 2; }

    /// 1/p0 + 1/p1 + 1/p2 > 1, decided exactly.
    bool is_dynkin() const {
        const Integer a = p_[0], b = p_[1], c = p_[2];
        return a * b + b * c + a * c > a * b * c;
    }

    std::string to_string() const {
        return "(" + std::to_string(p_[0]) + "," + std::to_string(p_[1]) + "," + std::to_string(p_[2]) + ")";
    }

    friend bool operator==(const WeightSequence&, const WeightSequence&) = default;

private:
    std::array<int, 3> p_{1, 1, 1};
};

/**
 * An element a0*x0 + a1*x1 + a2*x2 + m*c of L(p), as a raw integer 4-tuple.
 *
 * The tuple carries no weight information; two elements denote the same
 * group element iff GradingGroup::normalize maps them to the same tuple.
 */
struct DegreeElement {
    std::array<Integer, 4> v{};

    DegreeElement() = default;
    DegreeElement(Integer a0, Integer a1, Integer a2, Integer m)
        : v{std::move(a0), std::move(a1), std::move(a2), std::move(m)} {}

    static DegreeElement zero() { return {}; }
    static DegreeElement arm(std::size_t s, Integer k = 1) {
        DegreeElement e;
        e.v.at(s) = std::move(k);
        return e;
    }
    static DegreeElement canonical(Integer k = 1) { return {0, 0, 0, std::move(k)}; }

    const Integer& arm_coefficient(std::size_t s) const { return v.at(s); }
    const Integer& hub() const { return v[3]; }

    DegreeElement& operator+=(const DegreeElement& o) {
        for (std::size_t i = 0; i < 4; ++i) v[i] += o.v[i];
        return *this;
    }
    DegreeElement& operator-=(const DegreeElement& o) {
        for (std::size_t i = 0; i < 4; ++i) v[i] -= o.v[i];
        return *this;
    }
    friend DegreeElement operator+(DegreeElement a, const DegreeElement& b) { return a += b; }
    friend DegreeElement operator-(DegreeElement a, const DegreeElement& b) { return a -= b; }
    friend DegreeElement operator-(DegreeElement a) {
        for (auto& x : a.v) x = -x;
        return a;
    }
    friend DegreeElement operator*(const Integer& k, DegreeElement a) {
        for (auto& x : a.v) x *= k;
        return a;
    }
    friend bool operator==(const DegreeElement&, const DegreeElement&) = default;

    /// Wire format "a0 a1 a2 m".
    std::string wire() const { return v[0].str() + " " + v[1].str() + " " + v[2].str() + " " + v[3].str(); }

    static DegreeElement parse(std::string_view text) {
        std::istringstream in{std::string(text)};
        DegreeElement e;
        for (auto& x : e.v) {
            std::string tok;
            if (!(in >> tok)) throw parse_error("degree needs four integers \"a0 a1 a2 m\", got \"" + std::string(text) + "\"");
            try {
                x = Integer(tok);
            } catch (const std::exception&) {
                throw parse_error("not an integer in degree: \"" + tok + "\"");
            }
        }
        std::string extra;
        if (in >> extra) throw parse_error("trailing input in degree: \"" + std::string(text) + "\"");
        return e;
    }
};

struct GroupStructure {
    int rank = 0;
    /// Torsion invariant factors, each > 1 and dividing the next.
    std::vector<Integer> invariant_factors;
};

class GradingGroup {
public:
    using Term = std::pair<Integer, DegreeElement>;

    explicit GradingGroup(WeightSequence p) : p_(p), structure_(compute_structure(p)) {}

    const WeightSequence& weights() const noexcept { return p_; }

    /// Rows are the relations p_s*x_s - c, as vectors in Z^4.
    static IntegerMatrix relation_matrix(const WeightSequence& p) {
        IntegerMatrix r(3, 4);
        for (std::size_t s = 0; s < 3; ++s) {
            r(s, s) = p[s];
            r(s, 3) = -1;
        }
        return r;
    }

    DegreeElement normalize(const DegreeElement& raw) const {
        DegreeElement out;
        Integer hub = raw.v[3];
        for (std::size_t s = 0; s < 3; ++s) {
            const Integer ps = p_[s];
            out.v[s] = floor_mod(raw.v[s], ps);
            hub += (raw.v[s] - out.v[s]) / ps;
        }
        out.v[3] = std::move(hub);
        return out;
    }

    bool equal(const DegreeElement& a, const DegreeElement& b) const { return normalize(a - b) == DegreeElement::zero(); }

    DegreeElement linear_combine(std::span<const Term> terms) const {
        DegreeElement sum;
        for (const auto& [k, e] : terms) sum += k * e;
        return normalize(sum);
    }

    const GroupStructure& invariant_factors() const noexcept { return structure_; }

    /// omega = c - x0 - x1 - x2, normalized.
    DegreeElement dualizing_element() const { return normalize({-1, -1, -1, 1}); }

private:
    static GroupStructure compute_structure(const WeightSequence& p) {
        const SmithForm snf = smith_normal_form(relation_matrix(p));
        GroupStructure g;
        const auto divisors = snf.elementary_divisors();
        g.rank = static_cast<int>(4 - divisors.size());
        for (const auto& d : divisors)
            if (d > 1) g.invariant_factors.push_back(d);
        return g;
    }

    WeightSequence p_;
    GroupStructure structure_;
};

inline GradingGroup make_group(const WeightSequence& p) { return GradingGroup(p); }

} // namespace wpl
