#pragma once

/**
 * @file collection.hpp
 * @brief The exceptional collection of twisted structure sheaves O(d) on the
 * weighted projective line, and its Hom/Ext dimension matrices.
 *
 * Hom(O(a), O(b)) = R_{b-a}. Ext^1 is obtained from Serre duality with the
 * dualizing element: Ext^1(O(a), O(b)) = D Hom(O(b), O(a + omega)), so its
 * dimension is dim R_{a-b+omega}. Higher Ext groups vanish.
 */

#include <cstddef>
#include <string>
#include <vector>

#include "graded_ring.hpp"
#include "grading_group.hpp"
#include "matrix.hpp"
#include "verification.hpp"

namespace wpl {

struct ExceptionalCollection {
    std::vector<DegreeElement> twists;

    std::size_t size() const noexcept { return twists.size(); }
    const DegreeElement& operator[](std::size_t i) const { return twists.at(i); }
};

/// (O, O(x0), ..., O((p0-1)x0), O(x1), ..., O((p2-1)x2), O(c)); without the leading O when include_zero is false.
inline ExceptionalCollection build_collection(const WeightSequence& p, bool include_zero = true) {
    ExceptionalCollection coll;
    if (include_zero) coll.twists.push_back(DegreeElement::zero());
    for (std::size_t s = 0; s < 3; ++s)
        for (int k = 1; k < p[s]; ++k) coll.twists.push_back(DegreeElement::arm(s, k));
    coll.twists.push_back(DegreeElement::canonical());
    return coll;
}

inline Integer hom_dim(const GradingGroup& g, const DegreeElement& a, const DegreeElement& b) {
    return graded_dim(g, b - a);
}

inline Integer ext1_dim(const GradingGroup& g, const DegreeElement& a, const DegreeElement& b) {
    return graded_dim(g, a - b + g.dualizing_element());
}

inline CheckResult check_strong_exceptional(const GradingGroup& g, const ExceptionalCollection& coll) {
    const std::string name = "strong_exceptional";
    auto obj = [&](std::size_t i) { return "E_" + std::to_string(i) + " = O(" + coll[i].wire() + ")"; };
    for (std::size_t i = 0; i < coll.size(); ++i) {
        const Integer e = hom_dim(g, coll[i], coll[i]);
        if (e != 1) return CheckResult::fail(name, "dim Hom(" + obj(i) + ", itself) = " + e.str());
    }
    for (std::size_t i = 0; i < coll.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
            const Integer h = hom_dim(g, coll[i], coll[j]);
            if (h != 0) return CheckResult::fail(name, "dim Hom(" + obj(i) + ", " + obj(j) + ") = " + h.str());
        }
    for (std::size_t i = 0; i < coll.size(); ++i)
        for (std::size_t j = 0; j < coll.size(); ++j) {
            const Integer x = ext1_dim(g, coll[i], coll[j]);
            if (x != 0) return CheckResult::fail(name, "dim Ext^1(" + obj(i) + ", " + obj(j) + ") = " + x.str());
        }
    return CheckResult::pass(name, std::to_string(coll.size()) + " objects");
}

/// E_ij = dim Hom(E_i, E_j) - dim Ext^1(E_i, E_j).
inline IntegerMatrix euler_matrix(const GradingGroup& g, const ExceptionalCollection& coll) {
    const std::size_t n = coll.size();
    IntegerMatrix e(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) e(i, j) = hom_dim(g, coll[i], coll[j]) - ext1_dim(g, coll[i], coll[j]);
    return e;
}

} // namespace wpl
