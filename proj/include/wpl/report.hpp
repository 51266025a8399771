#pragma once

/**
 * @file report.hpp
 * @brief JSON encodings of library values. All numbers are exact integers.
 */

#include <string>
#include <vector>

#include <json.hpp>

#include "collection.hpp"
#include "integer.hpp"
#include "matrix.hpp"
#include "quiver.hpp"
#include "verification.hpp"
#include "verify.hpp"

namespace wpl::report {

using json = nlohmann::ordered_json;

inline constexpr int schema_version = 1;

inline json integer(const Integer& v) { return to_int64(v); }

inline json integers(const std::vector<Integer>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(integer(x));
    return a;
}

inline json matrix(const IntegerMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(integer(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline json weights(const WeightSequence& p) { return json::array({p[0], p[1], p[2]}); }

/// Document skeleton shared by every command.
inline json document(const std::string& command, const WeightSequence& p) {
    json d;
    d["schema_version"] = schema_version;
    d["command"] = command;
    d["weights"] = weights(p);
    return d;
}

inline json twists(const ExceptionalCollection& c) {
    json a = json::array();
    for (const auto& t : c.twists) a.push_back(t.wire());
    return a;
}

inline json check(const CheckResult& c) {
    json j;
    j["name"] = c.name;
    if (c.outcome == Outcome::not_applicable)
        j["pass"] = nullptr;
    else
        j["pass"] = c.passed();
    j["status"] = to_string(c.outcome);
    j["witness"] = c.witness;
    return j;
}

inline json classification(const DynkinClass& c) {
    json j;
    j["dynkin"] = c.dynkin;
    j["type_by_vertex_count"] = c.type_by_vertex_count;
    j["vertex_count"] = c.vertex_count;
    j["paper_label"] = c.paper_label ? json(*c.paper_label) : json(nullptr);
    j["paper_label_instantiated"] = c.paper_label_instantiated ? json(*c.paper_label_instantiated) : json(nullptr);
    return j;
}

inline json quiver(const Quiver& q) {
    json j;
    json vs = json::array();
    for (const auto& v : q.vertices) vs.push_back(v.wire());
    j["vertices"] = std::move(vs);
    json as = json::array();
    for (const auto& a : q.arrows) {
        json arrow;
        arrow["source"] = q.vertices[a.source].wire();
        arrow["target"] = q.vertices[a.target].wire();
        arrow["label"] = "x" + std::to_string(a.label);
        as.push_back(std::move(arrow));
    }
    j["arrows"] = std::move(as);
    return j;
}

inline json full_report(const FullReport& r) {
    json d = document("verify", r.weights);
    d.update(classification(r.classification));
    d["flags"] = r.flags;
    json checks = json::array();
    for (const auto& c : r.report.checks) checks.push_back(check(c));
    d["checks"] = std::move(checks);
    d["coxeter_order"] = r.coxeter_order ? json(*r.coxeter_order) : json(nullptr);
    d["root_count"] = r.root_count ? json(*r.root_count) : json(nullptr);
    d["passed"] = r.passed();
    return d;
}

} // namespace wpl::report
