#pragma once

/**
 * @file cli.hpp
 * @brief Argument parsing and command execution behind the `wpl` tool.
 *
 * Every command prints one JSON document (or DOT for `quiver --format dot`).
 * Exit codes: 0 success, 1 a verification check failed or the computation
 * raised an error, 2 usage error.
 */

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "collection.hpp"
#include "errors.hpp"
#include "graded_ring.hpp"
#include "grading_group.hpp"
#include "presentation.hpp"
#include "quiver.hpp"
#include "report.hpp"
#include "verify.hpp"

namespace wpl::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failed = 1;
inline constexpr int exit_usage = 2;

struct usage_error : error {
    using error::error;
};

/// Thrown by parse_args for --help; carries the help text.
struct help_requested : error {
    using error::error;
};

inline const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names{"classify", "group",   "dim",    "reduce",  "hilbert", "verify",
                                                "collection", "euler", "quiver", "cartan", "coxeter", "roots"};
    return names;
}

struct Command {
    std::string name;
    WeightSequence weights{1, 1, 1};
    std::optional<std::string> degree;
    std::optional<std::string> poly;
    std::size_t max_degree = 500;
    long long box = 8;
    std::string format = "json";
    bool include_zero = true;
    std::optional<Tamper> corrupt;
};

struct Result {
    int exit_code = exit_ok;
    std::string output;
};

inline Command parse_args(const std::vector<std::string>& args) {
    CLI::App app{"Weighted projective lines, simple singularities and Dynkin quivers", "wpl"};
    app.require_subcommand(1);

    std::vector<long long> weights;
    std::string degree, poly, format = "json", tamper_name;
    std::size_t max_degree = 500;
    long long box = 8;
    bool no_e0 = false;

    for (const auto& name : command_names()) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("weights", weights, "three positive integers p0 p1 p2")->expected(3)->required();
        if (name == "dim")
            sub->add_option("--degree", degree, "degree \"a0 a1 a2 m\"")->required();
        if (name == "group") sub->add_option("--degree", degree, "degree \"a0 a1 a2 m\" to normalize");
        if (name == "reduce") sub->add_option("--poly", poly, "polynomial in x0, x1, x2")->required();
        if (name == "hilbert" || name == "verify")
            sub->add_option("--max", max_degree, "series truncation degree")->check(CLI::NonNegativeNumber);
        if (name == "verify")
            sub->add_option("--tamper", tamper_name, "corrupt the presentation row")
                ->check(CLI::IsMember({"degree", "sign", "exponent"}));
        if (name == "roots") sub->add_option("--box", box, "coordinate bound")->check(CLI::PositiveNumber);
        if (name == "quiver") sub->add_option("--format", format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
        if (name == "collection" || name == "euler")
            sub->add_flag("--no-e0", no_e0, "drop the first object O");
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        throw help_requested(app.help());
    } catch (const CLI::ParseError& e) {
        throw usage_error(e.what());
    }

    Command cmd;
    for (const auto& name : command_names())
        if (app.got_subcommand(name)) cmd.name = name;
    try {
        cmd.weights = WeightSequence(weights.at(0), weights.at(1), weights.at(2));
        if (!degree.empty()) {
            DegreeElement::parse(degree);
            cmd.degree = degree;
        }
        if (!poly.empty()) {
            Polynomial::parse(poly);
            cmd.poly = poly;
        }
    } catch (const error& e) {
        throw usage_error(e.what());
    }
    cmd.max_degree = max_degree;
    cmd.box = box;
    cmd.format = format;
    cmd.include_zero = !no_e0;
    if (!tamper_name.empty()) cmd.corrupt = parse_tamper(tamper_name);
    return cmd;
}

namespace detail {

using report::json;

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

inline Result run_command(const Command& cmd) {
    const WeightSequence& p = cmd.weights;
    const GradingGroup g(p);
    json d = report::document(cmd.name, p);

    if (cmd.name == "classify") {
        d.update(report::classification(dynkin_classify(p)));
    } else if (cmd.name == "group") {
        const GroupStructure& s = g.invariant_factors();
        d["rank"] = s.rank;
        d["invariant_factors"] = report::integers(s.invariant_factors);
        d["dualizing_element"] = g.dualizing_element().wire();
        if (cmd.degree) {
            const DegreeElement raw = DegreeElement::parse(*cmd.degree);
            d["degree"] = raw.wire();
            d["normal_form"] = g.normalize(raw).wire();
        }
    } else if (cmd.name == "dim") {
        const DegreeElement x = g.normalize(DegreeElement::parse(*cmd.degree));
        d["degree"] = x.wire();
        d["monomial_count"] = report::integer(monomial_count(g, x));
        d["graded_dim"] = report::integer(graded_dim(g, x));
    } else if (cmd.name == "reduce") {
        const Polynomial in = Polynomial::parse(*cmd.poly);
        const DivisionResult r = reduce_mod_f(p, in);
        d["poly"] = in.to_string();
        d["remainder"] = r.remainder.to_string();
        d["cofactor"] = r.cofactor.to_string();
        d["in_ideal"] = r.remainder.is_zero();
    } else if (cmd.name == "hilbert") {
        const auto h = hilbert_Rprime(g, cmd.max_degree);
        d["max"] = cmd.max_degree;
        d["coefficients"] = report::integers(h);
        if (p.is_dynkin()) {
            const PresentationRow row = table_row(p);
            const auto closed = closed_form_series(row.z_degrees, row.relation_z_degree, cmd.max_degree);
            json cf;
            cf["generator_degrees"] = row.z_degrees;
            cf["relation_degree"] = row.relation_z_degree;
            cf["matches"] = closed == h;
            d["closed_form"] = std::move(cf);
        } else {
            d["closed_form"] = nullptr;
        }
    } else if (cmd.name == "verify") {
        const FullReport r = verify_all(p, cmd.max_degree, cmd.corrupt);
        d = report::full_report(r);
        return {r.passed() ? exit_ok : exit_failed, dump(d)};
    } else if (cmd.name == "collection") {
        const ExceptionalCollection c = build_collection(p, cmd.include_zero);
        d["include_e0"] = cmd.include_zero;
        d["length"] = c.size();
        d["twists"] = report::twists(c);
        const CheckResult strong = check_strong_exceptional(g, c);
        d["strong_exceptional"] = report::check(strong);
    } else if (cmd.name == "euler") {
        const ExceptionalCollection c = build_collection(p, cmd.include_zero);
        d["include_e0"] = cmd.include_zero;
        d["twists"] = report::twists(c);
        d["matrix"] = report::matrix(euler_matrix(g, c));
    } else if (cmd.name == "quiver") {
        const Quiver q = build_quiver(p);
        if (cmd.format == "dot") return {exit_ok, to_dot(q)};
        d.update(report::quiver(q));
    } else if (cmd.name == "cartan") {
        const Quiver q = build_quiver(p);
        const IntegerMatrix e = euler_matrix(g, build_collection(p, false));
        const IntegerMatrix from_quiver = cartan_from_quiver(q);
        const IntegerMatrix from_euler = cartan_from_euler(e);
        d["from_quiver"] = report::matrix(from_quiver);
        d["from_euler"] = report::matrix(from_euler);
        d["symmetrized_euler"] = report::matrix(symmetrized_euler(e));
        d["determinant"] = report::integer(determinant(from_quiver));
        d["agree"] = from_quiver == from_euler;
    } else if (cmd.name == "coxeter") {
        const IntegerMatrix e = euler_matrix(g, build_collection(p, false));
        const IntegerMatrix phi = coxeter_matrix(e);
        d["matrix"] = report::matrix(phi);
        d["isometry"] = phi.transpose() * e * phi == e;
        const auto order = matrix_order(phi);
        d["order"] = order ? json(*order) : json(nullptr);
    } else if (cmd.name == "roots") {
        const IntegerMatrix c = cartan_from_quiver(build_quiver(p));
        d["box"] = cmd.box;
        if (!is_positive_definite(c)) {
            d["applicable"] = false;
            d["reason"] = "Cartan form is not positive definite";
            return {exit_ok, dump(d)};
        }
        const RootSet roots = enumerate_roots(c, cmd.box);
        d["applicable"] = true;
        d["count"] = roots.count();
        d["roots"] = roots.roots;
    }
    return {exit_ok, dump(d)};
}

} // namespace detail

inline Result run(const Command& cmd) {
    try {
        return detail::run_command(cmd);
    } catch (const std::exception& e) {
        report::json d = report::document(cmd.name, cmd.weights);
        d["error"] = e.what();
        return {exit_failed, detail::dump(d)};
    }
}

} // namespace wpl::cli
