#include <catch2/catch_amalgamated.hpp>

#include <wpl/cli.hpp>

using wpl::cli::Command;
using wpl::cli::parse_args;
using wpl::cli::run;
using Json = nlohmann::ordered_json;

namespace {

wpl::cli::Result invoke(const std::vector<std::string>& args) { return run(parse_args(args)); }

Json invoke_json(const std::vector<std::string>& args) { return Json::parse(invoke(args).output); }

} // namespace

TEST_CASE("parse_args") {
    const Command c = parse_args({"verify", "2", "3", "5", "--max", "100", "--tamper", "sign"});
    CHECK(c.name == "verify");
    CHECK(c.weights.values() == std::array<int, 3>{2, 3, 5});
    CHECK(c.max_degree == 100);
    CHECK(c.corrupt == wpl::Tamper::sign);

    const Command d = parse_args({"dim", "2", "3", "4", "--degree", "1 2 3 -2"});
    CHECK(d.degree == "1 2 3 -2");

    CHECK_FALSE(parse_args({"collection", "2", "2", "2", "--no-e0"}).include_zero);
    CHECK(parse_args({"quiver", "2", "2", "2", "--format", "dot"}).format == "dot");
}

TEST_CASE("usage errors") {
    using wpl::cli::usage_error;
    CHECK_THROWS_AS(parse_args({}), usage_error);
    CHECK_THROWS_AS(parse_args({"classify", "2", "3"}), usage_error);
    CHECK_THROWS_AS(parse_args({"classify", "2", "3", "0"}), usage_error);
    CHECK_THROWS_AS(parse_args({"classify", "2", "x", "3"}), usage_error);
    CHECK_THROWS_AS(parse_args({"frobnicate", "2", "3", "5"}), usage_error);
    CHECK_THROWS_AS(parse_args({"dim", "2", "3", "5"}), usage_error);
    CHECK_THROWS_AS(parse_args({"dim", "2", "3", "5", "--degree", "1 2"}), usage_error);
    CHECK_THROWS_AS(parse_args({"reduce", "2", "3", "5", "--poly", "x7"}), usage_error);
    CHECK_THROWS_AS(parse_args({"verify", "2", "3", "5", "--tamper", "color"}), usage_error);
    CHECK_THROWS_AS(parse_args({"roots", "2", "3", "5", "--box", "0"}), usage_error);
    CHECK_THROWS_AS(parse_args({"quiver", "2", "3", "5", "--format", "svg"}), usage_error);
    CHECK_THROWS_AS(parse_args({"classify", "2", "3", "5", "--max", "4"}), usage_error);
    CHECK_THROWS_AS(parse_args({"classify", "--help"}), wpl::cli::help_requested);
}

TEST_CASE("every command emits the common header") {
    for (const auto& name : wpl::cli::command_names()) {
        std::vector<std::string> args{name, "2", "3", "4"};
        if (name == "dim") args.insert(args.end(), {"--degree", "0 0 0 1"});
        if (name == "reduce") args.insert(args.end(), {"--poly", "x0^3"});
        if (name == "hilbert") args.insert(args.end(), {"--max", "20"});
        const auto r = invoke(args);
        INFO(name);
        REQUIRE(r.exit_code == 0);
        const Json j = Json::parse(r.output);
        CHECK(j["schema_version"] == 1);
        CHECK(j["command"] == name);
        CHECK(j["weights"] == Json::array({2, 3, 4}));
        // byte-identical on a second run
        CHECK(invoke(args).output == r.output);
    }
}

TEST_CASE("command outputs") {
    const Json cls = invoke_json({"classify", "5", "3", "2"});
    CHECK(cls["type_by_vertex_count"] == "E8");
    CHECK(cls["vertex_count"] == 8);

    const Json grp = invoke_json({"group", "2", "3", "4", "--degree", "-7 5 9 0"});
    CHECK(grp["normal_form"] == "1 2 1 -1");
    CHECK(grp["invariant_factors"] == Json::array({2}));

    const Json dim = invoke_json({"dim", "2", "3", "4", "--degree", "0 0 0 1"});
    CHECK(dim["monomial_count"] == 3);
    CHECK(dim["graded_dim"] == 2);

    const Json red = invoke_json({"reduce", "2", "3", "4", "--poly", "x0^3"});
    CHECK(red["remainder"] == "-x0^1*x1^3 - x0^1*x2^4");
    CHECK(red["in_ideal"] == false);

    const Json hil = invoke_json({"hilbert", "1", "1", "1", "--max", "4"});
    CHECK(hil["coefficients"] == Json::array({1, 3, 5, 7, 9}));
    CHECK(hil["closed_form"]["matches"] == true);
    CHECK(invoke_json({"hilbert", "2", "3", "6", "--max", "4"})["closed_form"].is_null());

    const Json col = invoke_json({"collection", "2", "2", "2", "--no-e0"});
    CHECK(col["length"] == 4);
    CHECK(col["strong_exceptional"]["pass"] == true);

    const Json cox = invoke_json({"coxeter", "2", "3", "5"});
    CHECK(cox["order"] == 30);
    CHECK(cox["isometry"] == true);
    CHECK(invoke_json({"coxeter", "2", "3", "6"})["order"].is_null());

    const Json car = invoke_json({"cartan", "2", "2", "2"});
    CHECK(car["agree"] == true);
    CHECK(car["determinant"] == 4);

    const Json roots = invoke_json({"roots", "2", "2", "2"});
    CHECK(roots["count"] == 24);
    CHECK(invoke_json({"roots", "3", "3", "3"})["applicable"] == false);

    const Json quiv = invoke_json({"quiver", "1", "1", "2"});
    CHECK(quiv["arrows"][0]["label"] == "x2");
    CHECK(invoke({"quiver", "1", "1", "2", "--format", "dot"}).output.rfind("digraph quiver {", 0) == 0);
}

TEST_CASE("verify exit codes") {
    const auto ok = invoke({"verify", "2", "3", "5"});
    CHECK(ok.exit_code == 0);
    const Json j = Json::parse(ok.output);
    CHECK(j["passed"] == true);
    CHECK(j["coxeter_order"] == 30);
    CHECK(j["root_count"] == 240);

    const Json affine = invoke_json({"verify", "2", "3", "6"});
    CHECK(affine["passed"] == true);
    for (const auto& c : affine["checks"]) {
        if (c["name"] == "strong_exceptional") continue;
        CHECK(c["status"] == "not-applicable");
        CHECK(c["pass"].is_null());
    }

    for (const char* kind : {"degree", "sign", "exponent"}) {
        const auto bad = invoke({"verify", "2", "3", "4", "--tamper", kind});
        CHECK(bad.exit_code == 1);
        CHECK(Json::parse(bad.output)["passed"] == false);
    }
}

TEST_CASE("runtime errors become a JSON error document") {
    const auto r = invoke({"roots", "2", "2", "2", "--box", "1"});
    CHECK(r.exit_code == 1);
    CHECK(Json::parse(r.output).contains("error"));

    const auto h = invoke({"verify", "2", "3", "5", "--max", "10"});
    CHECK(h.exit_code == 1);
    CHECK(Json::parse(h.output).contains("error"));
}
