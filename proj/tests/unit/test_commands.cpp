#include <doctest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qlax/commands.hpp"
#include "qlax/error.hpp"

using namespace qlax;
using nlohmann::json;

namespace {

std::string read_problem(const std::string& name) {
    std::ifstream in(std::string(QLAX_SOURCE_DIR) + "/problems/" + name);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

CommonOptions json_opts() {
    CommonOptions o;
    o.format = Format::Json;
    return o;
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

} // namespace

TEST_CASE("resolve_format") {
    CHECK(resolve_format("text", nullptr) == Format::Text);
    CHECK(resolve_format("json", nullptr) == Format::Json);
    CHECK(resolve_format("text", "json") == Format::Json);
    CHECK(resolve_format("json", "") == Format::Json);
    CHECK_THROWS_AS(resolve_format("text", "yaml"), ValidationError);
}

TEST_CASE("cmd_commutator") {
    const CommonOptions text;
    CHECK(cmd_commutator("d", "u", text).out == "[d, u] = u_1\n");
    CHECK(cmd_commutator("-4*d^3 + 3*(d*u + u*d)", "-d^2 + u", text).out ==
          "[-4*d^3 + 6*u*d + 3*u_1, -d^2 + u] = 6*u*u_1 - u_3\n");
    CHECK(cmd_commutator("d*u + 1", "d*u + 1", text).out == "[u*d + u_1 + 1, u*d + u_1 + 1] = 0\n");

    const auto r = cmd_commutator("d", "u", json_opts());
    CHECK(r.exit_code == kExitPass);
    const json j = json::parse(r.out);
    CHECK(j["schema"] == "qlax.commutator/1");
    CHECK(j["commutator"]["terms"][0]["coeff"] == "u_1");
    CHECK(j["commutator"]["floor"] == "exact");

    const auto bad = cmd_commutator("d +", "u", text);
    CHECK(bad.exit_code == kExitInputError);
    CHECK(contains(bad.err, "1:4"));
    CHECK(bad.out.empty());
    CHECK(cmd_commutator("v", "u", text).exit_code == kExitInputError);
}

TEST_CASE("cmd_kdv_verify") {
    const auto r = cmd_kdv_verify(std::nullopt, {});
    CHECK(r.exit_code == kExitPass);
    CHECK(contains(r.out, "[P, L] = 6*u*u_1 - u_3"));
    CHECK(contains(r.out, "PASS"));

    const auto bad = cmd_kdv_verify(Rational(1), {});
    CHECK(bad.exit_code == kExitFail);
    CHECK(contains(bad.out, "difference = 2*u_1*d + u_2"));
    CHECK(contains(bad.out, "FAIL"));

    const json j = json::parse(cmd_kdv_verify(std::nullopt, json_opts()).out);
    CHECK(j["pass"] == true);
    CHECK(j["commutator"] == "6*u*u_1 - u_3");
    CHECK(j["difference"] == "0");
    CHECK(json::parse(cmd_kdv_verify(Rational(1, 3), json_opts()).out)["pass"] == false);
}

TEST_CASE("cmd_lax_solve") {
    SUBCASE("KdV, N = 2: q^1 coefficient of L_q is t (6 u u_1 - u_3)") {
        const auto r = cmd_lax_solve(read_problem("kdv.json"), json_opts());
        CHECK(r.exit_code == kExitPass);
        const json j = json::parse(r.out);
        CHECK(j["pass"] == true);
        CHECK(j["residual"]["zero"] == true);
        const json& q1 = j["Lq"]["coeffs"][1];
        REQUIRE(q1.size() == 2);
        CHECK(q1[0]["terms"].empty());
        CHECK(q1[1]["terms"][0]["coeff"] == "6*u*u_1 - u_3");
        CHECK(q1[1]["terms"][0]["order"] == 0);
    }
    SUBCASE("nilpotent matrix: L_q = [[1, -2qt], [0, -1]]") {
        const auto r = cmd_lax_solve(read_problem("nilpotent.json"), {});
        CHECK(r.exit_code == kExitPass);
        CHECK(contains(r.out, "L_q = W L0 W^-1:\n  q^0: [[1, 0], [0, -1]]\n  q^1: t*([[0, -2], [0, 0]])\n  q^2: 0\n"));
    }
    SUBCASE("N = 0 is rejected") {
        CommonOptions o;
        o.qorder = 0;
        const auto r = cmd_lax_solve(read_problem("nilpotent.json"), o);
        CHECK(r.exit_code == kExitInputError);
        CHECK(contains(r.err, "N must be >= 1"));
    }
    SUBCASE("--qorder overrides the file") {
        CommonOptions o = json_opts();
        o.qorder = 4;
        CHECK(json::parse(cmd_lax_solve(read_problem("nilpotent.json"), o).out)["N"] == 4);
    }
    SUBCASE("malformed input") {
        CHECK(cmd_lax_solve("{", {}).exit_code == kExitInputError);
        CHECK(cmd_lax_solve(R"({"schema": "qlax.problem/1", "backend": "matrix", "N": 2,
                               "L0": [["1", "x"]], "P": []})", {}).exit_code == kExitInputError);
        CHECK(cmd_lax_solve(R"({"schema": "qlax.problem/1", "backend": "matrix", "N": 2,
                               "L0": [["1", "0"], ["0", "1"]],
                               "P": [{"degree": 0, "value": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]}]})",
                            {}).exit_code == kExitInputError);
        // t-degree of P must stay below N
        CHECK(cmd_lax_solve(R"({"schema": "qlax.problem/1", "backend": "matrix", "N": 1,
                               "L0": [["1"]], "P": [{"degree": 1, "value": [["1"]]}]})", {}).exit_code ==
              kExitInputError);
    }
}

TEST_CASE("cmd_symmetry") {
    SUBCASE("identity S0") {
        std::string text = read_problem("nilpotent.json");
        text.insert(text.rfind('}'), R"(, "S0": [{"left": "identity", "right": "identity"}])");
        const auto r = cmd_symmetry(text, json_opts());
        CHECK(r.exit_code == kExitPass);
        const json j = json::parse(r.out);
        CHECK(j["symmetry3_residual_zero"] == true);
        CHECK(j["symmetry2_residual_zero"] == true);
        CHECK(j["transported_solution"] == true);
    }
    SUBCASE("random matrix S0") {
        const auto r = cmd_symmetry(read_problem("random_symmetry.json"), {});
        CHECK(r.exit_code == kExitPass);
        CHECK(contains(r.out, "PASS\n"));
        CHECK_FALSE(contains(r.out, "FAIL"));
    }
    SUBCASE("KdV with S0 = (L0, 1)") {
        CHECK(cmd_symmetry(read_problem("kdv_symmetry.json"), {}).exit_code == kExitPass);
    }
    SUBCASE("missing S0 names the field") {
        const auto r = cmd_symmetry(read_problem("kdv.json"), {});
        CHECK(r.exit_code == kExitInputError);
        CHECK(contains(r.err, "'S0'"));
    }
    SUBCASE("extra probes") {
        CommonOptions o = json_opts();
        o.probe_set = R"({"schema": "qlax.probes/1", "probes": [[["1", "2", "3"], ["4", "5", "6"], ["7", "8", "10"]]]})";
        const json j = json::parse(cmd_symmetry(read_problem("random_symmetry.json"), o).out);
        CHECK(j["probes"] == 10);
        CHECK(j["pass"] == true);
    }
}

TEST_CASE("cmd_convergence") {
    const auto r = cmd_convergence(read_problem("convergence.json"), {}, std::nullopt, json_opts());
    CHECK(r.exit_code == kExitPass);
    const json j = json::parse(r.out);
    CHECK(j["schema"] == "qlax.convergence/1");
    CHECK(j["refN"] == 8);
    CHECK(j["points"][0]["ratio_to_prev"].is_null());
    const double ratio = j["points"][1]["ratio_to_prev"];
    CHECK(ratio > 0.7 * 8);
    CHECK(ratio < 1.3 * 8);

    const auto nil = cmd_convergence(read_problem("nilpotent.json"), {Rational(1, 2), Rational(1, 4)}, 5, json_opts());
    const json jn = json::parse(nil.out);
    CHECK(jn["points"][0]["error_exact"] == "0");
    CHECK(jn["points"][1]["error_exact"] == "0");

    const auto psdo = cmd_convergence(read_problem("kdv.json"), {}, std::nullopt, {});
    CHECK(psdo.exit_code == kExitInputError);
    CHECK(contains(psdo.err, "matrix backend"));
}

TEST_CASE("outputs are deterministic") {
    for (const char* name : {"kdv.json", "nilpotent.json", "random_symmetry.json"}) {
        const std::string text = read_problem(name);
        CHECK(cmd_lax_solve(text, json_opts()).out == cmd_lax_solve(text, json_opts()).out);
        CHECK(cmd_lax_solve(text, {}).out == cmd_lax_solve(text, {}).out);
    }
    CHECK(cmd_symmetry(read_problem("random_symmetry.json"), json_opts()).out ==
          cmd_symmetry(read_problem("random_symmetry.json"), json_opts()).out);
}
