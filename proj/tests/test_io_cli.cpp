#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <doctest.h>

#include <zerodim/scheme_io.hpp>

#include "golden.hpp"

using namespace zerodim;

namespace {

struct RunResult {
    int rc = -1;
    std::string out;
};

// runs the installed CLI binary with stderr folded into stdout
RunResult run_cli(const std::string& args) {
    std::string cmd = std::string("'") + ZERODIM_CLI_PATH + "' " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) res.out.append(buf, n);
    int status = pclose(pipe);
    res.rc = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::string data_path(const char* name) {
    return std::string(ZERODIM_DATA_DIR) + "/" + name;
}

std::filesystem::path write_temp(const char* name, const std::string& text) {
    std::filesystem::path p = std::filesystem::temp_directory_path() / name;
    std::ofstream(p) << text;
    return p;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("field serialization round trips and rejects junk") {
    CHECK(field_to_json(Field::Q()) == Json("Q"));
    CHECK(field_from_json(Json("Q")).is_rational());
    Json fp = field_to_json(Field::Fp(32003));
    CHECK(fp["Fp"] == 32003);
    CHECK(field_from_json(fp).characteristic() == 32003);
    CHECK_THROWS_AS(field_from_json(Json("R")), validation_error);
    CHECK_THROWS_AS(field_from_json(Json{{"GF", 4}}), validation_error);
    CHECK_THROWS_AS(field_from_json(Json{{"Fp", -5}}), validation_error);
    CHECK_THROWS_AS(field_from_json(Json(7)), validation_error);
}

TEST_CASE("component scheme survives a JSON round trip") {
    Scheme x = golden::X_deg5();
    Json j = scheme_to_json(x);
    CHECK(j["mode"] == "components");
    CHECK(j["vars"] == 3);
    CHECK(j["components"].size() == 4);
    // only the double point carries local generators
    int with_gens = 0;
    for (const Json& c : j["components"])
        if (c.contains("local_gens")) ++with_gens;
    CHECK(with_gens == 1);

    Scheme back = parse_scheme(j);
    CHECK(back.ideal().equals(x.ideal()));
    CHECK(back.degree() == 5);
    CHECK(back.component_count() == 4);

    // serialization is deterministic byte for byte
    CHECK(j.dump() == scheme_to_json(x).dump());
    CHECK(j.dump() == scheme_to_json(back).dump());
}

TEST_CASE("raw scheme survives a JSON round trip") {
    Scheme q = golden::quartic();
    Json j = scheme_to_json(q);
    CHECK(j["mode"] == "raw");
    CHECK(j["gens"].is_array());
    Scheme back = parse_scheme(j);
    CHECK(back.ideal().equals(q.ideal()));
    CHECK_FALSE(back.components_mode());
}

TEST_CASE("rational string coordinates parse and reserialize") {
    Json j;
    j["field"] = "Q";
    j["vars"] = 3;
    j["mode"] = "components";
    j["components"] = Json::array({Json{{"point", Json::array({1, "1/2", "-3/4"})}},
                                   Json{{"point", Json::array({1, 0, 2})}}});
    Scheme x = parse_scheme(j);
    CHECK(x.degree() == 2);
    Json back = scheme_to_json(x);
    CHECK(back["components"][0]["point"][1] == "1/2");
    CHECK(back["components"][0]["point"][2] == "-3/4");
    // integers stay plain JSON numbers
    CHECK(back["components"][1]["point"][2] == 2);
    CHECK(parse_scheme(back).ideal().equals(x.ideal()));
}

TEST_CASE("field override reinterprets coordinates") {
    Scheme xq = golden::X_ci22();
    Json j = scheme_to_json(xq);
    Scheme xp = parse_scheme(j, Field::Fp(32003));
    CHECK_FALSE(xp.ring().field.is_rational());
    CHECK(xp.degree() == 4);
    CHECK(xp.hilbert().values == std::vector<int>{1, 3, 4});

    Json jp = scheme_to_json(xp);
    CHECK(jp["field"]["Fp"] == 32003);
    Scheme again = parse_scheme(jp);
    CHECK(again.ideal().equals(xp.ideal()));
    // and back to Q by override, negatives now live at p - k
    Scheme xq2 = parse_scheme(jp, Field::Q());
    CHECK(xq2.degree() == 4);
    CHECK_FALSE(xq2.ideal().equals(xq.ideal()));
}

TEST_CASE("scheme files with structural problems are rejected") {
    auto base = [] {
        Json j;
        j["field"] = "Q";
        j["vars"] = 3;
        j["mode"] = "components";
        j["components"] = Json::array({Json{{"point", Json::array({1, 0, 0})}}});
        return j;
    };

    CHECK_THROWS_AS(parse_scheme(Json::array()), validation_error);
    for (const char* key : {"field", "vars", "mode"}) {
        Json j = base();
        j.erase(key);
        CHECK_THROWS_AS(parse_scheme(j), validation_error);
    }
    {
        Json j = base();
        j["vars"] = 1;
        CHECK_THROWS_AS(parse_scheme(j), validation_error);
        j["vars"] = "3";
        CHECK_THROWS_AS(parse_scheme(j), validation_error);
    }
    {
        Json j = base();
        j["mode"] = "points";
        CHECK_THROWS_AS(parse_scheme(j), validation_error);
        j["mode"] = 2;
        CHECK_THROWS_AS(parse_scheme(j), validation_error);
    }
    {
        Json j = base();
        j["components"] = Json::array();
        CHECK_THROWS_AS(parse_scheme(j), validation_error);
        j["components"] = Json::array({Json{{"local_gens", Json::array()}}});
        CHECK_THROWS_AS(parse_scheme(j), validation_error);
        j["components"] = Json::array({Json{{"point", Json::array({1, 0})}}});
        CHECK_THROWS_AS(parse_scheme(j), validation_error);
    }
    {
        // floats, junk literals and zero denominators in coordinates
        Json j = base();
        j["components"][0]["point"][1] = 0.5;
        CHECK_THROWS_AS(parse_scheme(j), validation_error);
        j["components"][0]["point"][1] = "abc";
        CHECK_THROWS_AS(parse_scheme(j), validation_error);
        j["components"][0]["point"][1] = "1/0";
        CHECK_THROWS_AS(parse_scheme(j), validation_error);
    }
    {
        // denominator vanishing in the target field
        Json j = base();
        j["components"][0]["point"][1] = "1/7";
        CHECK(parse_scheme(j).degree() == 1);
        CHECK_THROWS_AS(parse_scheme(j, Field::Fp(7)), validation_error);
    }
    {
        Json j = base();
        j["components"][0]["local_gens"] = Json::array({"X9"});
        CHECK_THROWS_AS(parse_scheme(j), validation_error);
        j["components"][0]["local_gens"] = Json::array({3});
        CHECK_THROWS_AS(parse_scheme(j), validation_error);
        j["components"][0]["local_gens"] = "X1";
        CHECK_THROWS_AS(parse_scheme(j), validation_error);
    }
    {
        Json j = base();
        j["mode"] = "raw";
        CHECK_THROWS_AS(parse_scheme(j), validation_error);
        j["gens"] = Json::array();
        CHECK_THROWS_AS(parse_scheme(j), validation_error);
        j["gens"] = Json::array({""});
        CHECK_THROWS_AS(parse_scheme(j), validation_error);
    }
}

TEST_CASE("hilbert function text format") {
    CHECK(hf_text({1, 3, 4}) == "0:1 1:3 2:4");
    CHECK(hf_text({9}) == "0:9");
    CHECK(hf_text({}).empty());
}

TEST_CASE("report serializers expose the headline values") {
    Scheme x = golden::X_ci22();
    Json j = to_json(analyze(x));
    CHECK(j["degree"] == 4);
    CHECK(j["regularity"] == 2);
    CHECK(j["hf_text"] == "0:1 1:3 2:4");
    CHECK(j["complete_intersection"] == true);
    CHECK(j["ci_degrees"] == Json::array({2, 2}));
    CHECK(j["reduced"] == true);

    Json v = to_json(cbp_check(x, 1, CbpMethod::canonical));
    CHECK(v["method"] == "canonical");
    CHECK(v["verdict"] == "yes");
    CHECK(v["witness"].is_null());

    Scheme raw = golden::quartic();
    Json a = to_json(analyze(raw));
    CHECK(a["reduced"].is_null());
    CHECK(a["locally_gorenstein"].is_null());
}

TEST_CASE("cli selftest passes on the shipped data") {
    RunResult r = run_cli("selftest --data '" + std::string(ZERODIM_DATA_DIR) + "'");
    CHECK(r.rc == 0);
    CHECK(contains(r.out, "selftest: all checks passed"));
    CHECK_FALSE(contains(r.out, "FAIL"));
}

TEST_CASE("cli analyze prints the expected text report") {
    RunResult r = run_cli("analyze '" + data_path("x_ci22_reduced.json") + "'");
    CHECK(r.rc == 0);
    CHECK(contains(r.out, "mode: components (4 components, local dims 1 1 1 1)"));
    CHECK(contains(r.out, "deg: 4"));
    CHECK(contains(r.out, "HF: 0:1 1:3 2:4"));
    CHECK(contains(r.out, "complete intersection: yes of type 2 2"));
    CHECK(contains(r.out, "arithmetically Gorenstein: yes"));
    CHECK(contains(r.out, "reduced: yes, locally Gorenstein: yes"));

    RunResult capped = run_cli("--cap 4 analyze '" + data_path("x_ci22_reduced.json") + "'");
    CHECK(contains(capped.out, "HF: 0:1 1:3 2:4 3:4 4:4"));
}

TEST_CASE("cli json output is stable across runs") {
    std::string cmd = "--format json analyze '" + data_path("x_deg5_double_point.json") + "'";
    RunResult a = run_cli(cmd);
    RunResult b = run_cli(cmd);
    CHECK(a.rc == 0);
    CHECK(a.out == b.out);
    Json j = Json::parse(a.out);
    CHECK(j["degree"] == 5);
    CHECK(j["local_dims"] == Json::array({1, 1, 1, 2}));
}

TEST_CASE("cli field override") {
    RunResult r = run_cli("--field Fp:32003 analyze '" + data_path("x_ci22_reduced.json") + "'");
    CHECK(r.rc == 0);
    CHECK(contains(r.out, "deg: 4"));
    RunResult bad = run_cli("--field R7 analyze '" + data_path("x_ci22_reduced.json") + "'");
    CHECK(bad.rc == 2);
    CHECK(contains(bad.out, "--field must be Q or Fp:<p>"));
}

TEST_CASE("cli residual reports the linkage") {
    std::string w = data_path("ambient_ci33_components.json");
    RunResult r = run_cli("residual -w '" + w + "' '" + data_path("x_deg5_double_point.json") + "'");
    CHECK(r.rc == 0);
    CHECK(contains(r.out, "Y HF: 0:1 1:3 2:4"));
    CHECK(contains(r.out, "deg: W 9 = X 5 + Y 4"));
    CHECK(contains(r.out, "geometrically linked: yes"));
    CHECK(contains(r.out, "all identities pass: yes"));

    // linking the ambient scheme to itself leaves nothing
    RunResult self = run_cli("residual -w '" + w + "' '" + w + "'");
    CHECK(self.rc == 0);
    CHECK(contains(self.out, "Y: empty scheme"));
    CHECK(contains(self.out, "deg: 0"));
    CHECK(contains(self.out, "r_W = r_X + alpha_Y = r_Y + alpha_X: n/a"));
}

TEST_CASE("cli cbp verdicts") {
    std::string w = data_path("ambient_ci33_components.json");
    RunResult r = run_cli("cbp -w '" + w + "' -d 1 '" + data_path("x_deg5_double_point.json") + "'");
    CHECK(r.rc == 0);
    CHECK(contains(r.out, "d=1 combined: yes"));
    for (const char* m : {"colon", "piece", "separators", "canonical", "annihilator"})
        CHECK(contains(r.out, std::string("  ") + m + ": "));

    RunResult one = run_cli("cbp --method canonical -d 2 '" + data_path("p1_quartic_raw.json") + "'");
    CHECK(one.rc == 0);
    CHECK(contains(one.out, "CBP(2) by canonical: yes"));

    RunResult prof = run_cli("cbp '" + data_path("x_ci22_reduced.json") + "'");
    CHECK(prof.rc == 0);
    CHECK(contains(prof.out, "largest d with CBP(d): 1"));
    CHECK(contains(prof.out, "Cayley-Bacharach scheme: yes"));

    RunResult noarg = run_cli("cbp --method colon '" + data_path("x_ci22_reduced.json") + "'");
    CHECK(noarg.rc == 2);
    CHECK(contains(noarg.out, "--method needs -d"));

    // colon method needs an enveloping linkage context
    RunResult noctx = run_cli("cbp --method colon -d 1 '" + data_path("x_ci22_reduced.json") + "'");
    CHECK(noctx.rc == 3);
    CHECK(contains(noctx.out, "precondition not met"));
}

TEST_CASE("cli separators and point degrees") {
    RunResult sep = run_cli("separators -j 3 '" + data_path("x_ci22_reduced.json") + "'");
    CHECK(sep.rc == 0);
    CHECK(contains(sep.out, "component 3 at (1 : 2 : 0): mu = 2"));
    CHECK(contains(sep.out, "minimal:"));
    CHECK(contains(sep.out, "standard:"));

    RunResult pd = run_cli("point-degrees '" + data_path("x_ci22_reduced.json") + "'");
    CHECK(pd.rc == 0);
    for (int j = 0; j < 4; ++j)
        CHECK(contains(pd.out, std::to_string(j) + ": ("));
    CHECK(contains(pd.out, "degree 2"));
}

TEST_CASE("cli dedekind is deterministic for a fixed seed") {
    std::string cmd = "--seed 5 dedekind '" + data_path("p1_quartic_raw.json") + "'";
    RunResult a = run_cli(cmd);
    RunResult b = run_cli(cmd);
    CHECK(a.rc == 0);
    CHECK(a.out == b.out);
    CHECK(contains(a.out, "HF_delta: 0:0 1:0 2:0 3:1 4:2 5:3 6:4"));
    CHECK(contains(a.out, "ri_delta: 6"));
    CHECK(contains(a.out, "all checks pass: yes"));
}

TEST_CASE("cli ci-envelope wraps a scheme in a complete intersection") {
    RunResult r = run_cli("--seed 3 ci-envelope '" + data_path("x_ci22_reduced.json") + "'");
    CHECK(r.rc == 0);
    CHECK(contains(r.out, "CI degrees:"));
    CHECK(contains(r.out, "all identities pass: yes"));
}

TEST_CASE("cli exit codes distinguish failure kinds") {
    RunResult missing = run_cli("analyze /nonexistent/scheme.json");
    CHECK(missing.rc == 2);
    CHECK(contains(missing.out, "cannot open scheme file"));

    auto bad = write_temp("zerodim_bad.json", "{ nope");
    RunResult malformed = run_cli("analyze '" + bad.string() + "'");
    CHECK(malformed.rc == 2);
    CHECK(contains(malformed.out, "validation error"));

    // non arithmetically Gorenstein ambient scheme
    RunResult nonag = run_cli("residual -w '" + data_path("x_deg5_double_point.json") + "' '" +
                              data_path("x_ci22_reduced.json") + "'");
    CHECK(nonag.rc == 3);
    CHECK(contains(nonag.out, "precondition not met"));

    // certified trace search cannot succeed on a non Gorenstein raw scheme
    auto fat = write_temp("zerodim_fat.json",
                          R"({"field":"Q","vars":3,"mode":"raw","gens":["X1^2","X1*X2","X2^2"]})");
    RunResult exhausted = run_cli("dedekind '" + fat.string() + "'");
    CHECK(exhausted.rc == 4);
    CHECK(contains(exhausted.out, "retry budget exhausted"));

    RunResult unknown = run_cli("frobnicate");
    CHECK(unknown.rc == 2);

    std::filesystem::remove(bad);
    std::filesystem::remove(fat);
}
