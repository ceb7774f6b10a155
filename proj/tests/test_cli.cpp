#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "hsm/report.hpp"
#include "hsm/runner.hpp"

using namespace hsm;
using nlohmann::json;

TEST_CASE("run_command: deterministic output at fixed seed and thread count") {
    RunConfig cfg;
    cfg.command = "lemmas";
    cfg.seed = 42;
    cfg.threads = 4;
    cfg.quick = true;
    const auto a = run_command(cfg);
    const auto b = run_command(cfg);
    CHECK(a.document == b.document);  // byte-for-byte
    CHECK(a.exit_code == 0);

    cfg.command = "constants";
    cfg.s_grid = {0.25, 0.5, 0.75};
    const auto c = run_command(cfg);
    const auto d = run_command(cfg);
    CHECK(c.document == d.document);
}

TEST_CASE("json reports validate against the shipped schema shape") {
    RunConfig cfg;
    cfg.command = "constants";
    cfg.s_grid = {0.5};
    const auto out = run_command(cfg);
    const json doc = json::parse(out.document);
    REQUIRE(doc.contains("version"));
    REQUIRE(doc.contains("config"));
    REQUIRE(doc.contains("reports"));
    CHECK(doc["version"].is_string());
    const auto& cj = doc["config"];
    for (const char* key : {"command", "s_grid", "n", "seed", "threads", "quick"})
        CHECK(cj.contains(key));
    CHECK(doc["reports"].is_array());
    for (const auto& r : doc["reports"]) {
        CHECK(r.contains("kind"));
        CHECK(r["kind"].is_string());
    }
}

TEST_CASE("quotient reports in JSON carry the full schema fields") {
    RunConfig cfg;
    cfg.command = "fracops";
    cfg.s_grid = {0.6};
    cfg.quick = true;
    const auto out = run_command(cfg);
    const json doc = json::parse(out.document);
    bool saw_quotient = false;
    for (const auto& r : doc["reports"]) {
        if (!r.contains("quotient")) continue;
        saw_quotient = true;
        for (const char* key : {"kind", "s", "params", "numerator", "denominator",
                                "quotient", "target", "deficit", "tolerance_met"})
            CHECK(r.contains(key));
    }
    CHECK(saw_quotient);
    CHECK(out.exit_code == 0);
}

TEST_CASE("csv profile export: header and round-trip-safe numerics") {
    RunConfig cfg;
    cfg.command = "profile";
    cfg.profile_kind = "A";
    cfg.s_grid = {0.5};
    cfg.output_format = "csv";
    cfg.t_max = 10.0;
    cfg.t_samples = 201;
    const auto out = run_command(cfg);
    CHECK(out.document.rfind("s,t,value,derivative\n", 0) == 0);
    // A(1) = 0.5 row present at t = 1
    CHECK(out.document.find("\n0.5,1,0.5") != std::string::npos);
    CHECK(out.exit_code == 0);
}

TEST_CASE("csv exports: lemma scan rows and spectral mode dump") {
    RunConfig cfg;
    cfg.command = "lemmas";
    cfg.quick = true;
    cfg.output_format = "csv";
    const auto out = run_command(cfg);
    CHECK(out.document.rfind("lemma,A,B,Gamma,constant,lhs,rhs,margin\n", 0) == 0);
    CHECK(out.document.find('\n') != out.document.size() - 1);

    RunConfig cf2;
    cf2.command = "fracops";
    cf2.quick = true;
    cf2.s_grid = {0.5};
    cf2.output_format = "csv";
    const auto out2 = run_command(cf2);
    CHECK(out2.document.rfind("kind,s,index,eigenvalue,coefficient\n", 0) == 0);
    CHECK(out2.document.find("spectral_mode,0.5,1,1,") != std::string::npos);
}

TEST_CASE("exit codes: usage errors map to 2") {
    RunConfig cfg;
    cfg.command = "no-such-command";
    const auto out = run_command(cfg);
    CHECK(out.exit_code == 2);
}

TEST_CASE("format_full round-trips doubles") {
    for (double v : {0.1, 1.0 / 3.0, 6.366197723675813595e-01, 1e-300}) {
        const std::string s = format_full(v);
        CHECK(std::stod(s) == v);
    }
}
