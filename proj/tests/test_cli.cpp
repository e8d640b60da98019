#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "fracsum/cli.hpp"
#include "fracsum/errors.hpp"
#include "json.hpp"
#include "support.hpp"

using namespace fracsum;
using namespace fracsum::cli;
using nlohmann::json;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "fracsum");
    std::vector<const char*> argv;
    for (const std::string& a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / "fracsum_cli_test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

json load(const std::filesystem::path& p) {
    std::ifstream f(p);
    return json::parse(f);
}

}  // namespace

TEST_CASE("complex flag values") {
    CHECK_NEAR(parse_complex("-0.5"), -0.5, 0.0);
    CHECK_NEAR(parse_complex("1+2i"), Complex(1.0, 2.0), 0.0);
    CHECK_NEAR(parse_complex("1/3"), 1.0 / 3.0, 1e-16);
    CHECK_THROWS_AS(parse_complex("v"), DomainError);
    CHECK_THROWS(parse_complex("1+"));
}

TEST_CASE("sum command") {
    Outcome r = invoke({"sum", "--expr", "1/v", "--sigma", "neginf", "--from", "1", "--to", "-0.5"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("-1.38629436") != std::string::npos);

    r = invoke({"sum", "--expr", "ln(v)", "--sigma", "0", "--from", "1", "--to", "0.5", "--product"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("0.8862269") != std::string::npos);

    r = invoke({"sum", "--expr", "v", "--sigma", "1", "--from", "1", "--to", "4"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("value      10+0i") != std::string::npos);

    r = invoke({"sum", "--expr", "2^v", "--sigma", "neginf", "--from", "0", "--to", "0.5", "--left"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("1.82842712") != std::string::npos);
}

TEST_CASE("sum command json record") {
    const Outcome r = invoke({"sum", "--expr", "v^2", "--sigma", "auto", "--from", "1", "--to", "0.5", "--json"});
    CHECK(r.code == kExitOk);
    const json doc = json::parse(r.out);
    REQUIRE(doc["records"].size() == 1);
    const json& rec = doc["records"][0];
    CHECK(rec["rhs"].is_null());
    CHECK(rec["lhs"]["re"].get<double>() == doctest::Approx(0.25).epsilon(1e-9));
    CHECK(rec["pass"].get<bool>());
    CHECK(doc["summary"]["total"] == 1);
}

TEST_CASE("sum command errors") {
    Outcome r = invoke({"sum", "--expr", "1/(v", "--sigma", "0", "--from", "1", "--to", "2"});
    CHECK(r.code == kExitUsage);
    CHECK(r.err.find("column 5") != std::string::npos);

    r = invoke({"sum", "--expr", "1/(v-3)", "--sigma", "neginf", "--from", "1", "--to", "4"});
    CHECK(r.code == kExitUsage);
    CHECK(r.err.find("nu = 3") != std::string::npos);

    r = invoke({"sum", "--expr", "sin(v)", "--sigma", "auto", "--from", "1", "--to", "2.5"});
    CHECK(r.code == kExitUsage);

    r = invoke({"sum", "--expr", "v", "--sigma", "1", "--from", "1"});
    CHECK(r.code == kExitUsage);

    r = invoke({"sum", "--expr", "v", "--sigma", "x", "--from", "1", "--to", "2"});
    CHECK(r.code == kExitUsage);

    r = invoke({"sum", "--expr", "v^2 * ln(v)^2", "--sigma", "3", "--from", "1", "--to", "0.3+0.4i",
                "--tol", "1e-16"});
    CHECK(r.code == kExitNotConverged);

    r = invoke({"bogus"});
    CHECK(r.code == kExitUsage);
    CHECK(invoke({"--help"}).code == kExitOk);
}

TEST_CASE("special command") {
    Outcome r = invoke({"special", "zeta", "--s", "2", "--x", "1"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("1.644934066848") != std::string::npos);

    r = invoke({"special", "zetad", "--order", "1", "--s", "-1", "--x", "1"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("-0.165421143700") != std::string::npos);

    r = invoke({"special", "digamma", "--x", "1.5"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("0.03648997397857") != std::string::npos);

    r = invoke({"special", "gamma", "--x", "1+i", "--json"});
    CHECK(r.code == kExitOk);
    CHECK(json::parse(r.out)["records"][0]["lhs"]["im"].get<double>() ==
          doctest::Approx(-0.1549498283018106).epsilon(1e-12));

    CHECK(invoke({"special", "gamma", "--x", "-2"}).code == kExitUsage);
    CHECK(invoke({"special", "zeta", "--s", "1", "--x", "1"}).code == kExitUsage);
}

TEST_CASE("verify command") {
    const auto json_path = scratch("core.json");
    const auto csv_path = scratch("core.csv");
    Outcome r = invoke({"verify", "--suite", "core", "--json", json_path.string(), "--csv", csv_path.string()});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("FAIL") == std::string::npos);

    const json doc = load(json_path);
    for (const char* key : {"tool_version", "timestamp", "records", "summary"}) {
        CHECK(doc.contains(key));
    }
    CHECK(doc["summary"]["failed"] == 0);
    CHECK(doc["summary"]["total"] == doc["records"].size());
    for (const json& rec : doc["records"]) {
        for (const char* key : {"id", "parameters", "lhs", "rhs", "abs_residual", "rel_residual", "tol",
                                "pass", "n_used", "runtime_ms", "notes", "optional"}) {
            CHECK(rec.contains(key));
        }
    }
    std::ifstream csv(csv_path);
    std::string header;
    std::getline(csv, header);
    CHECK(header == "id,param_json,lhs_re,lhs_im,rhs_re,rhs_im,abs_residual,pass");
    CHECK(!std::filesystem::exists(json_path.string() + ".tmp"));

    r = invoke({"verify", "--case", "gamma.product-limit"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("total 1,") != std::string::npos);

    CHECK(invoke({"verify", "--case", "no.such.case"}).code == kExitUsage);
    CHECK(invoke({"verify", "--suite", "nope"}).code == kExitUsage);
    CHECK(invoke({"verify", "--case", "euler.minus-half-harmonic", "--tol-scale", "1e-12"}).code ==
          kExitNotConverged);
}

TEST_CASE("optional cases never gate") {
    VerifyOptions opt;
    opt.suite = "optional";
    opt.include_optional = true;
    const Report rep = run_verify(opt);
    CHECK(rep.summary.skipped_optional == 0);
    REQUIRE(!rep.records.empty());
    for (const auto& rec : rep.records) {
        CHECK(rec.optional);
    }
    CHECK(gating_passed(rep));

    VerifyOptions without;
    without.suite = "optional";
    int skipped = 0;
    CHECK(select_cases(without, &skipped).empty());
    CHECK(skipped > 0);
}

TEST_CASE("report determinism under a fixed seed") {
    VerifyOptions opt;
    opt.case_ids = {"hurwitz.recurrence", "hurwitz.x-derivative", "factorial.product"};
    opt.seed = 1234;
    opt.threads = 3;
    const Report a = run_verify(opt);
    opt.threads = 1;
    const Report b = run_verify(opt);
    REQUIRE(a.records.size() == b.records.size());
    for (std::size_t i = 0; i < a.records.size(); ++i) {
        const auto& x = a.records[i];
        const auto& y = b.records[i];
        CHECK(x.id == y.id);
        REQUIRE(x.parameters.size() == y.parameters.size());
        for (std::size_t j = 0; j < x.parameters.size(); ++j) {
            CHECK(x.parameters[j].value == y.parameters[j].value);
        }
        CHECK(x.lhs == y.lhs);
        CHECK(x.rhs == y.rhs);
        CHECK(x.abs_residual == y.abs_residual);
        CHECK(x.rel_residual == y.rel_residual);
    }
    opt.seed = 1235;
    const Report c = run_verify(opt);
    CHECK(c.records[0].parameters[0].value != a.records[0].parameters[0].value);
}

TEST_CASE("atomic writes replace the target") {
    const auto p = scratch("atomic.txt");
    write_atomic(p, "first");
    write_atomic(p, "second");
    std::ifstream f(p);
    std::string s;
    std::getline(f, s);
    CHECK(s == "second");
    CHECK_THROWS_AS(write_atomic(scratch("missing-dir") / "x" / "y.txt", "z"), DomainError);
}
