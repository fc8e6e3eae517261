#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hf/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace hf;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "hecke_fusion");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << content;
    return path.string();
}

}  // namespace

TEST_CASE("verify: exit code and report") {
    const Run ok = run({"verify", "--suites", "fusion", "--max-m", "3", "--max-n", "2"});
    CHECK(ok.code == kExitOk);
    const json j = json::parse(ok.out);
    CHECK(j.at("summary").at("failed") == 0);
    CHECK(j.at("summary").at("total") == 14);
    CHECK(j.at("config").at("suites") == json::array({"fusion"}));
    // byte-identical reruns
    CHECK(run({"verify", "--suites", "fusion", "--max-m", "3", "--max-n", "2"}).out == ok.out);
}

TEST_CASE("verify: usage errors") {
    CHECK(run({"verify", "--suites", "bogus"}).code == kExitUsage);
    CHECK(run({"verify", "--max-m", "7"}).code == kExitUsage);
    CHECK(run({"verify", "--max-n", "5"}).code == kExitUsage);
    CHECK(run({"verify", "--format", "xml"}).code == kExitUsage);
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("verify: --out writes the report") {
    const auto path = (std::filesystem::temp_directory_path() / "hf_report.json").string();
    const Run r = run({"verify", "--suites", "crossing,f-series", "--max-n", "2", "--trunc", "4", "--out", path, "--format=json"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.empty());
    std::ifstream f(path);
    const json j = json::parse(f);
    CHECK(j.at("summary").at("total") == 4);
    CHECK(j.at("config").at("trunc") == 4);
}

TEST_CASE("idempotent: both methods print the same projector") {
    const Run a = run({"idempotent", "--partition", "2", "--n", "2", "--method", "fusion"});
    const Run b = run({"idempotent", "--partition", "2", "--n", "2", "--method", "recurrence"});
    CHECK(a.code == kExitOk);
    CHECK(a.out == b.out);
    const json j = json::parse(a.out);
    CHECK(j.at("rank") == "3");
    CHECK(j.at("dimension") == 4);
    CHECK_FALSE(j.contains("note"));
    for (int idx = 0; idx < 2; ++idx) {
        const std::string i = std::to_string(idx);
        CHECK(run({"idempotent", "--partition", "2,1", "--index", i, "--n", "2"}).out ==
              run({"idempotent", "--partition", "2,1", "--index", i, "--n", "2", "--method", "recurrence"}).out);
    }
}

TEST_CASE("idempotent: too many rows gives a zero operator with a note") {
    const Run r = run({"idempotent", "--partition", "1,1,1", "--n", "2"});
    CHECK(r.code == kExitOk);
    const json j = json::parse(r.out);
    CHECK(j.at("entries").empty());
    CHECK(j.contains("note"));
}

TEST_CASE("idempotent: bad input") {
    CHECK(run({"idempotent", "--partition", "2,x", "--n", "2"}).code == kExitUsage);
    CHECK(run({"idempotent", "--partition", "1,2", "--n", "2"}).code == kExitUsage);
    CHECK(run({"idempotent", "--partition", "2", "--index", "2", "--n", "2"}).code == kExitUsage);
    CHECK(run({"idempotent", "--partition", "2", "--n", "5"}).code == kExitUsage);
    CHECK(run({"idempotent", "--partition", "2", "--method", "magic"}).code == kExitUsage);
}

TEST_CASE("qchar: formal") {
    const Run a = run({"qchar", "--partition", "1", "--n", "2", "--mode", "formal"});
    CHECK(a.code == kExitOk);
    CHECK(json::parse(a.out).at("text") == "x_{1,0} + x_{2,0}");
    const Run b = run({"qchar", "--partition", "2,1", "--n", "3"});
    CHECK(json::parse(b.out).at("terms") == 8);
}

TEST_CASE("qchar: hc") {
    const Run r = run({"qchar", "--partition", "1", "--n", "2", "--mode", "hc", "--trunc", "1"});
    CHECK(r.code == kExitOk);
    const json j = json::parse(r.out).at("result");
    CHECK(j.at("truncation") == 1);
    CHECK(j.at("coefficients").size() == 3);
}

TEST_CASE("qchar: wakimoto with trivial kappa gives [n]_q") {
    const std::string path = temp_file("hf_kappa.json", R"({"kappa_plus": [[1], [1], [1]], "kappa_minus": [1]})");
    const Run r = run({"qchar", "--partition", "1", "--n", "3", "--mode", "wakimoto", "--kappa", path});
    CHECK(r.code == kExitOk);
    const json c = json::parse(r.out).at("result").at("coefficients");
    REQUIRE(c.size() == 1);
    CHECK(c[0].at("power") == 0);
    CHECK(c[0].at("coefficient") == "q^2+1+q^-2");
}

TEST_CASE("qchar: kappa errors") {
    CHECK(run({"qchar", "--partition", "1", "--n", "2", "--mode", "wakimoto"}).code == kExitUsage);
    const std::string wrong_n = temp_file("hf_kappa_n.json", R"({"kappa_plus": [[1]], "kappa_minus": [1]})");
    CHECK(run({"qchar", "--partition", "1", "--n", "2", "--mode", "wakimoto", "--kappa", wrong_n}).code == kExitUsage);
    const std::string zero = temp_file("hf_kappa_0.json", R"({"kappa_plus": [[1], [1]], "kappa_minus": [0]})");
    CHECK(run({"qchar", "--partition", "1", "--n", "2", "--mode", "wakimoto", "--kappa", zero}).code == kExitUsage);
    const std::string junk = temp_file("hf_kappa_junk.json", "{not json");
    CHECK(run({"qchar", "--partition", "1", "--n", "2", "--mode", "wakimoto", "--kappa", junk}).code == kExitUsage);
    CHECK(run({"qchar", "--partition", "1", "--n", "2", "--mode", "wakimoto", "--kappa", "/nonexistent/k.json"}).code == kExitUsage);
    const std::string ok = temp_file("hf_kappa_ok.json", R"({"kappa_plus": [[1], [1]], "kappa_minus": [1]})");
    CHECK(run({"qchar", "--partition", "1", "--n", "2", "--mode", "formal", "--kappa", ok}).code == kExitUsage);
}
