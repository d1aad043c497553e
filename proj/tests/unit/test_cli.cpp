#include "doctest.h"

#include "mixjoin/cli.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace mixjoin;

namespace {

struct Run {
    int code = 0;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "mixjoin");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    Run r;
    r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string temp_file(const std::string& name, const std::string& content) {
    auto path = std::filesystem::temp_directory_path() / ("mixjoin_test_" + name);
    std::ofstream(path) << content;
    return path.string();
}

const char* cusp_bundle = R"({
  "g": "z1^2+z2^3",
  "mono1": {"blocks": [{"q": 0, "matrix": [[1]]}]},
  "mono2": {"blocks": [{"q": 0, "matrix": [[0, 1], [1, 0]]}]},
  "link": {"builtin": "brieskorn-with-axes", "params": [2, 3]},
  "chi_g": -1
})";

} // namespace

TEST_CASE("analyze reports faces and verdicts") {
    auto r = run({"analyze", "--expr", "z1^2+z2^3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("holomorphic-resultant") != std::string::npos);
    auto j = run({"analyze", "--expr", "z1*z2*bar(z2)", "--json"});
    CHECK(j.code == 0);
    auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed.contains("config"));
    CHECK(parsed.dump().find("REFUTED") != std::string::npos);
}

TEST_CASE("malformed input exits with code 2") {
    CHECK(run({"analyze", "--expr", "0"}).code == 2);
    CHECK(run({"analyze", "--expr", "z1+"}).code == 2);
    CHECK(run({"analyze"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"join", "--bundle", "/nonexistent/bundle.json"}).code == 2);
    CHECK(run({"join", "--bundle", temp_file("bad.json", "{not json")}).code == 2);
    CHECK(run({"count", "--expr", "z1^2", "--axis", "3"}).code == 2);
}

TEST_CASE("join on the cusp bundle") {
    auto path = temp_file("cusp.json", cusp_bundle);
    auto r = run({"join", "--bundle", path});
    CHECK(r.code == 0);
    CHECK(r.out.find("zeta_f = lambda^4 + lambda^2 + 1") != std::string::npos);
    auto j = run({"join", "--bundle", path, "--json"});
    auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed["report"]["zeta_text"] == "lambda^4 + lambda^2 + 1");
    CHECK(parsed["report"]["euler"] == -4);
    CHECK(parsed["flagged"] == false);
}

TEST_CASE("join flags an inconsistent axis multiplicity with exit 4") {
    auto path = temp_file("bad_axis.json", R"({
      "g": "z1^2+z2^3",
      "mono1": {"blocks": [{"q": 0, "matrix": [[1]]}]},
      "mono2": {"blocks": [{"q": 0, "matrix": [[0, 1], [1, 0]]}]},
      "link": {"components": [{"label": "K1", "m": 1}, {"label": "K2", "m": 0}, {"label": "C", "m": 1}],
               "alexander": {"vars": 3, "terms": [{"c": 1, "e": [3, 2, 6]}, {"c": -1, "e": [0, 0, 0]}]}}
    })");
    auto out = (std::filesystem::temp_directory_path() / "mixjoin_test_bad_axis_out.json").string();
    auto r = run({"join", "--bundle", path, "--out", out});
    CHECK(r.code == 4);
    std::ifstream f(out);
    auto written = nlohmann::json::parse(f);
    CHECK(written["flagged"] == true);
}

TEST_CASE("count reports formula agreement and the stress mismatch") {
    auto r = run({"count", "--expr", "z1^2+z2^3", "--axis", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("n1: 3 [formula]") != std::string::npos);
    auto s = run({"count", "--expr", "z1^2+2*z1*bar(z1)", "--json"});
    CHECK(s.code == 4);
    auto parsed = nlohmann::json::parse(s.out);
    CHECK(parsed["result"]["method"] == "mismatch-report");
    CHECK(parsed["result"]["formula"] == 2);
    CHECK(parsed["result"]["count"] == 4);
    auto u = run({"count", "--expr", "z1*z2^2*bar(z2)", "--axis", "1", "--json"});
    CHECK(u.code == 0);
    CHECK(nlohmann::json::parse(u.out)["result"]["method"] == "undefined");
}

TEST_CASE("fox with trivial words gives the identity action") {
    auto words = temp_file("words.json", R"({"mu": 2, "words": [[[1, 1]], [[2, 1]]]})");
    auto rep = temp_file("rep.json", R"({"dim": 2, "images": {"b1": [[1, 0], [0, -1]], "b2": [[0, 1], [1, 0]], "h": [[1, 0], [0, 1]]}})");
    auto r = run({"fox", "--words", words, "--rep", rep, "--json"});
    CHECK(r.code == 0);
    auto parsed = nlohmann::json::parse(r.out);
    auto h = parsed["h_der"];
    REQUIRE(h.size() == 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t k = 0; k < 4; ++k) CHECK(h[i][k] == (i == k ? 1 : 0));
    CHECK(parsed["ladder_commutes"] == true);
}

TEST_CASE("identical invocations give byte-identical JSON") {
    auto path = temp_file("cusp_det.json", cusp_bundle);
    CHECK(run({"join", "--bundle", path, "--json", "--seed", "7"}).out ==
          run({"join", "--bundle", path, "--json", "--seed", "7"}).out);
    CHECK(run({"analyze", "--expr", "z1*z2*bar(z2)+z1^3", "--json", "--seed", "3"}).out ==
          run({"analyze", "--expr", "z1*z2*bar(z2)+z1^3", "--json", "--seed", "3"}).out);
}
