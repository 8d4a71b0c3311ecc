#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"

using namespace bipdeg;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run invoke(std::vector<std::string> args, const std::string& stdin_text = "") {
    args.insert(args.begin(), "bipdeg");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), in, out, err);
    return {code, out.str(), err.str()};
}

std::vector<json> lines_as_json(const std::string& text) {
    std::vector<json> out;
    std::istringstream s(text);
    for (std::string line; std::getline(s, line);) out.push_back(json::parse(line));
    return out;
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
    const auto p = std::filesystem::temp_directory_path() / ("bipdeg_test_" + name);
    std::ofstream(p) << content;
    return p;
}

}  // namespace

TEST_CASE("parse_sequence accepts whitespace and commas") {
    CHECK(cli::parse_sequence("3, 3,2 2\n1\t1") == std::vector<int>{3, 3, 2, 2, 1, 1});
    CHECK(cli::parse_sequence("  ").empty());
    CHECK(cli::parse_sequence("-1 +2") == std::vector<int>{-1, 2});
    CHECK_THROWS_AS(cli::parse_sequence("2 x"), InvalidInput);
    CHECK_THROWS_AS(cli::parse_sequence("2.5"), InvalidInput);
    CHECK_THROWS_AS(cli::parse_sequence("99999999999"), InvalidInput);
}

TEST_CASE("decide exit codes and records") {
    auto yes = invoke({"decide", "--json", "2", "2", "2", "2"});
    CHECK(yes.code == 0);
    auto r = json::parse(yes.out);
    CHECK(r["verdict"] == "yes");
    CHECK(r["a"] == json::array({2, 2}));
    CHECK(r["b"] == json::array({2, 2}));
    CHECK(r["certificate"].is_null());

    auto no = invoke({"decide", "--json", "2", "2", "2"});
    CHECK(no.code == 1);
    r = json::parse(no.out);
    CHECK(r["verdict"] == "no");
    CHECK(r["certificate"] == "NoCandidateBipartition");
    CHECK(r["exact"] == true);
    CHECK(r["phase"] == 1);
    CHECK(r["a"].is_null());

    auto bad = invoke({"decide", "3", "3", "1", "1"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("not graphical") != std::string::npos);
    CHECK(bad.out.empty());

    CHECK(invoke({"decide", "2", "x"}).code == 2);
    CHECK(invoke({"decide", "--lc", "zero", "2", "2"}).code == 2);
    CHECK(invoke({"frobnicate"}).code == 2);
    CHECK(invoke({"decide", "--help"}).code == 0);
}

TEST_CASE("decide human output, stdin and normalization") {
    auto h = invoke({"decide", "2", "2", "2", "2"});
    CHECK(h.code == 0);
    CHECK(h.out.find("potentially bipartite") != std::string::npos);
    CHECK(h.out.find("a = (2,2)") != std::string::npos);

    auto s = invoke({"decide", "--json"}, "1, 2, 0, 2,1\n");
    CHECK(s.code == 0);
    const auto r = json::parse(s.out);
    CHECK(r["input"] == json::array({1, 2, 0, 2, 1}));
    CHECK(r["sequence"] == json::array({2, 2, 1, 1}));
    CHECK(r["zeros_dropped"] == 1);

    auto t = invoke({"decide", "--threads", "2", "--lc", "unlimited", "3,3,3,3,3,3"});
    CHECK(t.code == 0);
}

TEST_CASE("JSON records carry the documented flat schema") {
    const std::vector<std::string> keys{"input", "verdict", "sequence", "a",  "b",    "certificate",
                                        "exact", "phase",   "elapsed_ms", "zeros_dropped", "error"};
    for (const auto& text : {"2 2 2 2", "2 2 2", "3 3 1 1", "oops"}) {
        const auto r = cli::to_json(cli::decide_text(text, {}));
        CHECK(r.size() == keys.size());
        for (const auto& k : keys) CHECK(r.contains(k));
        CHECK(json::parse(r.dump()) == r);
        const bool yes = r["verdict"] == "yes";
        CHECK(yes == !r["a"].is_null());
        CHECK(yes == !r["b"].is_null());
        CHECK((r["verdict"] == "no") == !r["certificate"].is_null());
        CHECK((r["verdict"] == "invalid") == !r["error"].is_null());
    }
}

TEST_CASE("batch keeps input order and counts verdicts") {
    const auto in = temp_file("batch.txt", "2 2 2 2\n# comment\n\n2 2 2\n3 3 1 1  # bad\n");
    for (const char* threads : {"1", "3"}) {
        auto b = invoke({"batch", "--input", in.string(), "--threads", threads});
        CHECK(b.code == 0);
        const auto recs = lines_as_json(b.out);
        REQUIRE(recs.size() == 3);
        CHECK(recs[0]["verdict"] == "yes");
        CHECK(recs[1]["verdict"] == "no");
        CHECK(recs[2]["verdict"] == "invalid");
        CHECK(b.err.find("yes=1 no=1 invalid=1") != std::string::npos);
    }

    const auto out = std::filesystem::temp_directory_path() / "bipdeg_test_batch_out.jsonl";
    auto w = invoke({"batch", "--input", in.string(), "--output", out.string()});
    CHECK(w.code == 0);
    CHECK(w.out.empty());
    std::ifstream f(out);
    const std::string written((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    CHECK(lines_as_json(written).size() == 3);

    const auto empty = temp_file("empty.txt", "");
    auto e = invoke({"batch", "--input", empty.string()});
    CHECK(e.code == 0);
    CHECK(e.out.empty());
    CHECK(e.err.find("yes=0 no=0 invalid=0") != std::string::npos);

    CHECK(invoke({"batch", "--input", "/nonexistent/bipdeg"}).code == 2);
}

TEST_CASE("tables rows are exact and independent of thread count") {
    auto t = invoke({"tables", "--n-min", "6", "--n-max", "7", "--lc", "1", "--threads", "1"});
    CHECK(t.code == 0);
    CHECK(t.out ==
          "n\tD\tr\tr/D\tB\tB_w\tB_w/B\n"
          "6\t71\t53\t0.746479\t18\t0\t0\n"
          "7\t240\t203\t0.845833\t37\t0\t0\n");
    auto u = invoke({"tables", "--n-min", "6", "--n-max", "7", "--lc", "1", "--threads", "4"});
    CHECK(u.out == t.out);
    auto v = invoke({"tables", "--n-min", "9", "--lc", "n", "--threads", "1"});
    auto w = invoke({"tables", "--n-min", "9", "--lc", "n", "--threads", "3"});
    CHECK(v.out == w.out);
    CHECK(invoke({"tables", "--n-min", "8", "--n-max", "7"}).code == 2);
}

TEST_CASE("gen and bench") {
    auto g = invoke({"gen", "--n", "4", "--d1", "2", "--dn", "2", "--count", "1"});
    CHECK(g.code == 0);
    CHECK(g.out == "2 2 2 2\n");
    CHECK(invoke({"gen", "--n", "4", "--d1", "1", "--dn", "1", "--count", "1"}).out == "1 1 1 1\n");
    auto several = invoke({"gen", "--n", "12", "--d1", "6", "--dn", "1", "--count", "4", "--seed", "9"});
    CHECK(several.code == 0);
    CHECK(std::count(several.out.begin(), several.out.end(), '\n') == 4);
    CHECK(invoke({"gen", "--n", "12", "--d1", "6", "--dn", "1", "--count", "4", "--seed", "9"}).out ==
          several.out);
    CHECK(invoke({"gen", "--n", "3", "--d1", "1", "--dn", "1"}).code == 2);

    auto b = invoke({"bench", "--n", "40", "--trials", "3", "--hard", "--lc", "n", "--json"});
    CHECK(b.code == 0);
    const auto s = json::parse(b.out);
    CHECK(s["trials"] == 3);
    CHECK(s["times_ms"].size() == 3);
    CHECK(s["yes"].get<int>() + s["no"].get<int>() == 3);
    CHECK(s["min_ms"].get<double>() <= s["median_ms"].get<double>());
    CHECK(s["median_ms"].get<double>() <= s["max_ms"].get<double>());

    auto plain = invoke({"bench", "--n", "30", "--trials", "2", "--d1", "10", "--dn", "2"});
    CHECK(plain.code == 0);
    CHECK(plain.out.find("median=") != std::string::npos);
    CHECK(invoke({"bench", "--n", "30"}).code == 2);
}
