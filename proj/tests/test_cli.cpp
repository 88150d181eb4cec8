#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = dedekind::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("sum") {
    CHECK(run({"sum", "41", "200"}).out == "501/100 (5.0100000000)\n");
    CHECK(run({"sum", "1", "1"}).out == "0/1 (0.0000000000)\n");
    CHECK(contains(run({"sum", "4943", "493493"}).out, "(-2.9998966551)"));
    CHECK(run({"sum", "41", "200", "--oracle"}).out == "501/100 (5.0100000000)\n");
    CHECK(contains(run({"sum", "41", "200", "--little"}).out, "s = 167/400 (0.4175000000)"));
    CHECK(run({"--digits", "2", "sum", "41", "200"}).out == "501/100 (5.01)\n");

    const Result bad = run({"sum", "4", "8"});
    CHECK(bad.code == 2);
    CHECK(contains(bad.err, "gcd(4, 8) = 4"));
    CHECK(run({"sum", "x", "8"}).code == 2);
}

TEST_CASE("json output round-trips byte for byte") {
    const std::vector<std::vector<std::string>> invocations{
        {"--format", "json", "sum", "41", "200", "--little"},
        {"--format", "json", "classes", "25", "--non-singleton"},
        {"--format", "json", "classes", "15", "--bounds", "--pivot", "1..4"},
        {"--format", "json", "check-pair", "41", "81", "200"},
        {"--format", "json", "family", "quad", "-t", "7", "-p", "11,13"},
        {"--format", "json", "table1"},
        {"--format", "json", "verify-paper", "--only", "table1"},
    };
    for (const auto& args : invocations) {
        const Result r = run(args);
        CHECK(r.code == 0);
        const auto parsed = nlohmann::ordered_json::parse(r.out);
        CHECK(parsed.dump(2) + "\n" == r.out);
    }
    const auto sum = nlohmann::ordered_json::parse(run({"--format", "json", "sum", "41", "200"}).out);
    CHECK(sum["S"]["num"] == "501");
    CHECK(sum["S"]["den"] == "100");
}

TEST_CASE("decimal rendering is deterministic") {
    CHECK(run({"--digits", "20", "sum", "4943", "493493"}).out ==
          run({"--digits", "20", "sum", "4943", "493493"}).out);
}

TEST_CASE("csv output") {
    const Result r = run({"--format", "csv", "sum", "41", "200"});
    CHECK(r.out == "m,n,method,S_num,S_den,S_decimal\n41,200,fast,501,100,5.0100000000\n");
    const Result c = run({"--format", "csv", "classes", "25", "--non-singleton"});
    CHECK(contains(c.out, "6,4,-48,25,-1.9200000000,6;11;16;21"));
}

TEST_CASE("classes") {
    CHECK(contains(run({"classes", "25"}).out, "{6, 11, 16, 21}"));

    const Result r243 = run({"classes", "243", "--filter", "1mod9", "--non-obvious"});
    CHECK(r243.code == 0);
    CHECK(contains(r243.out, "(37,127)"));
    CHECK(contains(r243.out, "(100,145)"));
    // 1 mod 27 forms its own family: {28, 55, 109, 136, 190, 217}.
    CHECK(contains(r243.out, "3 classes shown"));

    const Result piv = run({"classes", "17017", "--bounds", "--pivot", "2..6"});
    CHECK(piv.code == 0);
    CHECK(contains(piv.out, "pivot m1 = 2: condition partners 16"));
    CHECK(contains(piv.out, "pivot m1 = 4: condition partners 16, largest equal-value group 8"));
    CHECK(contains(piv.out, "pivot m1 = 5: condition partners 16, largest equal-value group 10"));
    CHECK(contains(piv.out, "pivot m1 = 6: condition partners 8"));
    CHECK(contains(piv.out, "<= 2^r = 16 ok"));

    CHECK(run({"classes", "2000000"}).code == 2);
    CHECK(run({"classes", "12", "--bounds"}).code == 2);
    CHECK(run({"classes", "30", "--filter", "1by9"}).code == 2);
}

TEST_CASE("check-pair") {
    const Result r = run({"check-pair", "41", "81", "200"});
    CHECK(contains(r.out, "relation: non-obvious-equal"));
    CHECK(contains(r.out, "necessary condition: true"));
    CHECK(contains(run({"check-pair", "41", "161", "200"}).out, "obvious-inverse"));
    CHECK(run({"check-pair", "2", "3", "4"}).code == 2);
}

TEST_CASE("family") {
    const Result t1 = run({"family", "theorem1", "-d", "8", "-n", "5"});
    CHECK(t1.code == 0);
    CHECK(contains(t1.out, "members (4): 41, 81, 121, 161"));
    CHECK(contains(t1.out, "501/100"));
    CHECK(contains(t1.out, "verified"));

    const Result neg = run({"family", "theorem1", "-d", "8", "-n", "5", "--eps", "-1"});
    CHECK(neg.code == 0);
    CHECK(contains(neg.out, "-501/100"));

    const Result quad = run({"family", "quad", "-t", "7", "-p", "11,13,17,29"});
    CHECK(quad.code == 0);
    CHECK(contains(quad.out, "members (16): 4943, 58535, 79556, 94669, 148261,"));

    const Result shifted = run({"family", "quad", "-t", "7", "-p", "11,13,17,29", "--shift", "2"});
    CHECK(shifted.code == 0);
    CHECK(contains(shifted.out, "t: 141005"));
    CHECK(contains(shifted.out, "(-0.9999007076)"));

    CHECK(contains(run({"family", "corollary1", "-l", "12", "-k", "3", "-r", "1", "-q", "6"}).out, "1/864"));
    const Result c2 = run({"family", "corollary2", "-p", "5", "-k", "2", "-r", "1"});
    CHECK(c2.code == 0);
    CHECK(contains(c2.out, "6, 11, 16, 21"));
    CHECK(contains(c2.out, "class_exact: true"));

    const Result bad = run({"family", "corollary1", "-l", "6", "-k", "4", "-r", "2", "-q", "5"});
    CHECK(bad.code == 2);
    CHECK(contains(bad.err, "q | l^(k-r)"));
    CHECK(run({"family", "quad", "-t", "7", "-p", "3"}).code == 2);
    CHECK(run({"family", "theorem1", "-d", "8", "-n", "5", "--eps", "2"}).code == 2);
}

TEST_CASE("table1") {
    const Result r = run({"table1"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "   3 |   13 |  1 | 17,23,29,43,53,61"));
    CHECK(contains(r.out, "   5 |   29 |  1 | 7,13,23,53,59,67"));
    const Result four = run({"table1", "--t", "4"});
    CHECK(four.code == 2);
    CHECK(contains(four.err, "square-free"));
}

TEST_CASE("verify-paper") {
    const Result all = run({"verify-paper"});
    CHECK(all.code == 0);
    CHECK_FALSE(contains(all.out, "[FAIL]"));

    const Result list = run({"verify-paper", "--list"});
    CHECK(list.code == 0);
    CHECK(contains(list.out, "table1.t10"));
    CHECK_FALSE(contains(list.out, "[PASS]"));

    const Result only = run({"verify-paper", "--only", "table1"});
    CHECK(contains(only.out, "7/7 items passed"));
    CHECK(run({"verify-paper", "--only", "nothing"}).code == 2);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}
