#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "qpring/cli.hpp"

using namespace qpring;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult cli(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("classify prints one line per notion for the chosen element") {
    auto r = cli({"classify", "--ring", "Zmod 4", "--element", "3"});
    CHECK(r.code == 0);
    CHECK(r.err.empty());
    CHECK(r.out ==
          "ring Zmod4\n"
          "3 SR pass b=3 bc2=1\n"
          "3 SPR pass n=1 x=3 b=3 p=1\n"
          "3 QP pass p=1 r=0 b=3\n"
          "3 SC pass e=1 q=2 qinv=2\n"
          "3 PP pass p=0 k=1 b=3\n"
          "3 SPRC pass e=0 n=1\n"
          "3 SEMIREG pass b=3\n"
          "3 UQP pass p=0\n");
}

TEST_CASE("classify covers the whole ring with the star selector") {
    auto r = cli({"classify", "--ring", "Zmod 4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("ring Zmod4\n") == 0);
    CHECK(r.out.find("0 SR pass b=0 bc2=1\n") != std::string::npos);
    CHECK(r.out.find("2 SR fail\n") != std::string::npos);
    CHECK(r.out.find("2 SPR pass n=2 x=0 b=0 p=0\n") != std::string::npos);
    CHECK(r.out.find("2 QP pass p=0 r=2 b=0\n") != std::string::npos);
    CHECK(r.out.find("2 SC pass e=0 q=2 qinv=2\n") != std::string::npos);
    CHECK(r.out.find("2 UQP pass p=1\n") != std::string::npos);
    CHECK(r.out.find("3 QP pass p=1 r=0 b=3\n") != std::string::npos);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 1 + 4 * 8);
}

TEST_CASE("classify accepts ranges and rejects bad selectors") {
    auto r = cli({"classify", "--ring", "Zmod 6", "--element", "1-2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("1 SR pass") != std::string::npos);
    CHECK(r.out.find("2 SR pass b=2 bc2=1\n") != std::string::npos);
    CHECK(r.out.find("\n3 ") == std::string::npos);
    CHECK(r.out.find("0 SR") == std::string::npos);

    CHECK(cli({"classify", "--ring", "Zmod 4", "--element", "7"}).code == 2);
    CHECK(cli({"classify", "--ring", "Zmod 4", "--element", "2-1"}).code == 2);
    CHECK(cli({"classify", "--ring", "Zmod 4", "--element", "x"}).code == 2);
}

TEST_CASE("classify marks unital-only notions on non-unital rings") {
    auto r = cli({"classify", "--ring", "ZeroMul 4", "--element", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("1 SR fail\n") != std::string::npos);
    CHECK(r.out.find("1 PP skip requires_unity\n") != std::string::npos);
    CHECK(r.out.find("1 SPRC skip requires_unity\n") != std::string::npos);
    CHECK(r.out.find("1 SEMIREG skip requires_unity\n") != std::string::npos);
    CHECK(r.out.find("1 UQP skip requires_unity\n") != std::string::npos);
}

TEST_CASE("subsets prints the eight named sets") {
    auto r = cli({"subsets", "--ring", "Zmod 4"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "ring Zmod4\n"
          "order 4\n"
          "unity 1\n"
          "Units: [1,3]\n"
          "Idem: [0,1]\n"
          "Nil: [0,2]\n"
          "Q: [0,2]\n"
          "QN: [0,2]\n"
          "Qnil: [0,2]\n"
          "J: [0,2]\n"
          "Jsharp: [0,2]\n");
}

TEST_CASE("subsets reports unity-dependent sets as unavailable without unity") {
    auto r = cli({"subsets", "--ring", "ZeroMul 4"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "ring ZeroMul4\n"
          "order 4\n"
          "unity none\n"
          "Units: requires_unity\n"
          "Idem: [0]\n"
          "Nil: [0,1,2,3]\n"
          "Q: [0,1,2,3]\n"
          "QN: [0,1,2,3]\n"
          "Qnil: requires_unity\n"
          "J: [0,1,2,3]\n"
          "Jsharp: requires_unity\n");
}

TEST_CASE("verify runs selected checks and reports a summary") {
    auto r = cli({"verify", "--theorems", "L2.7"});
    CHECK(r.code == 0);
    CHECK(r.out.find("SUMMARY checked=191 failed=0 skipped=0\n") != std::string::npos);
    CHECK(r.out.find("CHECK L2.7 Zmod4 2 pass neg=2\n") != std::string::npos);

    auto multi = cli({"verify", "--theorems", "L2.7,T2.8"});
    CHECK(multi.code == 0);
    CHECK(multi.out.find("CHECK T2.8 Zmod4 3 pass p=1 r=0 b=3\n") != std::string::npos);
    CHECK(multi.out.find("SUMMARY checked=382 failed=0 skipped=0\n") != std::string::npos);

    CHECK(cli({"verify", "--theorems", "T9.9"}).code == 2);
}

TEST_CASE("verify writes the report to a file and to stdout") {
    const std::string path = "/tmp/qpring_cli_report.txt";
    auto r = cli({"verify", "--theorems", "P2.18", "--out", path});
    CHECK(r.code == 0);
    std::ifstream f(path, std::ios::binary);
    REQUIRE(f.good());
    std::ostringstream buf;
    buf << f.rdbuf();
    CHECK(buf.str() == r.out);
    CHECK(r.out.find("CHECK P2.18 Zmod4 * pass") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("verify reads a corpus file") {
    const std::string path = "/tmp/qpring_cli_corpus.txt";
    {
        std::ofstream f(path, std::ios::binary);
        f << "# tiny corpus\n"
          << "Zmod 3\n"
          << "\n"
          << "ZeroMul 2\n";
    }
    auto r = cli({"verify", "--corpus", path, "--theorems", "L2.6"});
    CHECK(r.code == 0);
    CHECK(r.out.find("SUMMARY checked=5 failed=0 skipped=0\n") != std::string::npos);
    CHECK(r.out.find("CHECK L2.6 Zmod3 ") != std::string::npos);
    CHECK(r.out.find("CHECK L2.6 ZeroMul2 ") != std::string::npos);
    std::remove(path.c_str());

    CHECK(cli({"verify", "--corpus", "/tmp/qpring_no_corpus.txt"}).code == 2);
}

TEST_CASE("verify output is deterministic") {
    auto a = cli({"verify", "--theorems", "T2.8,P2.18,L3.4"});
    auto b = cli({"verify", "--theorems", "T2.8,P2.18,L3.4"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("dump writes tables to stdout or a file that reloads") {
    auto r = cli({"dump", "--ring", "Zmod 6"});
    CHECK(r.code == 0);
    CHECK(r.out.find("ring Zmod6\n") == 0);
    CHECK(r.out.find("unity 1\n") != std::string::npos);

    const std::string path = "/tmp/qpring_cli_dump.ring";
    auto w = cli({"dump", "--ring", "Zmod 6", "--out", path});
    CHECK(w.code == 0);
    CHECK(w.out.empty());

    auto back = cli({"subsets", "--ring", "File " + path});
    CHECK(back.code == 0);
    CHECK(back.out.find("ring Zmod6\n") == 0);
    CHECK(back.out.find("Units: [1,5]\n") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("exit codes distinguish usage, semantic, and feasibility errors") {
    CHECK(cli({}).code == 2);
    CHECK(cli({"--help"}).code == 0);
    CHECK(cli({"--help"}).out.find("classify") != std::string::npos);
    CHECK(cli({"frobnicate"}).code == 2);

    auto parse = cli({"classify", "--ring", "Bogus 3"});
    CHECK(parse.code == 2);
    CHECK(parse.err.find("error:") == 0);

    CHECK(cli({"classify", "--ring", "Mat 2 (Zmod 5)"}).code == 3);
    CHECK(cli({"subsets", "--ring", "Corner (Zmod 4) e=2"}).code == 2);
    CHECK(cli({"classify"}).code == 2);
}
