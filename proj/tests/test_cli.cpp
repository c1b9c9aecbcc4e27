#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <sys/wait.h>

#include "jobspec.hpp"

using qacodes::JobSpec;
using qacodes::parse_args;

namespace {

struct Run {
    int status;
    std::string out;
};

// Runs the built binary with a shell-quoted argument string; stderr is discarded.
Run run(const std::string& args) {
    const std::string cmd = std::string(QACODES_BIN) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return {-1, ""};
    std::string out;
    std::array<char, 4096> buf;
    for (std::size_t n; (n = fread(buf.data(), 1, buf.size(), p)) > 0;) out.append(buf.data(), n);
    const int st = pclose(p);
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

std::size_t records(const std::string& out) {
    std::size_t n = 0;
    std::size_t pos = 0;
    while (pos < out.size()) {
        const auto end = out.find('\n', pos);
        if (out[pos] != '#') ++n;
        pos = end == std::string::npos ? out.size() : end + 1;
    }
    return n;
}

const std::string kWorked = "--group Z3xZ6 --subgroup '(1,0);(0,2)' --q 2";

}  // namespace

TEST(JobSpec, RoundTripsThroughCanonicalFlags) {
    const std::vector<std::vector<std::string>> inputs{
        {"enumerate", "--q", "2", "--group", "Z3xZ6", "--subgroup", "(1,0);(0,2)", "--idempotents", "1,2,3"},
        {"enumerate", "--group", "Z6", "--q", "2", "--dedup-frobenius", "--range", "0:10", "--format", "tsv", "--threads", "3",
         "--distance", "--basis", "normal"},
        {"idempotents", "--refine", "--group", "Z7", "--q", "2"},
        {"count", "--group", "Z15", "--q", "4", "--idempotents", "2"},
        {"mindist", "--in", QACODES_BIN, "--method", "bz", "--threads", "2"},
        {"code", "--group", "Z6", "--subgroup", "(2)", "--q", "2", "--generator", "1,0,0|0,1,0", "--view", "group"},
        {"verify-paper", "--long", "--tamper", "4"},
    };
    for (const auto& in : inputs) {
        const JobSpec s = parse_args(in);
        EXPECT_EQ(s.command, in[0]);
        const JobSpec again = parse_args(s.to_args());
        EXPECT_EQ(again, s) << s.to_string();
        EXPECT_EQ(again.to_args(), s.to_args());
    }
    const auto s = parse_args({"count", "--group", "Z3", "--q", "2", "--idempotents", "1,2"});
    EXPECT_EQ(s.to_string(), "count --group Z3 --q 2 --idempotents 1,2");
}

TEST(JobSpec, RejectsBadFlags) {
    EXPECT_THROW(parse_args({"enumerate", "--group", "Z3"}), CLI::ParseError);
    EXPECT_THROW(parse_args({"count", "--group", "Z3", "--q", "2", "--format", "xml"}), CLI::ParseError);
    EXPECT_THROW(parse_args({"frobnicate"}), CLI::ParseError);
    EXPECT_THROW(parse_args({}), CLI::ParseError);
}

TEST(Cli, WorkedExampleEnumeratesSeventyFive) {
    const auto r = run("enumerate " + kWorked + " --idempotents 1,2,3");
    ASSERT_EQ(r.status, 0);
    EXPECT_EQ(records(r.out), 75u);
    EXPECT_NE(r.out.find("# total 75\n"), std::string::npos);
    const auto c = run("count " + kWorked + " --idempotents 1,2,3");
    EXPECT_NE(c.out.find("{1,2,3}\tdim 5\tcount 75"), std::string::npos);
}

TEST(Cli, OutputIsDeterministic) {
    for (const std::string& args : std::vector<std::string>{"enumerate " + kWorked + " --idempotents 2,3 --distance --threads 2",
                                   "enumerate --group Z6 --subgroup '(2)' --q 2 --dedup-frobenius --format tsv",
                                   "idempotents " + kWorked + " --refine", "count --group Z2xZ4 --subgroup '(1,0);(0,2)' --q 3"}) {
        const auto a = run(args), b = run(args);
        EXPECT_EQ(a.status, 0) << args;
        EXPECT_FALSE(a.out.empty());
        EXPECT_EQ(a.out, b.out) << args;
    }
}

TEST(Cli, RangesPartitionTheListing) {
    const auto all = run("enumerate " + kWorked + " --idempotents 1,2,3 --format tsv");
    const auto lo = run("enumerate " + kWorked + " --idempotents 1,2,3 --format tsv --range 0:40");
    const auto hi = run("enumerate " + kWorked + " --idempotents 1,2,3 --format tsv --range 40:");
    const auto header_end = lo.out.find('\n') + 1;
    EXPECT_EQ(lo.out + hi.out.substr(header_end), all.out);
}

TEST(Cli, AbelianCaseHasOneCodePerIdempotent) {
    const auto r = run("enumerate --group Z3 --subgroup '(1)' --q 2 --format tsv");
    ASSERT_EQ(r.status, 0);
    EXPECT_EQ(records(r.out), 1u + 3u);  // header + one code per nonzero idempotent
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run("count --group Z3x --q 3").status, 1);
    EXPECT_EQ(run("count --group Z6 --q 3").status, 2);  // 3 divides |H|
    EXPECT_EQ(run("enumerate --group Z3xZ6 --q 3").status, 2);
    EXPECT_EQ(run("enumerate " + kWorked + " --idempotents 9").status, 1);
    EXPECT_EQ(run("enumerate --group Z6 --subgroup '(2)' --q 2 --dedup-frobenius --basis polynomial").status, 2);
    EXPECT_EQ(run("--nonsense").status, 1);
    EXPECT_EQ(run("mindist --in /nonexistent/file").status, 1);
}

TEST(Cli, CodeFileFeedsMindist) {
    const std::string path = ::testing::TempDir() + "qacodes_code.txt";
    ASSERT_EQ(run("code --group Z6 --subgroup '(2)' --q 2 --generator '1,0,0|1,0,0' --out " + path).status, 0);
    for (const char* m : {"exhaustive", "bz"}) {
        const auto r = run("mindist --in " + path + " --method " + m);
        EXPECT_EQ(r.status, 0);
        EXPECT_NE(r.out.find("[6,3]_2"), std::string::npos);
        EXPECT_NE(r.out.find("d 2 "), std::string::npos) << r.out;
    }
}

TEST(Cli, TamperedReferenceVectorFails) {
    const auto r = run("verify-paper --tamper 0");
    EXPECT_NE(r.status, 0);
    EXPECT_NE(r.out.find("FAIL 3"), std::string::npos);
    EXPECT_NE(r.out.find("PASS 1"), std::string::npos);
}
