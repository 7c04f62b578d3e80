#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "nct/cli.hpp"
#include "nct/surd.hpp"

namespace {

struct CliResult {
    int status;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int status = nct::run_cli(std::move(args), out, err);
    return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("cf") {
    auto r = run({"cf", "sqrt(54)"});
    CHECK(r.status == 0);
    CHECK(r.out == "[7; (2, 1, 6, 1, 2, 14)]\n");

    CHECK(run({"cf", "7/3"}).out == "[2; 3]\n");
    CHECK(run({"cf", "-7/3"}).out == "[-3; 1, 2]\n");
    CHECK(run({"cf", "(-1+sqrt(5))/2"}).out == "[0; (1)]\n");
    // Leading-minus literals need the usual -- separator (or the
    // parenthesized spelling) so they are not mistaken for flags.
    CHECK(run({"cf", "--", "-sqrt(2)"}).out == "[-2; 1, 1, (2)]\n");
    CHECK(run({"cf", "(0-sqrt(2))/1"}).out == "[-2; 1, 1, (2)]\n");
}

TEST_CASE("complexity") {
    auto r = run({"complexity", "sqrt(54)"});
    CHECK(r.status == 0);
    CHECK(r.out == "6\n");
    CHECK(run({"complexity", "sqrt(2)"}).out == "1\n");

    auto rat = run({"complexity", "7/3"});
    CHECK(rat.status == 2);
    CHECK(rat.out.empty());
    CHECK_FALSE(rat.err.empty());
}

TEST_CASE("equiv") {
    CHECK(run({"equiv", "sqrt(2)", "sqrt(3)"}).out == "false\n");
    CHECK(run({"equiv", "sqrt(54)", "(7+sqrt(54))/1"}).out == "true\n");
    CHECK(run({"equiv", "sqrt(2)", "(0+sqrt(2))/2"}).out == "true\n");
}

TEST_CASE("k0") {
    CHECK(run({"k0", "sqrt(2)", "-1", "1"}).out == "true\n");
    CHECK(run({"k0", "sqrt(2)", "0", "-1"}).out == "false\n");
    CHECK(run({"k0", "sqrt(2)", "1", "0"}).out == "true\n");
}

TEST_CASE("mobius") {
    auto r = run({"mobius", "sqrt(54)", "1", "0", "1", "1"});
    CHECK(r.status == 0);
    CHECK(r.out == "(1+sqrt(54))/1\n");
    // Output re-parses to an equal value.
    auto parsed = std::get<nct::QuadSurd>(
        nct::parse_surd_literal(r.out.substr(0, r.out.size() - 1)));
    CHECK(parsed == nct::QuadSurd(1, 54, 1));

    CHECK(run({"mobius", "sqrt(2)", "1", "1", "1", "1"}).status == 2);  // singular
}

TEST_CASE("lemma2") {
    CHECK(run({"lemma2", "3", "0", "0", "3"}).out == "case=trivial-integer k=3\n");
    CHECK(run({"lemma2", "2", "1", "1", "1"}).out ==
          "case=1 theta=(-1+sqrt(5))/2 k=3/2+1/2*sqrt(5) delta=5\n");
    CHECK(run({"lemma2", "1", "1", "-1", "1"}).out ==
          "case=4 theta=(-1+sqrt(2))/1 k=sqrt(2) delta_prime=8\n");
    CHECK(run({"lemma2", "0", "1", "-1", "0"}).out == "case=rational-rejected branch=5\n");
    CHECK(run({"lemma2", "2", "0", "0", "5"}).out == "case=rational-rejected branch=b0-linear\n");
    CHECK(run({"lemma2", "1", "1", "0", "1"}).out == "case=rank-degenerate\n");
    CHECK(run({"lemma2", "1", "0", "3", "1"}).out == "case=empty-solution\n");
}

TEST_CASE("cm-theta") {
    CHECK(run({"cm-theta", "2"}).out == "theta=sqrt(2) k=sqrt(2) generator=omega\n");
    CHECK(run({"cm-theta", "1"}).out == "theta=(-1+sqrt(2))/1 k=sqrt(2) generator=1+omega\n");
    CHECK(run({"cm-theta", "3", "--half"}).out ==
          "theta=(-1+sqrt(5))/2 k=-1/2+1/2*sqrt(5) generator=omega\n");
    CHECK(run({"cm-theta", "7", "--half"}).out ==
          "theta=(-3+sqrt(17))/2 k=-1/2+1/2*sqrt(17) generator=1+omega\n");

    CHECK(run({"cm-theta", "12"}).status == 2);          // not squarefree
    CHECK(run({"cm-theta", "2", "--half"}).status == 2); // d != 3 mod 4
}

TEST_CASE("jlambda") {
    CHECK(run({"jlambda", "2"}).out == "1728\n");
    CHECK(run({"jlambda", "1/2"}).out == "1728\n");
    CHECK(run({"jlambda", "2", "--paper-constant"}).out == "432\n");
    CHECK(run({"jlambda", "-1", "--paper-constant"}).out == "432\n");
    CHECK(run({"jlambda", "1"}).status == 2);
    CHECK(run({"jlambda", "sqrt(2)"}).status == 2);
}

TEST_CASE("normalized-period") {
    CHECK(run({"normalized-period", "sqrt(54)"}).out == "(1, 2, 14, 2, 1, 6)\n");
    CHECK(run({"normalized-period", "sqrt(54)", "--no-canonicalize"}).out ==
          "(1, 1/2, 3, 1/2, 1, 7)\n");
    CHECK(run({"normalized-period", "sqrt(2)"}).out == "(1)\n");
}

TEST_CASE("report") {
    auto tsv = run({"report", NCT_DATASET_PATH});
    CHECK(tsv.status == 0);
    CHECK(tsv.out.rfind("label\ttheta\tgenerator\tcomplexity\tpredicted_rank\tknown_rank\tagrees\n",
                        0) == 0);
    // Deterministic output.
    CHECK(run({"report", NCT_DATASET_PATH}).out == tsv.out);

    auto json = run({"report", NCT_DATASET_PATH, "--format", "json"});
    CHECK(json.status == 0);
    auto doc = nlohmann::json::parse(json.out);
    CHECK(doc.is_array());
    CHECK(doc.size() >= 10);
    for (const auto& row : doc) {
        CHECK(row.contains("label"));
        CHECK(row["complexity"].get<long>() == row["predicted_rank"].get<long>() + 1);
    }

    CHECK(run({"report", "/nonexistent.json"}).status == 2);

    // Empty dataset: header only, still a success.
    std::string empty_path = "test_cli_empty_dataset.json";
    {
        std::ofstream f(empty_path);
        f << "[]\n";
    }
    auto empty = run({"report", empty_path});
    CHECK(empty.status == 0);
    CHECK(empty.out ==
          "label\ttheta\tgenerator\tcomplexity\tpredicted_rank\tknown_rank\tagrees\n");
    std::remove(empty_path.c_str());
}

TEST_CASE("usage errors") {
    CHECK(run({}).status == 1);
    CHECK(run({"frobnicate"}).status == 1);
    CHECK(run({"cf"}).status == 1);
    CHECK(run({"mobius", "sqrt(2)", "1", "0"}).status == 1);  // bad entry count

    auto bad = run({"cf", "sqr(2)"});
    CHECK(bad.status == 1);
    CHECK(bad.err.find("literal grammar") != std::string::npos);

    CHECK(run({"--help"}).status == 0);
}

TEST_CASE("printed surds re-parse across subcommands") {
    for (const char* literal : {"sqrt(54)", "(-1+sqrt(5))/2", "(3-sqrt(2))/4"}) {
        auto r = run({"mobius", literal, "1", "1", "2", "3"});
        REQUIRE(r.status == 0);
        std::string text = r.out.substr(0, r.out.size() - 1);
        auto x = std::get<nct::QuadSurd>(nct::parse_surd_literal(text));
        CHECK(x.str() == text);
    }
}
