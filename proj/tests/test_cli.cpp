#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "cli.hpp"

using namespace abper;

namespace {

struct outcome {
    int status;
    std::string out;
    std::string err;
};

outcome invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "abper");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out;
    std::ostringstream err;
    const int status = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {status, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) { return std::filesystem::temp_directory_path() / name; }

} // namespace

TEST(Cli, ClassifyExamples) {
    const outcome tm = invoke({"classify", "a->ab; b->ba"});
    EXPECT_EQ(tm.status, 0);
    const json j = json::parse(tm.out);
    EXPECT_EQ(j["answer"], "PureAbelianPeriodic");
    EXPECT_EQ(j["reason"]["K"], 1);
    EXPECT_EQ(j["reason"]["period"], "2");
    EXPECT_TRUE(validate_report(j).empty());

    const outcome example = invoke({"classify", "a->ab; b->bbaa"});
    EXPECT_EQ(example.status, 2);
    const json p = json::parse(example.out);
    EXPECT_EQ(p["answer"], "Unknown");
    EXPECT_EQ(p["witnesses"]["pure"]["outcome"], "NotPure");

    const outcome text = invoke({"classify", "a->ab; b->a", "--format", "text"});
    EXPECT_EQ(text.status, 0);
    EXPECT_NE(text.out.find("IrrationalFrequencies"), std::string::npos);
}

TEST(Cli, Determinism) {
    for (const char* m : {"a->ab; b->bbaa", "a->aab; b->b", "a->ab; b->a"})
        EXPECT_EQ(invoke({"classify", m}).out, invoke({"classify", m}).out);
}

TEST(Cli, DfaoDot) {
    const outcome r = invoke({"dfao", "a->ab; b->bbaa", "--format", "dot"});
    EXPECT_EQ(r.status, 0);
    std::size_t nodes = 0;
    std::size_t edges = 0;
    std::istringstream lines(r.out);
    for (std::string line; std::getline(lines, line);) {
        if (line.find("(a,") != std::string::npos || line.find("(b,") != std::string::npos) ++nodes;
        if (line.find(" -> ") != std::string::npos && line.find("start") == std::string::npos) ++edges;
    }
    EXPECT_EQ(nodes, 6u);
    EXPECT_EQ(edges, 18u);
    // The transition table h(1..6) = 123, 456, 345, 634, 561, 212.
    const std::vector<std::string> images{"123", "456", "345", "634", "561", "212"};
    for (std::size_t q = 0; q < 6; ++q)
        for (std::size_t d = 0; d < 3; ++d) {
            const std::string edge = "  " + std::to_string(q + 1) + " -> " + images[q][d] + " [label=\"" +
                                     std::to_string(d) + "\"];";
            EXPECT_NE(r.out.find(edge), std::string::npos) << edge;
        }
}

TEST(Cli, OtherVerbs) {
    EXPECT_EQ(invoke({"prefix", "a->ab; b->bbaa", "-n", "18"}).out, "abbbaabbaabbaaabab\n");

    const outcome pure = invoke({"pure", "a->ab; b->bbaa"});
    EXPECT_EQ(json::parse(pure.out)["pure"]["outcome"], "NotPure");

    const outcome ev = invoke({"eventual", "a->ab; b->bbaa", "--kmax", "2"});
    EXPECT_EQ(ev.status, 2);
    EXPECT_EQ(json::parse(ev.out)["scans"].size(), 2u);

    const outcome cx = invoke({"complexity", "a->ab; b->ba", "--horizon", "64", "--nmax", "2"});
    EXPECT_EQ(cx.out, "length,complexity,imbalance\n1,2,1\n2,3,2\n");

    const outcome path = invoke({"path", "a->ab; b->bbaa", "-n", "6"});
    EXPECT_EQ(path.out, "index,height\n0,0\n1,1\n2,0\n3,-1\n4,-2\n5,-1\n6,0\n");

    const json lift = json::parse(invoke({"lift", "a->ab; b->bbaa"}).out);
    EXPECT_EQ(lift["k"], 3);
    EXPECT_EQ(lift["bijective"], true);

    EXPECT_EQ(invoke({"dfao", "a->ab; b->bbaa", "--index", "4", "--format", "text"}).out, "a\n");

    const json orc = json::parse(invoke({"oracle", "a->ab; b->ba", "--horizon", "4096", "--max-p", "8", "--max-r", "8"}).out);
    EXPECT_EQ(orc["witness"]["period"], 2);

    const json per = json::parse(invoke({"periodic", "a->ab; b->b"}).out);
    EXPECT_EQ(per["result"]["u"], "a");
    EXPECT_EQ(per["result"]["w"], "b");

    const json res = json::parse(invoke({"residues", "a->ab; b->bbaa", "-t", "1", "-d", "5", "--horizon", "19683"}).out);
    EXPECT_EQ(res["residues"].size(), 5u);
    EXPECT_EQ(res["complete"], true);
}

TEST(Cli, InputErrors) {
    const outcome erasing = invoke({"classify", "a->; b->b"});
    EXPECT_EQ(erasing.status, 1);
    EXPECT_NE(erasing.err.find("ErasingImage"), std::string::npos);
    EXPECT_EQ(std::count(erasing.err.begin(), erasing.err.end(), '\n'), 1);

    EXPECT_EQ(invoke({"classify", "a->ab; b->ba", "--bogus"}).status, 1);
    EXPECT_EQ(invoke({"classify", "a->ba; b->b"}).status, 1);
    EXPECT_EQ(invoke({"classify"}).status, 1);
    EXPECT_EQ(invoke({}).status, 1);
    EXPECT_EQ(invoke({"frobnicate", "x"}).status, 1);
    EXPECT_EQ(invoke({"classify", "a->ab; b->ba", "--format", "dot"}).status, 1);
    EXPECT_EQ(invoke({"residues", "a->ab; b->bbaa", "-d", "6"}).status, 1);
    EXPECT_EQ(invoke({"lift", "a->aab; b->bbaab"}).status, 1);
}

TEST(Cli, FileInputOutputAndCorpus) {
    const auto in = temp_file("abper_cli_morphism.txt");
    std::ofstream(in) << R"({"a": "ab", "b": "ba"})";
    const auto outpath = temp_file("abper_cli_out.json");
    const outcome r = invoke({"classify", in.string(), "-o", outpath.string()});
    EXPECT_EQ(r.status, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream back(outpath);
    const json j = json::parse(back);
    EXPECT_EQ(j["answer"], "PureAbelianPeriodic");

    const std::string corpus = std::string(ABPER_CORPUS_DIR) + "/sample.txt";
    const outcome batch = invoke({"classify", "--corpus", corpus, "--format", "text", "--jobs", "4"});
    EXPECT_EQ(batch.status, 2);  // the example example is Unknown
    std::istringstream rows(batch.out);
    std::vector<std::string> lines;
    for (std::string line; std::getline(rows, line);) lines.push_back(line);
    ASSERT_EQ(lines.size(), 10u);
    EXPECT_NE(lines[0].find("PureAbelianPeriodic"), std::string::npos);
    EXPECT_NE(lines[7].find("Unknown"), std::string::npos);
    EXPECT_EQ(batch.out, invoke({"classify", "--corpus", corpus, "--format", "text", "--jobs", "1"}).out);

    const outcome as_json = invoke({"classify", "--corpus", corpus});
    const json all = json::parse(as_json.out);
    ASSERT_EQ(all.size(), 10u);
    for (const auto& rep : all) EXPECT_TRUE(validate_report(rep).empty());
    std::filesystem::remove(in);
    std::filesystem::remove(outpath);
}
