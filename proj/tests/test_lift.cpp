#include <sstream>

#include <gtest/gtest.h>

#include <abper/abper.hpp>

#include "oracles.hpp"

using namespace abper;

namespace {

const binary_morphism example_f("ab", "bbaa");

std::string images_1based(const uniform_lift& h) {
    std::string out;
    for (const auto& img : h.images) {
        if (!out.empty()) out += ' ';
        for (std::size_t x : img) out += std::to_string(x + 1);
    }
    return out;
}

} // namespace

TEST(Lift, SixLetterExample) {
    const uniform_lift h = build_lift(example_f);
    EXPECT_EQ(h.size(), 6u);
    EXPECT_EQ(h.k, 3u);
    EXPECT_EQ(images_1based(h), "123 456 345 634 561 212");
    std::string tau;
    for (letter c : h.coding) tau += to_char(c);
    EXPECT_EQ(tau, "abbbaa");
    EXPECT_EQ(h.alphabet[4], (extended_letter{letter::b, 2}));
    EXPECT_EQ(h.initial, 0u);
    EXPECT_TRUE(is_bijective(h));
}

TEST(Lift, ThueMorse) {
    const binary_morphism tm("ab", "ba");
    const uniform_lift h = build_lift(tm);
    EXPECT_EQ(h.size(), 4u);
    EXPECT_EQ(h.k, 2u);
    const auto lifted = lift_fixed_point_prefix(h, 10000);
    const std::string ref = oracle::thue_morse(10000);
    for (std::size_t i = 0; i < ref.size(); ++i) ASSERT_EQ(to_char(h.coding[lifted[i]]), ref[i]) << i;
    // Columns of the 4-letter lift: h = 12 34 34 12, so digit 0 maps 1,3 -> 1,3 twice.
    EXPECT_EQ(images_1based(h), "12 34 34 12");
    EXPECT_FALSE(is_bijective(h));
}

TEST(Lift, Verify) {
    const uniform_lift h = build_lift(example_f);
    const auto nine = lift_fixed_point_prefix(h, 9);
    std::string s;
    for (std::size_t x : nine) s += std::to_string(x + 1);
    EXPECT_EQ(s, "123456345");
    EXPECT_TRUE(lift_verify(example_f, h, 9));
    EXPECT_TRUE(lift_verify(example_f, h, 1));
    EXPECT_TRUE(lift_verify(example_f, h, 100000));
}

TEST(Lift, ErrorsAndGuards) {
    try {
        build_lift(binary_morphism("aab", "bbaab"));
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::not_rank_one);
    }
    // k = nA + mB >= 2 whenever A, B >= 1, so the trace guard is unreachable
    // from any decomposed matrix.
    for (int n = 1; n <= 4; ++n)
        for (int m = 1; m <= 4; ++m)
            for (int A = 1; A <= 4; ++A)
                for (int B = 1; B <= 4; ++B) EXPECT_GE((rank1_form{A, B, n, m}.trace()), 2);
    // A form that does not match the morphism is rejected.
    EXPECT_THROW(build_lift(example_f, rank1_form{1, 0, 1, 1}), error);
}

TEST(Lift, BijectivityCounterexample) {
    uniform_lift h = build_lift(example_f);
    h.images[1][0] = h.images[0][0];
    EXPECT_FALSE(is_bijective(h));
}

TEST(Dfao, Examples) {
    const uniform_lift h = build_lift(example_f);
    EXPECT_EQ(dfao_eval(h, 4), letter::a);
    EXPECT_EQ(dfao_eval(h, 0), letter::a);
    EXPECT_EQ(base_digits(0, 3), std::vector<std::size_t>{});
    EXPECT_EQ(base_digits(5, 3), (std::vector<std::size_t>{1, 2}));

    // Beyond the materializable range: expanding the last digit through h.
    const dfao a = dfao_of(h);
    const big_int n = boost::multiprecision::pow(big_int(10), 12);
    const auto digits = base_digits(n, 3);
    const std::vector<std::size_t> head(digits.begin(), digits.end() - 1);
    EXPECT_EQ(a.run(digits), h.images[a.run(head)][digits.back()]);
    EXPECT_EQ(dfao_eval(h, n), h.coding[h.images[a.run(base_digits(n / 3, 3))][(n % 3).convert_to<std::size_t>()]]);
}

TEST(Dfao, AgreesWithFixedPointAcrossCorpus) {
    for (const auto& [a, b] : {std::pair{"ab", "bbaa"}, std::pair{"ab", "ba"}, std::pair{"abba", "ab"},
                              std::pair{"aabb", "ba"}, std::pair{"abbbaa", "bbaaab"}, std::pair{"aabbab", "ba"}}) {
        const binary_morphism f(a, b);
        const uniform_lift h = build_lift(f);
        for (const auto& img : h.images) EXPECT_EQ(img.size(), h.k);
        for (letter c : {letter::a, letter::b}) EXPECT_EQ(f(f.image(c)).size(), h.k * f.length(c));
        const word s = fixed_point_prefix(f, 100000);
        const auto lifted = lift_fixed_point_prefix(h, 100000);
        const dfao aut = dfao_of(h);
        for (std::size_t n = 0; n < 100000; ++n) {
            const std::size_t q = aut.run(base_digits(n, h.k));
            ASSERT_EQ(q, lifted[n]) << f.str() << " n=" << n;
            ASSERT_EQ(aut.output[q], s[n]) << f.str() << " n=" << n;
        }
    }
}

TEST(Dfao, DotAndJsonExport) {
    const uniform_lift h = build_lift(example_f);
    const std::string dot = to_dot(h);
    EXPECT_NE(dot.find("digraph dfao"), std::string::npos);
    EXPECT_NE(dot.find("5 [label=\"5\\n(b,2)/a\"]"), std::string::npos);
    EXPECT_NE(dot.find("4 -> 6 [label=\"0\"]"), std::string::npos);
    std::size_t edges = 0;
    std::istringstream lines(dot);
    for (std::string line; std::getline(lines, line);)
        if (line.find(" -> ") != std::string::npos && line.find("start") == std::string::npos) ++edges;
    EXPECT_EQ(edges, 18u);
    EXPECT_EQ(to_dot(h), dot);

    const auto j = to_json(h);
    EXPECT_EQ(j["k"], 3);
    EXPECT_EQ(j["states"].size(), 6u);
    EXPECT_EQ(j["states"][3]["next"], nlohmann::json::parse("[6,3,4]"));
}
