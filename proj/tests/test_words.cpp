#include <random>

#include <gtest/gtest.h>

#include <abper/abper.hpp>

#include "oracles.hpp"

using namespace abper;

namespace {

binary_morphism to_lib(const oracle::morph& f) { return {f.a, f.b}; }

} // namespace

TEST(Word, BasicsAndBitPacking) {
    const word w("abbab");
    EXPECT_EQ(w.size(), 5u);
    EXPECT_EQ(w[0], letter::a);
    EXPECT_EQ(w[1], letter::b);
    EXPECT_EQ(w.str(), "abbab");
    EXPECT_EQ(w.substr(1, 3).str(), "bba");
    EXPECT_EQ(w.substr(3, 10).str(), "ab");
    EXPECT_EQ(w.rotated_left().str(), "bbaba");
    EXPECT_TRUE(w.starts_with(word("abb")));
    EXPECT_FALSE(w.starts_with(word("ba")));
    EXPECT_TRUE(word().empty());
    EXPECT_EQ(word::repeat(letter::b, 3).str(), "bbb");
    EXPECT_EQ((word("ab") + word("ba")).str(), "abba");
    EXPECT_THROW(word("abc"), error);
}

TEST(Parikh, Examples) {
    EXPECT_EQ(parikh(word("abbbaa")), (parikh_vector{3, 3}));
    EXPECT_EQ(parikh(word()), (parikh_vector{0, 0}));
    EXPECT_EQ(parikh(word("bb")), (parikh_vector{0, 2}));
    EXPECT_TRUE(abelian_equivalent(word("abba"), word("baab")));
    EXPECT_FALSE(abelian_equivalent(word("ab"), word("bb")));
}

TEST(Parikh, HomomorphismLaw) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 1000; ++i) {
        const std::string u = oracle::random_word(rng, 0, 60);
        const std::string v = oracle::random_word(rng, 0, 60);
        EXPECT_EQ(parikh(word(u + v)), parikh(word(u)) + parikh(word(v)));
        EXPECT_EQ(parikh(word(u)).count_a, oracle::count(u, 'a'));
    }
}

TEST(Parse, Examples) {
    const binary_morphism f = parse_morphism("a->ab; b->bbaa");
    EXPECT_EQ(f.image_a().str(), "ab");
    EXPECT_EQ(f.image_b().str(), "bbaa");
    EXPECT_TRUE(f.prolongable_on_a());

    const binary_morphism id = parse_morphism("a->a; b->b");
    EXPECT_EQ(id, binary_morphism("a", "b"));
    EXPECT_FALSE(id.prolongable_on_a());

    try {
        parse_morphism("a->; b->b");
        FAIL() << "erasing image accepted";
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::erasing_image);
    }
}

TEST(Parse, GrammarVariants) {
    const binary_morphism f("ab", "bbaa");
    EXPECT_EQ(parse_morphism("  b -> bbaa ;a->ab; "), f);
    EXPECT_EQ(parse_morphism(R"({"a": "ab", "b": "bbaa"})"), f);
    EXPECT_EQ(parse_morphism(f.str()), f);

    auto code_of = [](std::string_view text) {
        try {
            parse_morphism(text);
        } catch (const error& e) {
            return e.code();
        }
        return errc::out_of_range;  // no error
    };
    EXPECT_EQ(code_of("a->ab"), errc::syntax_error);
    EXPECT_EQ(code_of("a->ab; a->b"), errc::syntax_error);
    EXPECT_EQ(code_of("a=ab; b->b"), errc::syntax_error);
    EXPECT_EQ(code_of("a->ac; b->b"), errc::bad_letter);
    EXPECT_EQ(code_of("c->a; b->b"), errc::bad_letter);
    EXPECT_EQ(code_of(R"({"a": "", "b": "b"})"), errc::erasing_image);
    EXPECT_EQ(code_of(R"({"a": "ab"})"), errc::syntax_error);
    EXPECT_EQ(code_of(""), errc::syntax_error);
}

TEST(FixedPoint, Examples) {
    EXPECT_EQ(fixed_point_prefix(binary_morphism("ab", "bbaa"), 18).str(), "abbbaabbaabbaaabab");
    EXPECT_TRUE(fixed_point_prefix(binary_morphism("ab", "bbaa"), 0).empty());
    EXPECT_EQ(fixed_point_prefix(binary_morphism("ab", "a"), 8).str(), "abaababa");
    EXPECT_THROW(fixed_point_prefix(binary_morphism("ba", "b"), 4), error);
}

TEST(FixedPoint, MatchesIterationOracle) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 300; ++i) {
        const oracle::morph f = oracle::random_prolongable(rng, 5);
        const std::string expected = oracle::fixed_point(f, 500);
        EXPECT_EQ(fixed_point_prefix(to_lib(f), expected.size()).str(), expected) << oracle::text(f);
    }
    // Linear growth: a->ab, b->b gives a b^w.
    EXPECT_EQ(fixed_point_prefix(binary_morphism("ab", "b"), 6).str(), "abbbbb");
    EXPECT_EQ(fixed_point_prefix(binary_morphism("aab", "b"), 10).str(), oracle::fixed_point({"aab", "b"}, 10));
}

TEST(FixedPoint, StreamingConsistency) {
    const binary_morphism f("ab", "bbaa");
    const word big = fixed_point_prefix(f, 5000);
    for (std::size_t l : {0u, 1u, 7u, 100u, 4999u}) EXPECT_TRUE(big.starts_with(fixed_point_prefix(f, l)));
}

TEST(FixedPoint, PrefixNesting) {
    std::mt19937_64 rng(6);
    for (int i = 0; i < 100; ++i) {
        const binary_morphism f = to_lib(oracle::random_prolongable(rng, 4));
        word prev("a");
        for (unsigned t = 1; t < 7; ++t) {
            const word cur = f(prev);
            EXPECT_GT(cur.size(), prev.size());
            EXPECT_TRUE(cur.starts_with(prev));
            prev = cur;
        }
    }
}

TEST(PowerLengths, Examples) {
    const binary_morphism f("ab", "bbaa");
    EXPECT_EQ(power_lengths(f, 2), (std::pair<big_int, big_int>{6, 12}));
    EXPECT_EQ(power_lengths(f, 0), (std::pair<big_int, big_int>{1, 1}));
    EXPECT_EQ(power_lengths(binary_morphism("ab", "a"), 5), (std::pair<big_int, big_int>{13, 8}));
    const oracle::morph fib{"ab", "a"};
    EXPECT_EQ(oracle::iterate(fib, "a", 5).size(), 13u);
    EXPECT_EQ(oracle::iterate(fib, "b", 5).size(), 8u);
    // Large t stays exact.
    EXPECT_EQ(power_lengths(f, 200).first, boost::multiprecision::pow(big_int(3), 200) * 2 / 3);
}

TEST(Compose, MatchesOracleAndPowers) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        const oracle::morph f{oracle::random_word(rng, 1, 4), oracle::random_word(rng, 1, 4)};
        const oracle::morph g{oracle::random_word(rng, 1, 4), oracle::random_word(rng, 1, 4)};
        const binary_morphism fg = compose(to_lib(f), to_lib(g));
        EXPECT_EQ(fg.image_a().str(), oracle::apply(f, g.a));
        EXPECT_EQ(fg.image_b().str(), oracle::apply(f, g.b));
    }
    const binary_morphism f("ab", "bbaa");
    EXPECT_EQ(power(f, 2).image_b().str(), "bbaabbaaabab");
    EXPECT_EQ(power(f, 0), binary_morphism("a", "b"));
}

TEST(Conjugation, Examples) {
    const auto r1 = conjugate_normalize(binary_morphism("ab", "bbaa"));
    EXPECT_EQ(r1.kind, conjugation_kind::normalized);
    EXPECT_TRUE(r1.shift_word.empty());

    EXPECT_EQ(conjugate_normalize(binary_morphism("abab", "ab")).kind, conjugation_kind::power_of_common_word);

    const binary_morphism f("aab", "abab");
    const auto r3 = conjugate_normalize(f);
    EXPECT_EQ(r3.kind, conjugation_kind::normalized);
    EXPECT_EQ(r3.morphism, binary_morphism("aba", "baba"));
    EXPECT_EQ(r3.shift_word.str(), "a");
    for (const char* w : {"a", "b"}) EXPECT_EQ(r3.shift_word + r3.morphism(word(w)), f(word(w)) + r3.shift_word);
}

TEST(Conjugation, IdentityOnRandomWords) {
    std::mt19937_64 rng(8);
    int normalized = 0;
    int squared = 0;
    for (int i = 0; i < 300; ++i) {
        const binary_morphism f = to_lib({oracle::random_word(rng, 1, 5), oracle::random_word(rng, 1, 5)});
        const conjugation_result r = conjugate_normalize(f);
        if (r.kind == conjugation_kind::power_of_common_word) {
            EXPECT_EQ(f.image_a() + f.image_b(), f.image_b() + f.image_a());
            continue;
        }
        const binary_morphism fp = power(f, r.power);
        EXPECT_NE(r.morphism.image_a().front(), r.morphism.image_b().front()) << f.str();
        if (r.kind == conjugation_kind::normalized) ++normalized;
        if (r.kind == conjugation_kind::swapped_square) ++squared;
        for (int k = 0; k < (i < 3 ? 1000 : 10); ++k) {
            const word w(oracle::random_word(rng, 0, 20));
            ASSERT_EQ(r.shift_word + r.morphism(w), fp(w) + r.shift_word) << f.str() << " on " << w;
        }
    }
    EXPECT_GT(normalized, 0);
    EXPECT_GT(squared, 0);
}
