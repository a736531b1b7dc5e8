// Independent reference implementations for the tests. Everything here works
// on std::string and plain integers and shares no code with the library.
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

struct morph {
    std::string a;
    std::string b;
};

inline std::string apply(const morph& f, const std::string& u) {
    std::string out;
    for (char c : u) out += c == 'a' ? f.a : f.b;
    return out;
}

/// Iterates from "a" until the word is long enough, then cuts.
inline std::string fixed_point(const morph& f, std::size_t length) {
    std::string s = "a";
    while (s.size() < length) {
        std::string next = oracle::apply(f, s);
        if (next.size() == s.size()) break;
        s = std::move(next);
    }
    return s.substr(0, std::min(length, s.size()));
}

inline std::string iterate(const morph& f, const std::string& seed, unsigned t) {
    std::string s = seed;
    for (unsigned i = 0; i < t; ++i) s = oracle::apply(f, s);
    return s;
}

inline std::int64_t count(const std::string& s, char c) { return std::count(s.begin(), s.end(), c); }

/// m[i][j] = occurrences of letter i in the image of letter j.
inline std::array<std::array<std::int64_t, 2>, 2> matrix(const morph& f) {
    return {{{count(f.a, 'a'), count(f.b, 'a')}, {count(f.a, 'b'), count(f.b, 'b')}}};
}

inline std::string thue_morse(std::size_t length) {
    std::string s;
    for (std::size_t i = 0; i < length; ++i) s += __builtin_popcountll(i) % 2 == 0 ? 'a' : 'b';
    return s;
}

/// Every complete block of length p from r on has the same number of a's.
inline bool abelian_period(const std::string& s, std::size_t r, std::size_t p) {
    if (p == 0 || r + p > s.size()) return false;
    const auto first = std::count(s.begin() + r, s.begin() + r + p, 'a');
    for (std::size_t k = r + p; k + p <= s.size(); k += p)
        if (std::count(s.begin() + k, s.begin() + k + p, 'a') != first) return false;
    return true;
}

/// Distinct Parikh classes of length-l factors, by direct counting.
inline std::int64_t abelian_complexity(const std::string& s, std::size_t l) {
    std::vector<bool> seen(l + 1, false);
    std::int64_t classes = 0;
    for (std::size_t i = 0; i + l <= s.size(); ++i) {
        const auto c = std::count(s.begin() + i, s.begin() + i + l, 'a');
        if (!seen[c]) {
            seen[c] = true;
            ++classes;
        }
    }
    return classes;
}

inline std::string random_word(std::mt19937_64& rng, std::size_t min_len, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len(min_len, max_len);
    std::bernoulli_distribution coin(0.5);
    std::string s(len(rng), 'a');
    for (char& c : s) c = coin(rng) ? 'a' : 'b';
    return s;
}

/// Random nonerasing morphism prolongable on a.
inline morph random_prolongable(std::mt19937_64& rng, std::size_t max_len) {
    morph f{"a" + random_word(rng, 1, max_len - 1), random_word(rng, 1, max_len)};
    return f;
}

inline std::string text(const morph& f) { return "a->" + f.a + "; b->" + f.b; }

} // namespace oracle
