#ifndef ABPER_LIFT_HPP
#define ABPER_LIFT_HPP

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "matrix.hpp"
#include "morphism.hpp"

namespace abper {

/// Position `index` inside the block f(base).
struct extended_letter {
    letter base = letter::a;
    std::size_t index = 0;
    friend bool operator==(const extended_letter&, const extended_letter&) = default;
};

/// k-uniform morphism h over extended letters with a coding back to {a,b}.
/// Extended letters are numbered 0..|f|-1: positions of f(a) first, then
/// those of f(b). h and the coding are stored by number.
struct uniform_lift {
    std::vector<extended_letter> alphabet;
    std::vector<std::vector<std::size_t>> images;
    std::vector<letter> coding;
    std::size_t initial = 0;
    std::size_t k = 0;

    std::size_t size() const noexcept { return alphabet.size(); }

    std::size_t id(const extended_letter& x, const binary_morphism& f) const {
        return x.base == letter::a ? x.index : f.length(letter::a) + x.index;
    }
};

/// Lifts a rank-1 morphism: h((c,i)) is the i-th length-k chunk of f(f(c)),
/// each letter d of f(c) contributing its positions (d,0) .. (d,|f(d)|-1).
/// Requires |f(f(c))| = k |f(c)|, which is what rank 1 with trace k gives.
inline uniform_lift build_lift(const binary_morphism& f, const rank1_form& form) {
    require_prolongable(f);
    if (form.matrix() != matrix_of(f)) throw error(errc::not_rank_one, "rank-1 form does not match the morphism");
    if (form.trace() < 2) throw error(errc::degenerate_trace, "trace must be at least 2");
    uniform_lift lift;
    lift.k = form.trace().convert_to<std::size_t>();
    const std::size_t len_a = f.length(letter::a);
    for (letter c : {letter::a, letter::b})
        for (std::size_t i = 0; i < f.length(c); ++i) {
            lift.alphabet.push_back({c, i});
            lift.coding.push_back(f.image(c)[i]);
        }
    auto number = [&](letter d, std::size_t i) { return d == letter::a ? i : len_a + i; };

    for (letter c : {letter::a, letter::b}) {
        std::vector<std::size_t> annotated;
        const word& block = f.image(c);
        for (std::size_t j = 0; j < block.size(); ++j)
            for (std::size_t i = 0; i < f.length(block[j]); ++i) annotated.push_back(number(block[j], i));
        if (annotated.size() != lift.k * block.size())
            throw error(errc::not_rank_one, "|f(f(c))| is not trace * |f(c)|");
        for (std::size_t i = 0; i < block.size(); ++i)
            lift.images.emplace_back(annotated.begin() + static_cast<std::ptrdiff_t>(i * lift.k),
                                     annotated.begin() + static_cast<std::ptrdiff_t>((i + 1) * lift.k));
    }
    lift.initial = 0;
    return lift;
}

inline uniform_lift build_lift(const binary_morphism& f) { return build_lift(f, rank1_decompose(matrix_of(f))); }

/// pref_L(h^w(initial)) as letter numbers, using s[i] = h(s[i / k])[i % k].
inline std::vector<std::size_t> lift_fixed_point_prefix(const uniform_lift& lift, std::size_t length) {
    std::vector<std::size_t> s;
    s.reserve(length);
    for (std::size_t i = 0; i < length; ++i)
        s.push_back(i == 0 ? lift.initial : lift.images[s[i / lift.k]][i % lift.k]);
    return s;
}

/// coding(pref_L(h^w(initial))) == pref_L(f^w(a)).
inline bool lift_verify(const binary_morphism& f, const uniform_lift& lift, std::size_t length) {
    if (lift.images.empty() || lift.images[lift.initial].empty() || lift.images[lift.initial][0] != lift.initial)
        return false;
    const auto lifted = lift_fixed_point_prefix(lift, length);
    fixed_point_stream stream(f);
    for (std::size_t i = 0; i < length; ++i)
        if (lift.coding[lifted[i]] != stream.next()) return false;
    return true;
}

/// Canonical base-k digits of n, most significant first; n = 0 gives none.
inline std::vector<std::size_t> base_digits(big_int n, std::size_t k) {
    std::vector<std::size_t> digits;
    while (n > 0) {
        digits.push_back((n % k).convert_to<std::size_t>());
        n /= k;
    }
    return {digits.rbegin(), digits.rend()};
}

/// Automaton with output: delta(q, j) = h(q)[j], output = coding.
struct dfao {
    std::size_t k = 0;
    std::vector<std::vector<std::size_t>> transition;
    std::vector<letter> output;
    std::size_t start = 0;

    std::size_t run(const std::vector<std::size_t>& digits) const {
        std::size_t q = start;
        for (std::size_t j : digits) q = transition[q][j];
        return q;
    }
};

inline dfao dfao_of(const uniform_lift& lift) { return {lift.k, lift.images, lift.coding, lift.initial}; }

/// Letter n of the fixed point, read off the base-k digits of n.
inline letter dfao_eval(const uniform_lift& lift, const big_int& n) {
    if (n < 0) throw error(errc::out_of_range, "index must be nonnegative");
    const dfao a = dfao_of(lift);
    return a.output[a.run(base_digits(n, lift.k))];
}

/// Every digit column q -> h(q)[j] is a permutation.
inline bool is_bijective(const uniform_lift& lift) {
    for (std::size_t j = 0; j < lift.k; ++j) {
        std::vector<bool> hit(lift.size(), false);
        for (const auto& img : lift.images) {
            if (img.size() != lift.k || hit[img[j]]) return false;
            hit[img[j]] = true;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Export. States are numbered from 1 in the order of the extended alphabet.

inline std::string to_dot(const uniform_lift& lift) {
    std::ostringstream os;
    os << "digraph dfao {\n"
       << "  rankdir=LR;\n"
       << "  node [shape=circle];\n"
       << "  start [shape=point];\n"
       << "  start -> " << lift.initial + 1 << ";\n";
    for (std::size_t q = 0; q < lift.size(); ++q) {
        const auto& x = lift.alphabet[q];
        os << "  " << q + 1 << " [label=\"" << q + 1 << "\\n(" << to_char(x.base) << ',' << x.index << ")/"
           << to_char(lift.coding[q]) << "\"];\n";
    }
    for (std::size_t q = 0; q < lift.size(); ++q)
        for (std::size_t j = 0; j < lift.k; ++j)
            os << "  " << q + 1 << " -> " << lift.images[q][j] + 1 << " [label=\"" << j << "\"];\n";
    os << "}\n";
    return os.str();
}

inline nlohmann::ordered_json to_json(const uniform_lift& lift) {
    nlohmann::ordered_json j;
    j["k"] = lift.k;
    j["start"] = lift.initial + 1;
    nlohmann::ordered_json states = nlohmann::ordered_json::array();
    for (std::size_t q = 0; q < lift.size(); ++q) {
        nlohmann::ordered_json s;
        s["id"] = q + 1;
        s["base"] = std::string(1, to_char(lift.alphabet[q].base));
        s["index"] = lift.alphabet[q].index;
        s["output"] = std::string(1, to_char(lift.coding[q]));
        std::vector<std::size_t> next;
        for (std::size_t t : lift.images[q]) next.push_back(t + 1);
        s["next"] = next;
        states.push_back(std::move(s));
    }
    j["states"] = std::move(states);
    return j;
}

} // namespace abper

#endif // ABPER_LIFT_HPP
