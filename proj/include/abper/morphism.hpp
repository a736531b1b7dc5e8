#ifndef ABPER_MORPHISM_HPP
#define ABPER_MORPHISM_HPP

#include <array>
#include <cctype>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "matrix2.hpp"
#include "words.hpp"

namespace abper {

/// Nonerasing morphism on {a,b}, given by its two blocks.
class binary_morphism {
public:
    binary_morphism(word image_a, word image_b) : images_{std::move(image_a), std::move(image_b)} {
        if (images_[0].empty()) throw error(errc::erasing_image, "image of a is empty");
        if (images_[1].empty()) throw error(errc::erasing_image, "image of b is empty");
    }
    binary_morphism(std::string_view image_a, std::string_view image_b)
        : binary_morphism(word(image_a), word(image_b)) {}

    const word& image(letter x) const noexcept { return images_[index_of(x)]; }
    const word& image_a() const noexcept { return images_[0]; }
    const word& image_b() const noexcept { return images_[1]; }
    std::size_t length(letter x) const noexcept { return image(x).size(); }
    /// |f| = |f(a)| + |f(b)|.
    std::size_t size() const noexcept { return images_[0].size() + images_[1].size(); }

    bool prolongable_on_a() const noexcept {
        return images_[0].size() >= 2 && images_[0].front() == letter::a;
    }
    bool uniform() const noexcept { return images_[0].size() == images_[1].size(); }

    word operator()(const word& u) const {
        word out;
        for (std::size_t i = 0; i < u.size(); ++i) out.append(image(u[i]));
        return out;
    }

    std::string str() const { return "a->" + images_[0].str() + "; b->" + images_[1].str(); }

    friend bool operator==(const binary_morphism&, const binary_morphism&) = default;

private:
    std::array<word, 2> images_;
};

inline void require_prolongable(const binary_morphism& f) {
    if (!f.prolongable_on_a())
        throw error(errc::not_prolongable, "morphism " + f.str() + " is not prolongable on a");
}

/// (f o g)(x) = f(g(x)).
inline binary_morphism compose(const binary_morphism& f, const binary_morphism& g) {
    return {f(g.image_a()), f(g.image_b())};
}

inline binary_morphism power(const binary_morphism& f, unsigned t) {
    binary_morphism r(word{letter::a}, word{letter::b});
    for (unsigned i = 0; i < t; ++i) r = compose(f, r);
    return r;
}

/// Incidence matrix: entry (i,j) = |f(j)|_i.
inline matrix2 incidence(const binary_morphism& f) {
    matrix2 m;
    for (letter j : {letter::a, letter::b}) {
        const parikh_vector p = parikh(f.image(j));
        m(0, index_of(j)) = p.count_a;
        m(1, index_of(j)) = p.count_b;
    }
    return m;
}

/// (|f^t(a)|, |f^t(b)|) from the column sums of M_f^t.
inline std::pair<big_int, big_int> power_lengths(const binary_morphism& f, std::uint64_t t) {
    const matrix2 p = power(incidence(f), t);
    return {p.column_sum(letter::a), p.column_sum(letter::b)};
}

// ---------------------------------------------------------------------------
// Parsing

namespace detail {

inline word parse_image(std::string_view text, char name) {
    if (text.empty()) throw error(errc::erasing_image, std::string("image of ") + name + " is empty");
    return word(text);
}

inline binary_morphism parse_morphism_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw error(errc::syntax_error, e.what());
    }
    if (!j.is_object() || j.size() != 2 || !j.contains("a") || !j.contains("b") || !j["a"].is_string() ||
        !j["b"].is_string())
        throw error(errc::syntax_error, R"(expected {"a": "<word>", "b": "<word>"})");
    const std::string a = j["a"].get<std::string>();
    const std::string b = j["b"].get<std::string>();
    return {parse_image(a, 'a'), parse_image(b, 'b')};
}

} // namespace detail

/// Parses `a->WORD; b->WORD` (whitespace-insensitive, trailing `;` allowed)
/// or the JSON form {"a": "...", "b": "..."}.
inline binary_morphism parse_morphism(std::string_view text) {
    std::string compact;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
    if (!compact.empty() && compact.front() == '{') return detail::parse_morphism_json(compact);

    std::optional<word> images[2];
    std::string_view rest = compact;
    if (!rest.empty() && rest.back() == ';') rest.remove_suffix(1);
    if (rest.empty()) throw error(errc::syntax_error, "empty morphism text");
    while (true) {
        const std::size_t semi = rest.find(';');
        const std::string_view rule = rest.substr(0, semi);
        const std::size_t arrow = rule.find("->");
        if (arrow == std::string_view::npos)
            throw error(errc::syntax_error, "missing '->' in rule '" + std::string(rule) + "'");
        const std::string_view lhs = rule.substr(0, arrow);
        if (lhs.size() != 1) throw error(errc::syntax_error, "rule must start with a single letter");
        const letter x = letter_from_char(lhs[0]);
        if (images[index_of(x)])
            throw error(errc::syntax_error, std::string("duplicate rule for ") + lhs[0]);
        images[index_of(x)] = detail::parse_image(rule.substr(arrow + 2), lhs[0]);
        if (semi == std::string_view::npos) break;
        rest.remove_prefix(semi + 1);
    }
    if (!images[0] || !images[1]) throw error(errc::syntax_error, "both a and b must be given");
    return {std::move(*images[0]), std::move(*images[1])};
}

// ---------------------------------------------------------------------------
// Fixed point

/// Letter-by-letter generator of f^w(a).
///
/// Uses f^w(a) = a x f(x) f^2(x) ... with f(a) = a x and expands each f^t(x)
/// depth-first from an explicit (letter, remaining depth) stack. Letters with
/// f(c) = c are emitted without descending, so the work per letter stays
/// bounded even when |f^t(a)| grows only linearly.
class fixed_point_stream {
public:
    explicit fixed_point_stream(binary_morphism f) : f_(std::move(f)) {
        require_prolongable(f_);
        tail_ = f_.image_a().substr(1, f_.image_a().size() - 1);
        for (letter c : {letter::a, letter::b})
            self_loop_[index_of(c)] = f_.length(c) == 1 && f_.image(c)[0] == c;
    }

    letter next() {
        if (!started_) {
            started_ = true;
            return letter::a;
        }
        while (true) {
            if (stack_.empty()) {
                push_reversed(tail_, level_);
                ++level_;
            }
            const auto [c, depth] = stack_.back();
            stack_.pop_back();
            if (depth == 0 || self_loop_[index_of(c)]) return c;
            push_reversed(f_.image(c), depth - 1);
        }
    }

private:
    void push_reversed(const word& w, std::size_t depth) {
        for (std::size_t i = w.size(); i-- > 0;) stack_.emplace_back(w[i], depth);
    }

    binary_morphism f_;
    word tail_;
    bool self_loop_[2]{};
    bool started_ = false;
    std::size_t level_ = 0;
    std::vector<std::pair<letter, std::size_t>> stack_;
};

/// pref_L(f^w(a)).
inline word fixed_point_prefix(const binary_morphism& f, std::size_t length) {
    fixed_point_stream stream(f);
    word out;
    out.reserve(length);
    for (std::size_t i = 0; i < length; ++i) out.push_back(stream.next());
    return out;
}

// ---------------------------------------------------------------------------
// Conjugation

enum class conjugation_kind { normalized, power_of_common_word, swapped_square };

constexpr std::string_view to_string(conjugation_kind k) noexcept {
    switch (k) {
    case conjugation_kind::normalized: return "Normalized";
    case conjugation_kind::power_of_common_word: return "PowerOfCommonWord";
    case conjugation_kind::swapped_square: return "SwappedSquare";
    }
    return "";
}

/// For `normalized`:      shift_word . g(w) = f(w) . shift_word.
/// For `swapped_square`:  shift_word . g(w) = f^2(w) . shift_word, g the square
///                        of the shifted morphism.
/// `power` is the power of f the identity refers to (1 or 2).
struct conjugation_result {
    conjugation_kind kind;
    binary_morphism morphism;
    word shift_word;
    unsigned power = 1;
};

/// Cyclically shifts both blocks by their common first letter until the first
/// letters differ. If they end up as (b, a) the shifted morphism is squared.
inline conjugation_result conjugate_normalize(const binary_morphism& f) {
    if (f.image_a() + f.image_b() == f.image_b() + f.image_a())
        return {conjugation_kind::power_of_common_word, f, word{}, 1};

    word wa = f.image_a();
    word wb = f.image_b();
    word shift;
    // Non-commuting blocks disagree on some letter of their periodic
    // extensions within lcm(|f(a)|, |f(b)|) positions.
    const std::size_t limit = std::lcm(wa.size(), wb.size());
    while (wa.front() == wb.front() && shift.size() <= limit) {
        shift.push_back(wa.front());
        wa = wa.rotated_left();
        wb = wb.rotated_left();
    }
    binary_morphism g(std::move(wa), std::move(wb));
    if (g.image_a().front() == letter::a) return {conjugation_kind::normalized, g, shift, 1};
    word square_shift = f(shift) + shift;
    return {conjugation_kind::swapped_square, compose(g, g), std::move(square_shift), 2};
}

} // namespace abper

#endif // ABPER_MORPHISM_HPP
