#ifndef ABPER_WORDS_HPP
#define ABPER_WORDS_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"

namespace abper {

using big_int = boost::multiprecision::cpp_int;

enum class letter : std::uint8_t { a = 0, b = 1 };

constexpr char to_char(letter x) noexcept { return x == letter::a ? 'a' : 'b'; }
constexpr letter other(letter x) noexcept { return x == letter::a ? letter::b : letter::a; }
constexpr std::size_t index_of(letter x) noexcept { return static_cast<std::size_t>(x); }

inline letter letter_from_char(char c) {
    if (c == 'a') return letter::a;
    if (c == 'b') return letter::b;
    throw error(errc::bad_letter, std::string("symbol '") + c + "' is not in {a,b}");
}

/// Finite word over {a,b}, one bit per letter.
class word {
public:
    using size_type = std::size_t;

    word() = default;
    word(std::initializer_list<letter> letters) : bits_(letters.size()) {
        size_type i = 0;
        for (letter x : letters) bits_[i++] = x == letter::b;
    }
    explicit word(std::string_view text) {
        bits_.reserve(text.size());
        for (char c : text) bits_.push_back(letter_from_char(c) == letter::b);
    }

    static word repeat(letter x, size_type count) {
        word w;
        w.bits_.assign(count, x == letter::b);
        return w;
    }

    size_type size() const noexcept { return bits_.size(); }
    bool empty() const noexcept { return bits_.empty(); }
    void reserve(size_type n) { bits_.reserve(n); }
    void clear() noexcept { bits_.clear(); }

    letter operator[](size_type i) const { return bits_[i] ? letter::b : letter::a; }
    letter front() const { return (*this)[0]; }
    letter back() const { return (*this)[size() - 1]; }

    void push_back(letter x) { bits_.push_back(x == letter::b); }
    word& append(const word& other) {
        bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end());
        return *this;
    }
    word& operator+=(const word& other) { return append(other); }
    friend word operator+(word lhs, const word& rhs) { return lhs.append(rhs); }

    word substr(size_type pos, size_type count) const {
        word w;
        const size_type end = pos + count < size() ? pos + count : size();
        if (pos < end) w.bits_.assign(bits_.begin() + static_cast<std::ptrdiff_t>(pos),
                                      bits_.begin() + static_cast<std::ptrdiff_t>(end));
        return w;
    }
    word prefix(size_type count) const { return substr(0, count); }

    bool starts_with(const word& p) const {
        if (p.size() > size()) return false;
        for (size_type i = 0; i < p.size(); ++i)
            if (bits_[i] != p.bits_[i]) return false;
        return true;
    }

    /// Rotation by one letter: `x w` becomes `w x`.
    word rotated_left() const {
        if (empty()) return *this;
        word w = substr(1, size() - 1);
        w.push_back(front());
        return w;
    }

    std::string str() const {
        std::string s;
        s.reserve(size());
        for (bool bit : bits_) s.push_back(bit ? 'b' : 'a');
        return s;
    }

    friend bool operator==(const word&, const word&) = default;

    friend std::ostream& operator<<(std::ostream& os, const word& w) { return os << w.str(); }

private:
    std::vector<bool> bits_;
};

/// Occurrence counts (|u|_a, |u|_b).
struct parikh_vector {
    big_int count_a = 0;
    big_int count_b = 0;

    big_int length() const { return count_a + count_b; }

    big_int& operator[](letter x) { return x == letter::a ? count_a : count_b; }
    const big_int& operator[](letter x) const { return x == letter::a ? count_a : count_b; }

    parikh_vector& operator+=(const parikh_vector& o) {
        count_a += o.count_a;
        count_b += o.count_b;
        return *this;
    }
    parikh_vector& operator-=(const parikh_vector& o) {
        count_a -= o.count_a;
        count_b -= o.count_b;
        return *this;
    }
    friend parikh_vector operator+(parikh_vector l, const parikh_vector& r) { return l += r; }
    friend parikh_vector operator-(parikh_vector l, const parikh_vector& r) { return l -= r; }
    friend bool operator==(const parikh_vector&, const parikh_vector&) = default;

    friend std::ostream& operator<<(std::ostream& os, const parikh_vector& p) {
        return os << '(' << p.count_a << ',' << p.count_b << ')';
    }
};

inline parikh_vector parikh(const word& u) {
    std::size_t bs = 0;
    for (std::size_t i = 0; i < u.size(); ++i) bs += u[i] == letter::b;
    return {big_int(u.size() - bs), big_int(bs)};
}

inline bool abelian_equivalent(const word& u, const word& v) { return parikh(u) == parikh(v); }

/// Running count of the letter a: result[k] = |pref_k(u)|_a, k = 0..|u|.
inline std::vector<std::int64_t> prefix_a_counts(const word& u) {
    std::vector<std::int64_t> sums(u.size() + 1, 0);
    for (std::size_t i = 0; i < u.size(); ++i) sums[i + 1] = sums[i] + (u[i] == letter::a);
    return sums;
}

} // namespace abper

template <>
struct std::hash<abper::word> {
    std::size_t operator()(const abper::word& w) const noexcept {
        return std::hash<std::string>{}(w.str());
    }
};

#endif // ABPER_WORDS_HPP
