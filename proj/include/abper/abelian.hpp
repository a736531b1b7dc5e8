#ifndef ABPER_ABELIAN_HPP
#define ABPER_ABELIAN_HPP

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <optional>
#include <ranges>
#include <set>
#include <span>
#include <vector>

#include "matrix.hpp"
#include "morphism.hpp"
#include "words.hpp"

namespace abper {

// Brute-force scans over finite prefixes. Everything here is evidence about
// the inspected prefix only.

/// All complete blocks s[r+kp .. r+(k+1)p-1] inside the prefix of length
/// `horizon` have equal Parikh vectors.
struct abelian_period_witness {
    std::size_t period = 0;
    std::size_t preperiod = 0;
    std::size_t horizon = 0;
    friend bool operator==(const abelian_period_witness&, const abelian_period_witness&) = default;
};

/// Checks (r, p) against prefix sums of the letter a (see prefix_a_counts).
inline bool validates_abelian_period(std::span<const std::int64_t> a_sums, std::size_t preperiod,
                                     std::size_t period) {
    const std::size_t length = a_sums.size() - 1;
    if (period == 0 || preperiod + period > length) return false;
    const std::int64_t first = a_sums[preperiod + period] - a_sums[preperiod];
    for (std::size_t start = preperiod + period; start + period <= length; start += period)
        if (a_sums[start + period] - a_sums[start] != first) return false;
    return true;
}

inline bool validates_abelian_period(const word& source, std::size_t preperiod, std::size_t period) {
    const auto sums = prefix_a_counts(source);
    return validates_abelian_period(sums, preperiod, period);
}

/// Lexicographically least (r, p), r first, valid on the whole prefix.
inline std::optional<abelian_period_witness> abelian_period_oracle(const word& source, std::size_t max_p,
                                                                   std::size_t max_r) {
    if (source.size() < 2 * max_p + max_r)
        throw error(errc::horizon_too_short, "prefix of length " + std::to_string(source.size()) +
                                                 " is shorter than 2*max_p + max_r");
    const auto sums = prefix_a_counts(source);
    for (std::size_t r = 0; r <= max_r; ++r)
        for (std::size_t p = 1; p <= max_p; ++p)
            if (validates_abelian_period(sums, r, p)) return abelian_period_witness{p, r, source.size()};
    return std::nullopt;
}

/// max - min of |w|_a over all length-`len` windows w of the prefix.
inline std::int64_t window_imbalance(std::span<const std::int64_t> a_sums, std::size_t len) {
    const std::size_t length = a_sums.size() - 1;
    if (len == 0 || len > length) return 0;
    std::int64_t lo = a_sums[len] - a_sums[0];
    std::int64_t hi = lo;
    for (std::size_t i = 1; i + len <= length; ++i) {
        const std::int64_t c = a_sums[i + len] - a_sums[i];
        lo = std::min(lo, c);
        hi = std::max(hi, c);
    }
    return hi - lo;
}

struct complexity_profile {
    std::size_t horizon = 0;
    /// Index l-1 holds the value for window length l.
    std::vector<std::int64_t> abelian_complexity;
    std::vector<std::int64_t> imbalance;

    std::int64_t max_imbalance() const {
        return imbalance.empty() ? 0 : *std::max_element(imbalance.begin(), imbalance.end());
    }
};

/// On a binary word the Parikh classes of length-l windows are exactly the
/// counts between the extremes, so complexity(l) = imbalance(l) + 1.
inline complexity_profile make_complexity_profile(const word& source, std::size_t nmax) {
    if (source.size() < 2 * nmax)
        throw error(errc::horizon_too_short, "prefix of length " + std::to_string(source.size()) +
                                                 " is shorter than 2*nmax");
    const auto sums = prefix_a_counts(source);
    complexity_profile prof;
    prof.horizon = source.size();
    prof.imbalance.reserve(nmax);
    prof.abelian_complexity.reserve(nmax);
    for (std::size_t len = 1; len <= nmax; ++len) {
        const std::int64_t d = window_imbalance(sums, len);
        prof.imbalance.push_back(d);
        prof.abelian_complexity.push_back(d + 1);
    }
    return prof;
}

/// y_k = |pref_k|_a - |pref_k|_b for k = 0..|source| (steps (1,1) for a, (1,-1) for b).
inline std::vector<std::int64_t> lattice_path_heights(const word& source) {
    std::vector<std::int64_t> ys(source.size() + 1, 0);
    for (std::size_t i = 0; i < source.size(); ++i) ys[i + 1] = ys[i] + (source[i] == letter::a ? 1 : -1);
    return ys;
}

/// { source[r + k d] : r + k d < |source| }.
template <std::ranges::random_access_range R>
std::set<std::ranges::range_value_t<R>> letters_at_progression(const R& source, std::size_t r, std::size_t d) {
    const auto size = static_cast<std::size_t>(std::ranges::size(source));
    if (d == 0) throw error(errc::out_of_range, "progression difference must be positive");
    if (r >= size) throw error(errc::empty_selection, "progression start lies beyond the prefix");
    std::set<std::ranges::range_value_t<R>> seen;
    for (std::size_t i = r; i < size; i += d) seen.insert(source[i]);
    return seen;
}

inline std::set<letter> letters_at_progression(const word& source, std::size_t r, std::size_t d) {
    if (d == 0) throw error(errc::out_of_range, "progression difference must be positive");
    if (r >= source.size()) throw error(errc::empty_selection, "progression start lies beyond the prefix");
    std::set<letter> seen;
    for (std::size_t i = r; i < source.size() && seen.size() < 2; i += d) seen.insert(source[i]);
    return seen;
}

/// For theta2 = 1, M_f = [[A+1, alpha A], [B, alpha B + 1]] and the linear form
/// B|u|_a - A|u|_b is invariant under f.
inline bool theta2_one_invariant_check(const binary_morphism& f, const word& u) {
    const matrix2 m = matrix_of(f);
    const spectral_profile s = make_spectral_profile(m);
    if (s.kind != theta2_kind::integer_nonzero || s.theta2_value != 1)
        throw error(errc::wrong_spectral_case, "theta2 of " + f.str() + " is not 1");
    const big_int A = m(0, 0) - 1;
    const big_int B = m(1, 0);
    const parikh_vector before = parikh(u);
    const parikh_vector after = m * before;
    return B * after.count_a - A * after.count_b == B * before.count_a - A * before.count_b;
}

} // namespace abper

#endif // ABPER_ABELIAN_HPP
