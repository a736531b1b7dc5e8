#ifndef ABPER_PERIODICITY_HPP
#define ABPER_PERIODICITY_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "morphism.hpp"

namespace abper {

/// The infinite word u w^w.
struct eventually_periodic_word {
    word preperiod;
    word period;

    letter at(std::size_t i) const {
        return i < preperiod.size() ? preperiod[i] : period[(i - preperiod.size()) % period.size()];
    }
    friend bool operator==(const eventually_periodic_word&, const eventually_periodic_word&) = default;
};

/// u1 w1^w == u2 w2^w. Both sides are periodic with period lcm(|w1|, |w2|)
/// from position max(|u1|, |u2|) on, so that many more letters decide it.
inline bool eq_eventually_periodic(const word& u1, const word& w1, const word& u2, const word& w2) {
    if (w1.empty() || w2.empty()) throw error(errc::out_of_range, "period words must be nonempty");
    const eventually_periodic_word x{u1, w1};
    const eventually_periodic_word y{u2, w2};
    const std::size_t horizon = std::max(u1.size(), u2.size()) + std::lcm(w1.size(), w2.size());
    for (std::size_t i = 0; i < horizon; ++i)
        if (x.at(i) != y.at(i)) return false;
    return true;
}

struct periodicity_bounds {
    std::size_t max_period = 0;
    std::size_t max_preperiod = 0;
};

inline periodicity_bounds default_periodicity_bounds(const binary_morphism& f) {
    const std::size_t b = 4 * f.size() * f.size();
    return {b, b};
}

struct periodicity_verdict {
    bool periodic = false;
    eventually_periodic_word certificate;   // set when periodic
    periodicity_bounds bounds;
};

/// f(u) f(w)^w == u w^w. The right-hand side then is a fixed point of f that
/// starts with a, and f^w(a) is the only such word.
inline bool certify_periodic(const binary_morphism& f, const word& u, const word& w) {
    return eq_eventually_periodic(f(u), f(w), u, w);
}

/// Searches |u| <= max_preperiod, |w| <= max_period, minimal |u| first, and
/// only reports candidates that pass certify_periodic.
inline periodicity_verdict decide_periodic(const binary_morphism& f, periodicity_bounds bounds) {
    require_prolongable(f);
    periodicity_verdict v;
    v.bounds = bounds;
    if (bounds.max_period == 0) return v;
    const std::size_t horizon = bounds.max_preperiod + 4 * bounds.max_period;
    const word s = fixed_point_prefix(f, horizon);

    // Least r such that s[i] == s[i+p] for all i >= r inside the prefix.
    std::vector<std::size_t> min_pre(bounds.max_period + 1, 0);
    for (std::size_t p = 1; p <= bounds.max_period; ++p) {
        std::size_t r = 0;
        for (std::size_t i = horizon - p; i-- > 0;)
            if (s[i] != s[i + p]) {
                r = i + 1;
                break;
            }
        min_pre[p] = r;
    }
    for (std::size_t r = 0; r <= bounds.max_preperiod; ++r)
        for (std::size_t p = 1; p <= bounds.max_period; ++p) {
            if (min_pre[p] > r) continue;
            const word u = s.prefix(r);
            const word w = s.substr(r, p);
            if (certify_periodic(f, u, w)) {
                v.periodic = true;
                v.certificate = {u, w};
                return v;
            }
        }
    return v;
}

inline periodicity_verdict decide_periodic(const binary_morphism& f) {
    return decide_periodic(f, default_periodicity_bounds(f));
}

} // namespace abper

#endif // ABPER_PERIODICITY_HPP
