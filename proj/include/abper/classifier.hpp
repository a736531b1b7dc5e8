#ifndef ABPER_CLASSIFIER_HPP
#define ABPER_CLASSIFIER_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string_view>
#include <vector>

#include "abelian.hpp"
#include "matrix.hpp"
#include "morphism.hpp"
#include "periodicity.hpp"
#include "rank1.hpp"

namespace abper {

enum class answer { abelian_periodic, pure_abelian_periodic, not_abelian_periodic, unknown };
enum class certainty { proved, bounded_search };
enum class reason_code {
    special_form_abab,
    chunks_equivalent,
    eventual_witness_found,
    theta2_abs_gt_one_unbalanced,
    irrational_frequencies,
    theta2_one_form_fails,
    theta2_minus_one,
    nonprimitive_periodic_certificate,
    nonprimitive_no_period_found,
    rank1_pure_refuted_eventual_open,
    resource_exhausted,
};

constexpr std::string_view to_string(answer a) noexcept {
    switch (a) {
    case answer::abelian_periodic: return "AbelianPeriodic";
    case answer::pure_abelian_periodic: return "PureAbelianPeriodic";
    case answer::not_abelian_periodic: return "NotAbelianPeriodic";
    case answer::unknown: return "Unknown";
    }
    return "";
}

constexpr std::string_view to_string(certainty c) noexcept {
    return c == certainty::proved ? "Proved" : "BoundedSearch";
}

constexpr std::string_view to_string(reason_code r) noexcept {
    switch (r) {
    case reason_code::special_form_abab: return "SpecialFormABAB";
    case reason_code::chunks_equivalent: return "ChunksEquivalent";
    case reason_code::eventual_witness_found: return "EventualWitnessFound";
    case reason_code::theta2_abs_gt_one_unbalanced: return "Theta2AbsGtOne_Unbalanced";
    case reason_code::irrational_frequencies: return "IrrationalFrequencies";
    case reason_code::theta2_one_form_fails: return "Theta2One_FormFails";
    case reason_code::theta2_minus_one: return "Theta2MinusOne";
    case reason_code::nonprimitive_periodic_certificate: return "NonPrimitive_PeriodicCertificate";
    case reason_code::nonprimitive_no_period_found: return "NonPrimitive_NoPeriodFound";
    case reason_code::rank1_pure_refuted_eventual_open: return "Rank1_PureRefuted_EventualOpen";
    case reason_code::resource_exhausted: return "ResourceExhausted";
    }
    return "";
}

inline bool is_abelian_periodic(answer a) noexcept {
    return a == answer::abelian_periodic || a == answer::pure_abelian_periodic;
}

struct classify_options {
    std::uint64_t eventual_k_max = 8;
    /// Prefix length for evidence attachments (never used for proofs).
    std::size_t horizon = 100'000;
    std::optional<periodicity_bounds> periodicity{}; // default: 4 |f|^2 each
    big_int eventual_offset_budget = 1'000'000;      // cut offsets per K
    std::uint64_t pure_max_iterations = 1'000'000;
    bool collect_evidence = true;
};

/// Largest window imbalance seen on a prefix, over a sparse set of window
/// lengths (1..64, powers of two and the lengths |f^t(a)|, |f^t(b)|).
struct imbalance_evidence {
    std::size_t horizon = 0;
    std::int64_t max_imbalance = 0;
    std::size_t at_length = 0;
    std::size_t lengths_checked = 0;
};

inline imbalance_evidence measure_imbalance(const binary_morphism& f, std::size_t horizon) {
    const word s = fixed_point_prefix(f, horizon);
    const auto sums = prefix_a_counts(s);
    const std::size_t limit = horizon / 2;
    std::set<std::size_t> lengths;
    for (std::size_t l = 1; l <= std::min<std::size_t>(64, limit); ++l) lengths.insert(l);
    for (std::size_t l = 1; l <= limit; l *= 2) lengths.insert(l);
    for (std::uint64_t t = 1; t < 64; ++t) {
        const auto [la, lb] = power_lengths(f, t);
        if (la <= limit) lengths.insert(la.convert_to<std::size_t>());
        if (lb <= limit) lengths.insert(lb.convert_to<std::size_t>());
        if (la > limit && lb > limit) break;
    }
    imbalance_evidence ev;
    ev.horizon = horizon;
    for (std::size_t l : lengths) {
        const std::int64_t d = window_imbalance(sums, l);
        if (d > ev.max_imbalance) {
            ev.max_imbalance = d;
            ev.at_length = l;
        }
    }
    ev.lengths_checked = lengths.size();
    return ev;
}

/// f(a) = a(ba)^k and f(b) = b(ab)^m.
inline bool is_special_abab(const binary_morphism& f) {
    auto alternates_from = [](const word& w, letter first) {
        if (w.size() % 2 == 0) return false;
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i] != (i % 2 == 0 ? first : other(first))) return false;
        return true;
    };
    return alternates_from(f.image_a(), letter::a) && alternates_from(f.image_b(), letter::b);
}

struct verdict {
    explicit verdict(binary_morphism f) : morphism(std::move(f)) {}

    binary_morphism morphism;
    matrix2 matrix;
    spectral_profile spectral;
    std::optional<rank1_form> rank1;

    answer result = answer::unknown;
    certainty grade = certainty::bounded_search;
    reason_code reason = reason_code::resource_exhausted;

    std::optional<pure_verdict> pure;
    std::optional<eventual_witness> eventual;
    std::optional<periodicity_verdict> periodicity;
    std::optional<conjugation_result> conjugation;
    std::optional<frequency_report> frequencies;
    std::optional<imbalance_evidence> evidence;

    // Bounds actually used by the bounded parts of the search.
    std::uint64_t eventual_k_max = 0;
    std::uint64_t eventual_k_scanned = 0;
    bool eventual_scan_complete = true;
    big_int eventual_offset_budget = 0;
    std::uint64_t pure_max_iterations = 0;
};

namespace detail {

inline void classify_nonprimitive(verdict& v, const classify_options& opts) {
    const binary_morphism& f = v.morphism;
    if (v.matrix(1, 0) == 0) {
        // f(a) in a+, so the fixed point is a^w.
        periodicity_verdict pv;
        pv.bounds = opts.periodicity.value_or(default_periodicity_bounds(f));
        pv.periodic = certify_periodic(f, word{}, word{letter::a});
        pv.certificate = {word{}, word{letter::a}};
        v.periodicity = pv;
    } else {
        v.periodicity = decide_periodic(f, opts.periodicity.value_or(default_periodicity_bounds(f)));
    }
    if (v.periodicity->periodic) {
        v.result = answer::abelian_periodic;
        v.grade = certainty::proved;
        v.reason = reason_code::nonprimitive_periodic_certificate;
        return;
    }
    v.result = answer::not_abelian_periodic;
    v.grade = certainty::bounded_search;
    v.reason = reason_code::nonprimitive_no_period_found;
    if (opts.collect_evidence) v.evidence = measure_imbalance(f, opts.horizon);
}

inline void classify_nonzero_theta2(verdict& v, const classify_options& opts) {
    const binary_morphism& f = v.morphism;
    v.frequencies = letter_frequencies(f);
    if (is_special_abab(f)) {
        v.result = answer::abelian_periodic;
        v.grade = certainty::proved;
        v.reason = reason_code::special_form_abab;
        return;
    }
    v.result = answer::not_abelian_periodic;
    v.grade = certainty::proved;
    const spectral_profile& s = v.spectral;
    if (s.theta2_abs == abs_class::gt_one) {
        v.reason = reason_code::theta2_abs_gt_one_unbalanced;
    } else if (s.theta2_abs == abs_class::in_open_unit_interval) {
        v.reason = reason_code::irrational_frequencies;
    } else if (s.theta2_value == 1) {
        v.reason = reason_code::theta2_one_form_fails;
    } else {
        v.reason = reason_code::theta2_minus_one;
    }
    if (opts.collect_evidence && v.reason != reason_code::irrational_frequencies)
        v.evidence = measure_imbalance(f, opts.horizon);
}

inline void classify_rank1(verdict& v, const classify_options& opts) {
    const binary_morphism& f = v.morphism;
    v.rank1 = rank1_decompose(v.matrix);
    v.conjugation = conjugate_normalize(f);
    v.pure = decide_pure(f, {opts.pure_max_iterations});
    if (v.pure->outcome == pure_outcome::pure_abelian_periodic) {
        v.result = answer::pure_abelian_periodic;
        v.grade = certainty::proved;
        v.reason = reason_code::chunks_equivalent;
        return;
    }
    if (v.pure->outcome == pure_outcome::resource_exhausted) {
        v.result = answer::unknown;
        v.grade = certainty::bounded_search;
        v.reason = reason_code::resource_exhausted;
        return;
    }
    for (std::uint64_t K = 1; K <= opts.eventual_k_max; ++K) {
        const eventual_scan_result scan = eventual_scan(f, *v.rank1, K, opts.eventual_offset_budget);
        v.eventual_k_scanned = K;
        if (!scan.complete) v.eventual_scan_complete = false;
        if (scan.witness) {
            v.eventual = scan.witness;
            v.result = answer::abelian_periodic;
            v.grade = certainty::proved;
            v.reason = reason_code::eventual_witness_found;
            return;
        }
    }
    v.result = answer::unknown;
    v.grade = certainty::bounded_search;
    v.reason = reason_code::rank1_pure_refuted_eventual_open;
}

} // namespace detail

/// Routes by primitivity and theta2:
///  - non-primitive: abelian periodic iff periodic (certificate search);
///  - primitive, theta2 != 0: abelian periodic iff f(a) = a(ba)^k, f(b) = b(ab)^m;
///  - primitive, theta2 = 0: exact pure decision, then a bounded eventual scan.
inline verdict classify(const binary_morphism& f, const classify_options& opts = {}) {
    require_prolongable(f);
    verdict v(f);
    v.matrix = matrix_of(f);
    v.spectral = make_spectral_profile(v.matrix);
    v.eventual_k_max = opts.eventual_k_max;
    v.eventual_offset_budget = opts.eventual_offset_budget;
    v.pure_max_iterations = opts.pure_max_iterations;

    if (!v.spectral.primitive)
        detail::classify_nonprimitive(v, opts);
    else if (v.spectral.kind != theta2_kind::zero)
        detail::classify_nonzero_theta2(v, opts);
    else
        detail::classify_rank1(v, opts);
    return v;
}

/// (preperiod, period) that the verdict claims, for abelian-periodic answers.
inline std::optional<std::pair<big_int, big_int>> claimed_abelian_period(const verdict& v) {
    switch (v.reason) {
    case reason_code::special_form_abab: return std::pair<big_int, big_int>{0, 2};
    case reason_code::chunks_equivalent: return std::pair<big_int, big_int>{0, v.pure->period};
    case reason_code::eventual_witness_found:
        return std::pair<big_int, big_int>{v.eventual->cut_offset, v.eventual->period};
    case reason_code::nonprimitive_periodic_certificate:
        return std::pair<big_int, big_int>{v.periodicity->certificate.preperiod.size(),
                                           v.periodicity->certificate.period.size()};
    default: return std::nullopt;
    }
}

} // namespace abper

#endif // ABPER_CLASSIFIER_HPP
