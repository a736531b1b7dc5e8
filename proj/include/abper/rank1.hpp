#ifndef ABPER_RANK1_HPP
#define ABPER_RANK1_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "matrix.hpp"
#include "morphism.hpp"

namespace abper {

// Machinery for theta2 = 0, i.e. M_f = [[nA, mA], [nB, mB]]. Block lengths
// scale by the trace k = nA + mB under f, so f^t(a) and f^t(b) split into n and
// m chunks of length (A+B) k^(t-1), and none of these words is materialized:
// positions are located by descending through f^t = f^(t-1) o f.

/// Parikh vectors of f^j(a), f^j(b) for j = 0..depth.
class iterate_table {
public:
    iterate_table(const binary_morphism& f, std::uint64_t depth) : f_(f) {
        rows_.reserve(depth + 1);
        rows_.push_back({parikh_vector{1, 0}, parikh_vector{0, 1}});
        const matrix2 m = matrix_of(f);
        for (std::uint64_t j = 0; j < depth; ++j) {
            const auto& prev = rows_.back();
            std::array<parikh_vector, 2> next;
            for (letter c : {letter::a, letter::b}) {
                const std::size_t ci = index_of(c);
                next[ci].count_a = m(0, ci) * prev[0].count_a + m(1, ci) * prev[1].count_a;
                next[ci].count_b = m(0, ci) * prev[0].count_b + m(1, ci) * prev[1].count_b;
            }
            rows_.push_back(std::move(next));
        }
    }

    std::uint64_t depth() const noexcept { return rows_.size() - 1; }
    const binary_morphism& morphism() const noexcept { return f_; }
    const parikh_vector& parikh_of(std::uint64_t j, letter c) const { return rows_.at(j)[index_of(c)]; }
    big_int length(std::uint64_t j, letter c) const { return parikh_of(j, c).length(); }

    /// Parikh vector of pref_len(f^t(seed)).
    parikh_vector prefix_parikh(letter seed, std::uint64_t t, big_int len) const {
        if (len < 0 || len > length(t, seed))
            throw error(errc::out_of_range, "prefix length " + len.str() + " exceeds |f^t(seed)|");
        parikh_vector acc;
        letter c = seed;
        std::uint64_t level = t;
        while (len > 0) {
            if (len == length(level, c)) {
                acc += parikh_of(level, c);
                break;
            }
            // len < |f^level(c)| and len > 0, hence level >= 1.
            const word& img = f_.image(c);
            for (std::size_t i = 0; i < img.size(); ++i) {
                const parikh_vector& piece = parikh_of(level - 1, img[i]);
                const big_int piece_len = piece.length();
                if (len >= piece_len) {
                    acc += piece;
                    len -= piece_len;
                } else {
                    c = img[i];
                    break;
                }
            }
            --level;
        }
        return acc;
    }

    /// For 0 <= pos < |f^t(seed)|, t >= 1: the block f(c) of the decomposition
    /// f^t(seed) = f(f^(t-1)(seed)) containing pos, and the offset inside it.
    std::pair<letter, std::size_t> locate_block(letter seed, std::uint64_t t, big_int pos) const {
        if (t == 0 || pos < 0 || pos >= length(t, seed))
            throw error(errc::out_of_range, "position " + pos.str() + " outside f^t(seed)");
        letter c = seed;
        std::uint64_t level = t;
        while (level > 1) {
            const word& img = f_.image(c);
            for (std::size_t i = 0; i < img.size(); ++i) {
                const big_int piece_len = length(level - 1, img[i]);
                if (pos >= piece_len) {
                    pos -= piece_len;
                } else {
                    c = img[i];
                    break;
                }
            }
            --level;
        }
        return {c, pos.convert_to<std::size_t>()};
    }

private:
    binary_morphism f_;
    std::vector<std::array<parikh_vector, 2>> rows_;
};

inline parikh_vector prefix_parikh(const binary_morphism& f, letter seed, std::uint64_t t, const big_int& len) {
    return iterate_table(f, t).prefix_parikh(seed, t, len);
}

inline rank1_form rank1_form_of(const binary_morphism& f) { return rank1_decompose(matrix_of(f)); }

/// |f(u)| / (A + B); an integer because every block length is a multiple of A + B.
inline big_int block_length(const rank1_form& form, const binary_morphism& f, const word& u) {
    const parikh_vector p = parikh(u);
    const big_int len = p.count_a * f.length(letter::a) + p.count_b * f.length(letter::b);
    return len / form.block_unit();
}

/// (A + B) k^(t-1) = gcd(|f^t(a)|, |f^t(b)|).
inline big_int chunk_length(const rank1_form& form, std::uint64_t t) {
    return form.block_unit() * boost::multiprecision::pow(form.trace(), static_cast<unsigned>(t - 1));
}

namespace detail {

inline std::vector<parikh_vector> chunk_parikhs(const iterate_table& table, letter seed, std::uint64_t t,
                                                const big_int& chunk, const big_int& count) {
    std::vector<parikh_vector> out;
    parikh_vector prev;
    for (big_int i = 1; i <= count; ++i) {
        parikh_vector cur = table.prefix_parikh(seed, t, i * chunk);
        out.push_back(cur - prev);
        prev = std::move(cur);
    }
    return out;
}

} // namespace detail

/// True iff the n chunks of f^K(a) and the m chunks of f^K(b) are pairwise
/// abelian equivalent.
inline bool check_pure_at(const binary_morphism& f, const rank1_form& form, std::uint64_t K) {
    if (K == 0) throw error(errc::out_of_range, "K must be positive");
    const iterate_table table(f, K);
    const big_int chunk = chunk_length(form, K);
    auto chunks = detail::chunk_parikhs(table, letter::a, K, chunk, form.n);
    const auto b_chunks = detail::chunk_parikhs(table, letter::b, K, chunk, form.m);
    chunks.insert(chunks.end(), b_chunks.begin(), b_chunks.end());
    for (const auto& c : chunks)
        if (c != chunks.front()) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Configurations

struct cut_descriptor {
    letter block_letter = letter::a;
    std::size_t offset = 0;  // < |f(block_letter)|
    friend bool operator==(const cut_descriptor&, const cut_descriptor&) = default;
    friend auto operator<=>(const cut_descriptor&, const cut_descriptor&) = default;
};

/// Where the internal chunk boundaries of f^t(a) (n-1 of them) and f^t(b)
/// (m-1 of them) fall relative to the blocks of f(f^(t-1)(.)).
struct cut_configuration {
    std::vector<cut_descriptor> a_cuts;
    std::vector<cut_descriptor> b_cuts;
    friend bool operator==(const cut_configuration&, const cut_configuration&) = default;
};

struct cut_configuration_hash {
    std::size_t operator()(const cut_configuration& c) const noexcept {
        std::size_t h = c.a_cuts.size() * 0x9e3779b97f4a7c15ULL;
        auto mix = [&h](const cut_descriptor& d) {
            const std::size_t v = (d.offset << 1U) | index_of(d.block_letter);
            h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6U) + (h >> 2U);
        };
        for (const auto& d : c.a_cuts) mix(d);
        h ^= 0xabcdefULL;
        for (const auto& d : c.b_cuts) mix(d);
        return h;
    }
};

/// Configuration at t by direct descent through f^t.
inline cut_configuration configuration_of(const binary_morphism& f, const rank1_form& form, std::uint64_t t) {
    if (t == 0) throw error(errc::out_of_range, "t must be positive");
    const iterate_table table(f, t);
    const big_int chunk = chunk_length(form, t);
    cut_configuration cfg;
    for (big_int i = 1; i < form.n; ++i) {
        const auto [c, off] = table.locate_block(letter::a, t, i * chunk);
        cfg.a_cuts.push_back({c, off});
    }
    for (big_int j = 1; j < form.m; ++j) {
        const auto [c, off] = table.locate_block(letter::b, t, j * chunk);
        cfg.b_cuts.push_back({c, off});
    }
    return cfg;
}

/// Configuration at t + 1 from the one at t. A cut at offset k of f(c) moves
/// to offset k * trace of f(f(c)), independently of t.
inline cut_configuration next_configuration(const binary_morphism& f, const rank1_form& form,
                                            const cut_configuration& cfg) {
    const std::size_t scale = form.trace().convert_to<std::size_t>();
    auto step = [&](const cut_descriptor& d) {
        std::size_t pos = d.offset * scale;
        const word& img = f.image(d.block_letter);
        for (std::size_t i = 0; i < img.size(); ++i) {
            const std::size_t len = f.length(img[i]);
            if (pos < len) return cut_descriptor{img[i], pos};
            pos -= len;
        }
        throw std::logic_error("cut offset beyond f(f(c))");
    };
    cut_configuration out;
    for (const auto& d : cfg.a_cuts) out.a_cuts.push_back(step(d));
    for (const auto& d : cfg.b_cuts) out.b_cuts.push_back(step(d));
    return out;
}

/// A cut after k letters of f(c) is balanced when |pref_k f(c)|_a equals the
/// share k A / (A + B) that whole blocks would contribute. All chunks are
/// abelian equivalent iff every internal cut is balanced.
inline bool cut_balanced(const binary_morphism& f, const rank1_form& form, const cut_descriptor& d) {
    const big_int count_a = parikh(f.image(d.block_letter).prefix(d.offset)).count_a;
    return count_a * form.block_unit() == form.A * d.offset;
}

inline bool pure_by_configuration(const binary_morphism& f, const rank1_form& form, const cut_configuration& cfg) {
    for (const auto& d : cfg.a_cuts)
        if (!cut_balanced(f, form, d)) return false;
    for (const auto& d : cfg.b_cuts)
        if (!cut_balanced(f, form, d)) return false;
    return true;
}

/// (|f(a)| + |f(b)|)^(m + n - 2): number of possible configurations.
inline big_int configuration_bound(const binary_morphism& f, const rank1_form& form) {
    return boost::multiprecision::pow(big_int(f.size()), (form.n + form.m - 2).convert_to<unsigned>());
}

enum class pure_outcome { pure_abelian_periodic, not_pure, resource_exhausted };

constexpr std::string_view to_string(pure_outcome o) noexcept {
    switch (o) {
    case pure_outcome::pure_abelian_periodic: return "PureAbelianPeriodic";
    case pure_outcome::not_pure: return "NotPure";
    case pure_outcome::resource_exhausted: return "ResourceExhausted";
    }
    return "";
}

struct pure_verdict {
    pure_outcome outcome = pure_outcome::not_pure;
    std::uint64_t K = 0;          // positive outcome only
    big_int period = 0;           // (A+B) k^(K-1), positive outcome only
    std::uint64_t iterations = 0; // configurations generated
    bool cycle_detected = false;
    big_int bound = 0;            // configuration bound
};

struct pure_options {
    std::uint64_t max_iterations = 1'000'000;
};

/// Exact decision of pure abelian periodicity for rank-1 f.
///
/// Walks t = 1, 2, ... through the configuration sequence. Since the next
/// configuration and the chunk test are functions of the current
/// configuration, a repeated configuration means no later t succeeds.
inline pure_verdict decide_pure(const binary_morphism& f, pure_options opts = {}) {
    require_prolongable(f);
    const rank1_form form = rank1_form_of(f);
    pure_verdict v;
    v.bound = configuration_bound(f, form);

    cut_configuration cfg;
    for (big_int i = 1; i < form.n; ++i)
        cfg.a_cuts.push_back({letter::a, (i * form.block_unit()).convert_to<std::size_t>()});
    for (big_int j = 1; j < form.m; ++j)
        cfg.b_cuts.push_back({letter::b, (j * form.block_unit()).convert_to<std::size_t>()});

    std::unordered_set<cut_configuration, cut_configuration_hash> seen;
    for (std::uint64_t t = 1;; ++t) {
        v.iterations = t;
        if (seen.contains(cfg)) {
            v.cycle_detected = true;
            return v;
        }
        if (big_int(t) > v.bound) {
            v.iterations = t - 1;
            return v;
        }
        if (t > opts.max_iterations) {
            v.outcome = pure_outcome::resource_exhausted;
            v.iterations = t - 1;
            return v;
        }
        seen.insert(cfg);
        if (pure_by_configuration(f, form, cfg)) {
            if (!check_pure_at(f, form, t)) throw std::logic_error("configuration test disagrees with chunk test");
            v.outcome = pure_outcome::pure_abelian_periodic;
            v.K = t;
            v.period = chunk_length(form, t);
            return v;
        }
        cfg = next_configuration(f, form, cfg);
    }
}

// ---------------------------------------------------------------------------
// Eventual case

/// f^K(a) = u v, f^K(b) = u' v' with |u| = |u'| = cut_offset < period, u ~ u',
/// and v u, v' u' split into n resp. m mutually abelian-equivalent blocks of
/// length period.
struct eventual_witness {
    std::uint64_t K = 0;
    big_int cut_offset = 0;
    big_int period = 0;
    friend bool operator==(const eventual_witness&, const eventual_witness&) = default;
};

struct cut_offset_report {
    bool chunks_equivalent = false;
    bool prefixes_equivalent = false;
    bool valid() const { return chunks_equivalent && prefixes_equivalent; }
};

namespace detail {

inline std::vector<parikh_vector> shifted_chunks(const iterate_table& table, letter seed, std::uint64_t K,
                                                 const big_int& period, const big_int& count,
                                                 const big_int& offset) {
    const parikh_vector total = table.parikh_of(K, seed);
    const parikh_vector head = table.prefix_parikh(seed, K, offset);
    std::vector<parikh_vector> out;
    parikh_vector prev = head;
    for (big_int j = 1; j < count; ++j) {
        parikh_vector cur = table.prefix_parikh(seed, K, offset + j * period);
        out.push_back(cur - prev);
        prev = std::move(cur);
    }
    out.push_back(total - prev + head);
    return out;
}

} // namespace detail

inline cut_offset_report examine_cut_offset(const binary_morphism& f, const rank1_form& form, std::uint64_t K,
                                            const big_int& offset) {
    const iterate_table table(f, K);
    const big_int period = chunk_length(form, K);
    if (offset < 0 || offset >= period) throw error(errc::out_of_range, "cut offset must lie in [0, period)");
    cut_offset_report rep;
    rep.prefixes_equivalent =
        table.prefix_parikh(letter::a, K, offset) == table.prefix_parikh(letter::b, K, offset);
    auto chunks = detail::shifted_chunks(table, letter::a, K, period, form.n, offset);
    const auto b_chunks = detail::shifted_chunks(table, letter::b, K, period, form.m, offset);
    chunks.insert(chunks.end(), b_chunks.begin(), b_chunks.end());
    rep.chunks_equivalent = true;
    for (const auto& c : chunks)
        if (c != chunks.front()) rep.chunks_equivalent = false;
    return rep;
}

struct eventual_scan_result {
    std::optional<eventual_witness> witness;
    bool complete = true;   // false when the offset budget stopped the scan
    big_int offsets_checked = 0;
};

/// Scans c = 0 .. period-1 (at most `max_offsets` of them) for a valid cut.
inline eventual_scan_result eventual_scan(const binary_morphism& f, const rank1_form& form, std::uint64_t K,
                                          const big_int& max_offsets) {
    if (K == 0) throw error(errc::out_of_range, "K must be positive");
    const iterate_table table(f, K);
    const big_int period = chunk_length(form, K);
    eventual_scan_result res;
    for (big_int c = 0; c < period; ++c) {
        if (res.offsets_checked >= max_offsets) {
            res.complete = false;
            return res;
        }
        ++res.offsets_checked;
        if (table.prefix_parikh(letter::a, K, c) != table.prefix_parikh(letter::b, K, c)) continue;
        auto chunks = detail::shifted_chunks(table, letter::a, K, period, form.n, c);
        const auto b_chunks = detail::shifted_chunks(table, letter::b, K, period, form.m, c);
        chunks.insert(chunks.end(), b_chunks.begin(), b_chunks.end());
        bool ok = true;
        for (const auto& ch : chunks)
            if (ch != chunks.front()) {
                ok = false;
                break;
            }
        if (ok) {
            res.witness = eventual_witness{K, c, period};
            return res;
        }
    }
    return res;
}

inline std::optional<eventual_witness> eventual_check_at(const binary_morphism& f, const rank1_form& form,
                                                         std::uint64_t K) {
    return eventual_scan(f, form, K, chunk_length(form, K)).witness;
}

// ---------------------------------------------------------------------------
// Block positions

/// Residues mod d of the t-block-positions i / ((A+B) k^(t-1)) of proper
/// occurrences of f(a) (blocks f(y_j) with y_j = a in f^w(a) = f(y_0) f(y_1) ...)
/// lying inside the first `horizon` letters.
inline std::set<std::uint64_t> block_position_residues(const binary_morphism& f, const rank1_form& form,
                                                       std::uint64_t t, std::uint64_t d, std::uint64_t horizon) {
    if (t == 0 || d == 0) throw error(errc::out_of_range, "t and d must be positive");
    if (gcd(big_int(d), form.trace()) != 1)
        throw error(errc::not_coprime, std::to_string(d) + " is not coprime with the trace " + form.trace().str());
    std::set<std::uint64_t> residues;
    const big_int unit_big = chunk_length(form, t);
    if (unit_big > horizon) return residues;
    const auto unit = unit_big.convert_to<std::uint64_t>();
    fixed_point_stream stream(f);
    const std::uint64_t len_a = f.length(letter::a);
    const std::uint64_t len_b = f.length(letter::b);
    for (std::uint64_t pos = 0;;) {
        const letter y = stream.next();
        const std::uint64_t len = y == letter::a ? len_a : len_b;
        if (pos + len > horizon) break;
        if (y == letter::a && pos % unit == 0) {
            residues.insert((pos / unit) % d);
            if (residues.size() == d) break;
        }
        pos += len;
    }
    return residues;
}

} // namespace abper

#endif // ABPER_RANK1_HPP
