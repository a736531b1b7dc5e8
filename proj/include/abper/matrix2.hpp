#ifndef ABPER_MATRIX2_HPP
#define ABPER_MATRIX2_HPP

#include <array>
#include <ostream>

#include "words.hpp"

namespace abper {

/// 2x2 matrix of arbitrary-precision integers. Rows/columns are indexed by
/// letter: column j describes the image of letter j.
struct matrix2 {
    std::array<std::array<big_int, 2>, 2> m{};

    static matrix2 identity() {
        matrix2 r;
        r.m[0][0] = 1;
        r.m[1][1] = 1;
        return r;
    }

    big_int& operator()(std::size_t i, std::size_t j) { return m[i][j]; }
    const big_int& operator()(std::size_t i, std::size_t j) const { return m[i][j]; }

    big_int trace() const { return m[0][0] + m[1][1]; }
    big_int determinant() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

    /// Parikh vector of the image of a letter (the matching column).
    parikh_vector column(letter j) const { return {m[0][index_of(j)], m[1][index_of(j)]}; }
    big_int column_sum(letter j) const { return m[0][index_of(j)] + m[1][index_of(j)]; }

    parikh_vector operator*(const parikh_vector& v) const {
        return {m[0][0] * v.count_a + m[0][1] * v.count_b, m[1][0] * v.count_a + m[1][1] * v.count_b};
    }

    friend matrix2 operator*(const matrix2& x, const matrix2& y) {
        matrix2 r;
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) r.m[i][j] = x.m[i][0] * y.m[0][j] + x.m[i][1] * y.m[1][j];
        return r;
    }

    bool positive() const { return m[0][0] > 0 && m[0][1] > 0 && m[1][0] > 0 && m[1][1] > 0; }

    friend bool operator==(const matrix2&, const matrix2&) = default;

    friend std::ostream& operator<<(std::ostream& os, const matrix2& x) {
        return os << "[[" << x.m[0][0] << ',' << x.m[0][1] << "],[" << x.m[1][0] << ',' << x.m[1][1] << "]]";
    }
};

inline matrix2 power(matrix2 base, std::uint64_t exponent) {
    matrix2 result = matrix2::identity();
    while (exponent > 0) {
        if (exponent & 1U) result = result * base;
        exponent >>= 1U;
        if (exponent > 0) base = base * base;
    }
    return result;
}

} // namespace abper

#endif // ABPER_MATRIX2_HPP
