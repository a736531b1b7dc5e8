#ifndef ABPER_MATRIX_HPP
#define ABPER_MATRIX_HPP

#include <cmath>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "morphism.hpp"

namespace abper {

using big_rational = boost::multiprecision::cpp_rational;

inline matrix2 matrix_of(const binary_morphism& f) { return incidence(f); }

/// Floor square root of a nonnegative integer.
inline big_int isqrt(const big_int& n) { return boost::multiprecision::sqrt(n); }

inline bool is_square(const big_int& n) {
    if (n < 0) return false;
    const big_int r = isqrt(n);
    return r * r == n;
}

/// Sign of (sqrt(radicand) - x) for radicand >= 0, decided exactly.
inline int compare_sqrt(const big_int& radicand, const big_int& x) {
    if (x < 0) return 1;
    const big_int sq = x * x;
    return radicand < sq ? -1 : (radicand == sq ? 0 : 1);
}

enum class theta2_kind { zero, integer_nonzero, irrational_quadratic };
enum class abs_class { eq_zero, in_open_unit_interval, eq_one, gt_one };

constexpr std::string_view to_string(theta2_kind k) noexcept {
    switch (k) {
    case theta2_kind::zero: return "Zero";
    case theta2_kind::integer_nonzero: return "IntegerNonzero";
    case theta2_kind::irrational_quadratic: return "IrrationalQuadratic";
    }
    return "";
}

constexpr std::string_view to_string(abs_class k) noexcept {
    switch (k) {
    case abs_class::eq_zero: return "EqZero";
    case abs_class::in_open_unit_interval: return "InOpenUnitInterval";
    case abs_class::eq_one: return "EqOne";
    case abs_class::gt_one: return "GtOne";
    }
    return "";
}

/// Eigen-data of M_f from the characteristic polynomial x^2 - trace x + det.
///
/// The eigenvalues are (trace +- sqrt(discriminant)) / 2. Since trace >= 0 the
/// root with the minus sign never has the larger absolute value, and at a tie
/// (trace = 0) it is the negative one, so theta2 = (trace - sqrt(disc)) / 2.
struct spectral_profile {
    big_int trace;
    big_int determinant;
    big_int discriminant;
    theta2_kind kind = theta2_kind::zero;
    big_int theta2_value;            // meaningful for integer kinds
    abs_class theta2_abs = abs_class::eq_zero;
    bool primitive = false;

    /// theta2 as a double, for display only.
    double theta2_approx() const {
        return (trace.convert_to<double>() - std::sqrt(discriminant.convert_to<double>())) / 2.0;
    }
    double theta1_approx() const {
        return (trace.convert_to<double>() + std::sqrt(discriminant.convert_to<double>())) / 2.0;
    }
};

inline bool is_primitive(const matrix2& m) { return m.positive() || (m * m).positive(); }

inline spectral_profile make_spectral_profile(const matrix2& m) {
    spectral_profile s;
    s.trace = m.trace();
    s.determinant = m.determinant();
    s.discriminant = s.trace * s.trace - 4 * s.determinant;
    s.primitive = is_primitive(m);

    if (s.determinant == 0) {
        s.kind = theta2_kind::zero;
        s.theta2_value = 0;
        s.theta2_abs = abs_class::eq_zero;
        return s;
    }
    if (is_square(s.discriminant)) {
        s.kind = theta2_kind::integer_nonzero;
        s.theta2_value = (s.trace - isqrt(s.discriminant)) / 2;
        const big_int mag = abs(s.theta2_value);
        s.theta2_abs = mag == 1 ? abs_class::eq_one : abs_class::gt_one;
        return s;
    }
    // |trace - sqrt(D)| < 2  <=>  trace - 2 < sqrt(D) < trace + 2; equality
    // is impossible for non-square D.
    s.kind = theta2_kind::irrational_quadratic;
    const bool below_upper = compare_sqrt(s.discriminant, s.trace + 2) < 0;
    const bool above_lower = compare_sqrt(s.discriminant, s.trace - 2) > 0;
    s.theta2_abs = below_upper && above_lower ? abs_class::in_open_unit_interval : abs_class::gt_one;
    return s;
}

/// Element rational + coeff * sqrt(radicand) of Q(sqrt(radicand)).
struct quadratic_number {
    big_rational rational = 0;
    big_rational sqrt_coeff = 0;
    big_int radicand = 0;

    bool is_rational() const { return sqrt_coeff == 0; }
    double approx() const {
        return rational.convert_to<double>() +
               sqrt_coeff.convert_to<double>() * std::sqrt(radicand.convert_to<double>());
    }
    friend bool operator==(const quadratic_number& x, const quadratic_number& y) {
        return x.rational == y.rational && x.sqrt_coeff == y.sqrt_coeff &&
               (x.sqrt_coeff == 0 || x.radicand == y.radicand);
    }
    friend quadratic_number operator+(const quadratic_number& x, const quadratic_number& y) {
        return {x.rational + y.rational, x.sqrt_coeff + y.sqrt_coeff, x.sqrt_coeff != 0 ? x.radicand : y.radicand};
    }
    std::string str() const {
        std::string s = rational.str();
        if (sqrt_coeff != 0) s += " + (" + sqrt_coeff.str() + ")*sqrt(" + radicand.str() + ")";
        return s;
    }
};

struct frequency_report {
    quadratic_number freq_a;
    quadratic_number freq_b;
    bool rational = true;
};

/// Normalized Perron eigenvector of a primitive M_f.
///
/// With theta1 = (T + s)/2, s = sqrt(D), the eigenvector is (m12, theta1 - m11),
/// so freq_a = 2 m12 / (X + s) with X = 2 m12 + m22 - m11.
inline frequency_report letter_frequencies(const binary_morphism& f) {
    const matrix2 m = matrix_of(f);
    if (!is_primitive(m)) throw error(errc::not_primitive, "letter frequencies need a primitive morphism");
    const big_int disc = m.trace() * m.trace() - 4 * m.determinant();
    const big_int x = 2 * m(0, 1) + m(1, 1) - m(0, 0);
    frequency_report r;
    if (is_square(disc)) {
        r.freq_a.rational = big_rational(2 * m(0, 1), x + isqrt(disc));
    } else {
        // 2 m12 (X - s) / (X^2 - D); X^2 != D because D is not a square.
        big_int denom = x * x - disc;
        big_int scale = 2 * m(0, 1);
        if (denom < 0) {
            denom = -denom;
            scale = -scale;
        }
        r.freq_a.rational = big_rational(scale * x, denom);
        r.freq_a.sqrt_coeff = big_rational(-scale, denom);
        r.freq_a.radicand = disc;
    }
    r.freq_b.rational = 1 - r.freq_a.rational;
    r.freq_b.sqrt_coeff = -r.freq_a.sqrt_coeff;
    r.freq_b.radicand = r.freq_a.radicand;
    r.rational = r.freq_a.is_rational();
    return r;
}

/// M = [[nA, mA], [nB, mB]] with gcd(m, n) = 1.
struct rank1_form {
    big_int A;
    big_int B;
    big_int n;
    big_int m;

    big_int block_unit() const { return A + B; }      // gcd(|f(a)|, |f(b)|)
    big_int trace() const { return n * A + m * B; }   // length scaling per iteration
    matrix2 matrix() const {
        matrix2 r;
        r(0, 0) = n * A;
        r(0, 1) = m * A;
        r(1, 0) = n * B;
        r(1, 1) = m * B;
        return r;
    }
    friend bool operator==(const rank1_form&, const rank1_form&) = default;
};

inline rank1_form rank1_decompose(const matrix2& mat) {
    if (mat.determinant() != 0) throw error(errc::not_rank_one, "determinant is " + mat.determinant().str());
    if (!mat.positive()) throw error(errc::zero_entry, "rank-1 form needs all entries positive");
    const big_int len_a = mat.column_sum(letter::a);
    const big_int len_b = mat.column_sum(letter::b);
    const big_int g = gcd(len_a, len_b);
    rank1_form r;
    r.n = len_a / g;
    r.m = len_b / g;
    r.A = mat(0, 0) / r.n;
    r.B = mat(1, 0) / r.n;
    if (r.matrix() != mat || r.A + r.B != g)
        throw error(errc::not_rank_one, "matrix does not factor as [[nA,mA],[nB,mB]]");
    return r;
}

inline std::ostream& operator<<(std::ostream& os, const rank1_form& r) {
    return os << "(A=" << r.A << ", B=" << r.B << ", n=" << r.n << ", m=" << r.m << ')';
}

} // namespace abper

#endif // ABPER_MATRIX_HPP
