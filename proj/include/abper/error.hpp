#ifndef ABPER_ERROR_HPP
#define ABPER_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace abper {

enum class errc {
    syntax_error,
    erasing_image,
    bad_letter,
    not_prolongable,
    not_primitive,
    not_rank_one,
    zero_entry,
    horizon_too_short,
    empty_selection,
    out_of_range,
    wrong_spectral_case,
    not_coprime,
    degenerate_trace,
};

constexpr std::string_view to_string(errc code) noexcept {
    switch (code) {
    case errc::syntax_error: return "SyntaxError";
    case errc::erasing_image: return "ErasingImage";
    case errc::bad_letter: return "BadLetter";
    case errc::not_prolongable: return "NotProlongable";
    case errc::not_primitive: return "NotPrimitive";
    case errc::not_rank_one: return "NotRankOne";
    case errc::zero_entry: return "ZeroEntry";
    case errc::horizon_too_short: return "HorizonTooShort";
    case errc::empty_selection: return "EmptySelection";
    case errc::out_of_range: return "OutOfRange";
    case errc::wrong_spectral_case: return "WrongSpectralCase";
    case errc::not_coprime: return "NotCoprime";
    case errc::degenerate_trace: return "DegenerateTrace";
    }
    return "Unknown";
}

/// Every library failure is reported through this type; `code()` carries the
/// machine-readable reason, `what()` a one-line diagnostic.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

} // namespace abper

#endif // ABPER_ERROR_HPP
