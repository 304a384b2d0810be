#ifndef WHITEALG_ERRORS_HPP
#define WHITEALG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace whitealg {

// Every failure mode of the library surfaces as an Error carrying one of
// these codes. Messages are human-readable; the code is what callers and
// the CLI dispatch on.
enum class Errc {
    DegreeCapExceeded,
    MixedSchedules,
    UnknownGenerator,
    NotALieElement,
    NonHomogeneous,
    TooFewIndices,
    DegreeMismatch,
    ZeroAlpha,
    ZeroScalar,
    ScalingInZMode,
    NonIntegralCoefficient,
    NotInvertible,
    IndexOutOfRange,
    NonDiagonalLinearPart,
    OddParityUnsupported,
    UnbalancedBracket,
    UnknownToken,
    EmptyInput,
    ZeroDenominator,
    SchemaMismatch,
    MalformedJson,
    MissingAlpha,
    MixedAliases,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::DegreeCapExceeded: return "DegreeCapExceeded";
        case Errc::MixedSchedules: return "MixedSchedules";
        case Errc::UnknownGenerator: return "UnknownGenerator";
        case Errc::NotALieElement: return "NotALieElement";
        case Errc::NonHomogeneous: return "NonHomogeneous";
        case Errc::TooFewIndices: return "TooFewIndices";
        case Errc::DegreeMismatch: return "DegreeMismatch";
        case Errc::ZeroAlpha: return "ZeroAlpha";
        case Errc::ZeroScalar: return "ZeroScalar";
        case Errc::ScalingInZMode: return "ScalingInZMode";
        case Errc::NonIntegralCoefficient: return "NonIntegralCoefficient";
        case Errc::NotInvertible: return "NotInvertible";
        case Errc::IndexOutOfRange: return "IndexOutOfRange";
        case Errc::NonDiagonalLinearPart: return "NonDiagonalLinearPart";
        case Errc::OddParityUnsupported: return "OddParityUnsupported";
        case Errc::UnbalancedBracket: return "UnbalancedBracket";
        case Errc::UnknownToken: return "UnknownToken";
        case Errc::EmptyInput: return "EmptyInput";
        case Errc::ZeroDenominator: return "ZeroDenominator";
        case Errc::SchemaMismatch: return "SchemaMismatch";
        case Errc::MalformedJson: return "MalformedJson";
        case Errc::MissingAlpha: return "MissingAlpha";
        case Errc::MixedAliases: return "MixedAliases";
    }
    return "Unknown";
}

[[noreturn]] inline void fail(Errc code, const std::string& what) {
    throw Error(code, std::string(errc_name(code)) + ": " + what);
}

}  // namespace whitealg

#endif
