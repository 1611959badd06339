#pragma once

#include <stdexcept>
#include <string>

namespace oneforms {

enum class ErrorCode {
    RepeatedPole,
    ZeroResidue,
    ResidueTheoremViolation,
    CommonZeroPole,
    MultiplePole,
    BadChart,
    BadDegree,
    DegenerateTriple,
    UndefinedCrossRatio,
    ConvergenceFailure,
    InfiniteIsotropy,
    TooManyPermutations,
    NotAGroup,
    IndexOutOfRange,
    InvalidMPoint,
    NotIsochronous,
    ZeroImaginaryPart,
    NotUnitModulus,
    EvaluationAtPole,
    InvalidDocument,
};

const char* error_code_name(ErrorCode c);

/// Typed failure carrying one of the ErrorCode categories above.
class FormsError : public std::runtime_error {
public:
    FormsError(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw FormsError(code, what);
}

} // namespace oneforms
