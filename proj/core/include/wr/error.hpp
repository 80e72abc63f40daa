#pragma once

#include <stdexcept>
#include <string>

namespace wr {

enum class ErrorCode {
    NonPrime,
    DegreeOutOfRange,
    NotASubfieldDegree,
    ContextMismatch,
    InseparableOperator,
    NoSolution,
    NotInXSXForm,
    LengthMismatch,
    ZeroCover,
    DecompositionFailure,
    BadParameters,
    NonIntegralLowerBreaks,
    OddSum,
    InconsistentLadder,
    NotASubgroupProfile,
    InvalidFiltration,
    ResourceLimit,
    TooLarge,
    MissingDeclaration,
    InvalidProfile,
    ParseError,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
public:
    Error(ErrorCode c, const std::string& what)
        : std::runtime_error(std::string(error_code_name(c)) + ": " + what), code_(c) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace wr
