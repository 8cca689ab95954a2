#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tamari {

enum class ErrorCode {
    InvalidBracketVector,
    InvalidDyckWord,
    SizeMismatch,
    SizeCapExceeded,
    NotAnInterval,
    NotDerisable,
    InvalidDiagram,
    InvalidDecomposition,
    NotATree,
    InvalidBlossoming,
    ClosureOrientationError,
    UnsupportedSize,
    OracleDisagreement,
    CycleLemmaViolation,
    InvalidSequence,
    ParseError,
};

std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace tamari
