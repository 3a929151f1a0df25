#pragma once

#include <stdexcept>
#include <string>

namespace hspin {

enum class ErrorKind {
    WrongLength,
    NotDominant,
    MixedParity,
    InternalNonInteger,
    RankMismatch,
    UnsupportedFiber,
    NotApplicable,
    NotASummand,
    IncompleteTargets,
    SingularElimination,
    AbsentOperator,
    FactorizationViolated,
    DegreeOutOfRange,
    ParseError,
};

const char* kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(kind_name(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace hspin
