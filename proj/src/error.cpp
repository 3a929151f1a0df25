#include "hspin/error.hpp"

namespace hspin {

const char* kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::WrongLength: return "WrongLength";
        case ErrorKind::NotDominant: return "NotDominant";
        case ErrorKind::MixedParity: return "MixedParity";
        case ErrorKind::InternalNonInteger: return "InternalNonInteger";
        case ErrorKind::RankMismatch: return "RankMismatch";
        case ErrorKind::UnsupportedFiber: return "UnsupportedFiber";
        case ErrorKind::NotApplicable: return "NotApplicable";
        case ErrorKind::NotASummand: return "NotASummand";
        case ErrorKind::IncompleteTargets: return "IncompleteTargets";
        case ErrorKind::SingularElimination: return "SingularElimination";
        case ErrorKind::AbsentOperator: return "AbsentOperator";
        case ErrorKind::FactorizationViolated: return "FactorizationViolated";
        case ErrorKind::DegreeOutOfRange: return "DegreeOutOfRange";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

}  // namespace hspin
