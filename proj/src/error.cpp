#include "bnet/error.hpp"

namespace bnet {

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::CycleDetected: return "CycleDetected";
        case ErrorKind::InvalidNode: return "InvalidNode";
        case ErrorKind::DuplicateEdge: return "DuplicateEdge";
        case ErrorKind::UnassignedVariable: return "UnassignedVariable";
        case ErrorKind::StateSpaceTooLarge: return "StateSpaceTooLarge";
        case ErrorKind::DomainError: return "DomainError";
        case ErrorKind::NotGraded: return "NotGraded";
        case ErrorKind::SliceTooLarge: return "SliceTooLarge";
        case ErrorKind::UngradedSlice: return "UngradedSlice";
        case ErrorKind::NoExplanation: return "NoExplanation";
        case ErrorKind::InfeasibleConfig: return "InfeasibleConfig";
        case ErrorKind::UnknownFixture: return "UnknownFixture";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::ValidationError: return "ValidationError";
        case ErrorKind::UnknownName: return "UnknownName";
        case ErrorKind::UsageError: return "UsageError";
    }
    return "Error";
}

} // namespace bnet
