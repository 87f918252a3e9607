#ifndef BNET_ERROR_HPP
#define BNET_ERROR_HPP

#include <stdexcept>
#include <string>

namespace bnet {

enum class ErrorKind {
    CycleDetected,
    InvalidNode,
    DuplicateEdge,
    UnassignedVariable,
    StateSpaceTooLarge,
    DomainError,
    NotGraded,
    SliceTooLarge,
    UngradedSlice,
    NoExplanation,
    InfeasibleConfig,
    UnknownFixture,
    ParseError,
    ValidationError,
    UnknownName,
    UsageError,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
          kind_(kind) {}

    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

} // namespace bnet

#endif
