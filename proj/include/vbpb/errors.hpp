#pragma once

#include <stdexcept>
#include <string>

namespace vbpb {

enum class ErrorKind {
  DimensionMismatch,
  SingularMatrix,
  NoSolution,
  NonUniqueSolution,
  NotComposable,
  InvalidArgument,
  NonFunctorialRep,
  NonUnitBase,
  ValidationFailure,
  FatMembershipFailure,
  MomentMismatch,
  SameArrowRequired,
  SameObjectRequired,
  BlockStructureViolation,
  WellDefinednessFailure,
  NotASection,
  ParseError,
  IoError,
};

const char* kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
  Error(ErrorKind k, const std::string& msg)
    : std::runtime_error(std::string(kind_name(k)) + ": " + msg), kind_(k) {}
  ErrorKind kind() const noexcept { return kind_; }
private:
  ErrorKind kind_;
};

}
