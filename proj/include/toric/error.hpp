#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace toric {

/// Domain failures raised by the engine. Each names the offending datum in
/// its message; the kind is stable and used for exit-code mapping.
enum class ErrorKind {
  NonPrimitiveRay,
  DegenerateCone,
  NotComplete,
  BadFaceIntersection,
  RaysDoNotSpan,
  UnboundedPolytope,
  NotInSupport,
  NonPrimitive,
  NonIntegralDivisor,
  DimensionMismatch,
  HNotNef,
  HNotAmple,
  ANotAmple,
  ClassNotEffective,
  NotExtremal,
  NotNegative,
  NotKlt,
  NotProjective,
  DeskScaleExceeded,
  StepBoundExceeded,
  NoIntegralRepresentative,
  UnknownDivisor,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace toric
