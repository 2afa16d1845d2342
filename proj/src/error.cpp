#include "toric/error.hpp"

namespace toric {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonPrimitiveRay: return "NonPrimitiveRay";
    case ErrorKind::DegenerateCone: return "DegenerateCone";
    case ErrorKind::NotComplete: return "NotComplete";
    case ErrorKind::BadFaceIntersection: return "BadFaceIntersection";
    case ErrorKind::RaysDoNotSpan: return "RaysDoNotSpan";
    case ErrorKind::UnboundedPolytope: return "UnboundedPolytope";
    case ErrorKind::NotInSupport: return "NotInSupport";
    case ErrorKind::NonPrimitive: return "NonPrimitive";
    case ErrorKind::NonIntegralDivisor: return "NonIntegralDivisor";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::HNotNef: return "HNotNef";
    case ErrorKind::HNotAmple: return "HNotAmple";
    case ErrorKind::ANotAmple: return "ANotAmple";
    case ErrorKind::ClassNotEffective: return "ClassNotEffective";
    case ErrorKind::NotExtremal: return "NotExtremal";
    case ErrorKind::NotNegative: return "NotNegative";
    case ErrorKind::NotKlt: return "NotKlt";
    case ErrorKind::NotProjective: return "NotProjective";
    case ErrorKind::DeskScaleExceeded: return "DeskScaleExceeded";
    case ErrorKind::StepBoundExceeded: return "StepBoundExceeded";
    case ErrorKind::NoIntegralRepresentative: return "NoIntegralRepresentative";
    case ErrorKind::UnknownDivisor: return "UnknownDivisor";
  }
  return "Unknown";
}

}  // namespace toric
