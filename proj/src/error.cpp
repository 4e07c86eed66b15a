#include "diffscatter/error.hpp"

namespace diffscatter {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidScenario: return "invalid-scenario";
    case ErrorCode::DegenerateSurface: return "degenerate-surface";
    case ErrorCode::CoincidentPoints: return "coincident-points";
    case ErrorCode::InvalidFrequency: return "invalid-frequency";
    case ErrorCode::AlphaDegenerate: return "alpha-degenerate";
    case ErrorCode::InvalidRayCount: return "invalid-n";
    case ErrorCode::InvalidNoise: return "invalid-noise";
    case ErrorCode::EmptySamples: return "empty-samples";
    case ErrorCode::InfeasiblePosition: return "infeasible-position";
    case ErrorCode::EmptyGrid: return "empty-grid";
    case ErrorCode::DegenerateGrid: return "degenerate-grid";
    case ErrorCode::InvalidArgument: return "invalid-argument";
  }
  return "unknown";
}

}  // namespace diffscatter
