#pragma once

#include <stdexcept>
#include <string>

namespace diffscatter {

enum class ErrorCode {
  InvalidScenario,
  DegenerateSurface,
  CoincidentPoints,
  InvalidFrequency,
  AlphaDegenerate,
  InvalidRayCount,
  InvalidNoise,
  EmptySamples,
  InfeasiblePosition,
  EmptyGrid,
  DegenerateGrid,
  InvalidArgument,
};

const char* to_string(ErrorCode code) noexcept;

/// Exception carrying a machine-checkable reason in addition to the message.
class ModelError : public std::runtime_error {
 public:
  ModelError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace diffscatter
