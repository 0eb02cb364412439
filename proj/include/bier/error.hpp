#pragma once

#include <stdexcept>
#include <string>

namespace bier {

enum class ErrorCode {
  kInvalidComplex,
  kLinkOfNonFace,
  kOverlappingGroundSets,
  kDualOfFullSimplex,
  kBadGroundSize,
  kNoVertices,
  kBadM,
  kMissingVertexAssignment,
  kTooLargeForOracle,
  kNotChordalBier,
  kBadSchedule,
  kMTooLarge,
  kInvalidInput,
};

const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace bier
