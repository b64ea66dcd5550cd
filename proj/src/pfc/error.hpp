#pragma once

#include <stdexcept>
#include <string>

namespace pfc {

// Numeric values are mirrored by pfc_status in the public C header.
enum class Errc {
  InvalidArgument = 1,
  InvalidLevel = 2,
  OutOfKacTable = 3,
  ParityMismatch = 4,
  RangeError = 5,
  TypicalOnAtypicalWeight = 6,
  NotLiftable = 7,
  WeightNotInSupport = 8,
  NonconvergentEvaluation = 9,
  InsufficientTruncation = 10,
  TruncationBelowGroundState = 11,
  UnnormalizedLabel = 12,
  ParseError = 13,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, std::string(errc_name(code)) + ": " + what);
}

}  // namespace pfc
