#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace skillscope {

enum class ErrorCode {
  UnknownSkill,
  DuplicateSkill,
  EmptyRegistry,
  SkillNotInLibrary,
  ReasonerUnavailable,
  IndeterminateOutput,
  AnalyzerFailure,
  ImageTooSmall,
  ToolUnavailable,
  FixtureMissing,
  MalformedToolResponse,
  RecordingDisabled,
  TemplateMissing,
  GroupTooSmall,
  UnknownContext,
  ConfigError,
  ParseError,
  DuplicateId,
  InvalidSpec,
  EmptyManifest,
  InvalidImage,
  IoError,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for the whole library. The code survives context
/// wrapping, so callers can branch on it after a stage has annotated the
/// message with record / skill / producer ids.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }
  [[nodiscard]] const std::string& detail() const noexcept { return detail_; }

  /// Returns a copy whose message is prefixed with `context: `.
  [[nodiscard]] Error with_context(std::string_view context) const;

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace skillscope
