#include "skillscope/core/error.hpp"

namespace skillscope {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnknownSkill: return "UnknownSkill";
    case ErrorCode::DuplicateSkill: return "DuplicateSkill";
    case ErrorCode::EmptyRegistry: return "EmptyRegistry";
    case ErrorCode::SkillNotInLibrary: return "SkillNotInLibrary";
    case ErrorCode::ReasonerUnavailable: return "ReasonerUnavailable";
    case ErrorCode::IndeterminateOutput: return "IndeterminateOutput";
    case ErrorCode::AnalyzerFailure: return "AnalyzerFailure";
    case ErrorCode::ImageTooSmall: return "ImageTooSmall";
    case ErrorCode::ToolUnavailable: return "ToolUnavailable";
    case ErrorCode::FixtureMissing: return "FixtureMissing";
    case ErrorCode::MalformedToolResponse: return "MalformedToolResponse";
    case ErrorCode::RecordingDisabled: return "RecordingDisabled";
    case ErrorCode::TemplateMissing: return "TemplateMissing";
    case ErrorCode::GroupTooSmall: return "GroupTooSmall";
    case ErrorCode::UnknownContext: return "UnknownContext";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::EmptyManifest: return "EmptyManifest";
    case ErrorCode::InvalidImage: return "InvalidImage";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code), detail_(message) {}

Error Error::with_context(std::string_view context) const {
  return Error(code_, std::string(context) + ": " + detail_);
}

}  // namespace skillscope
