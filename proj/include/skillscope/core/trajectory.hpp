#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "skillscope/core/skill.hpp"

namespace skillscope {

/// Parsed reasoning output.
///
/// Grammar (whitespace allowed between blocks, nothing else outside them):
///
///     [<skill>NAME</skill>] <think>TEXT</think> <answer>D</answer>
///
/// NAME is a canonical skill name (case-insensitive), TEXT must contain a
/// non-whitespace character and D is exactly 0 or 1. Parsing is lenient:
/// fields are extracted from whatever blocks are present, while
/// `format_valid` reports strict compliance.
struct Trajectory {
  std::optional<SkillId> skill_tag;
  std::string think_text;
  std::optional<int> answer;
  bool format_valid = false;
  std::string raw;

  friend bool operator==(const Trajectory&, const Trajectory&) = default;
};

Trajectory parse_trajectory(std::string_view raw);

/// Canonical rendering: no whitespace between blocks, canonical skill casing.
std::string render_trajectory(const std::optional<SkillId>& skill_tag, std::string_view think_text,
                              int answer);
std::string render(const Trajectory& t);

/// Content of the first `<tag>...</tag>` block, untrimmed.
std::optional<std::string> extract_block(std::string_view text, std::string_view tag);

}  // namespace skillscope
