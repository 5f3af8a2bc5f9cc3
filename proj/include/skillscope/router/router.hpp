#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "skillscope/core/registry.hpp"
#include "skillscope/core/templates.hpp"
#include "skillscope/io/reasoner_client.hpp"
#include "skillscope/router/clues.hpp"

namespace skillscope {

enum class RouteOrigin { Reasoner, Fallback };

std::string_view to_string(RouteOrigin origin);

struct SkillChoice {
  SkillId skill = SkillId::Value::CS;
  std::string rationale;  // always names the template or rule that produced it
  RouteOrigin origin = RouteOrigin::Fallback;

  friend bool operator==(const SkillChoice&, const SkillChoice&) = default;
};

struct RouterThresholds {
  double text = 0.05;
  double hf = 0.5;
  double residual = 0.02;
};

inline constexpr std::string_view kStage1TemplateId = "stage1/select";

/// Deterministic offline router. Rules in priority order: text -> OCR,
/// high frequency -> Freq, residual -> Pixel, otherwise CS; a rule whose
/// skill is disabled falls through, and the last resort is the
/// lowest-ordinal enabled skill.
SkillChoice fallback_route(const ClueSet& clues, const SkillRegistry& registry, const RouterThresholds& thresholds = {});

/// Stage-one request: one user turn with the rendered template and the image.
ReasonerRequest build_stage1_request(const std::shared_ptr<const Pixels>& image, const ClueSet& clues,
                                     const SkillRegistry& registry, const TemplateStore& templates);

struct SkillSelection {
  SkillChoice choice;
  /// Every message exchanged, including the final assistant reply, so the
  /// second stage can continue the conversation.
  std::vector<ChatMessage> transcript;
};

/// Asks the reasoner to pick a skill. A reply naming no enabled skill gets
/// one retry with the allowed names spelled out; a second miss throws
/// SkillNotInLibrary.
SkillSelection select_skill_with_transcript(const std::shared_ptr<const Pixels>& image, const ClueSet& clues,
                                            const SkillRegistry& registry, const ReasonerClient& reasoner,
                                            const TemplateStore& templates);

SkillChoice select_skill(const std::shared_ptr<const Pixels>& image, const ClueSet& clues,
                         const SkillRegistry& registry, const ReasonerClient& reasoner,
                         const TemplateStore& templates);

}  // namespace skillscope
