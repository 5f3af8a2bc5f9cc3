#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "skillscope/analyzers/toolchain.hpp"
#include "skillscope/core/templates.hpp"

namespace skillscope {

/// Output-format instruction embedded verbatim in every stage-two prompt.
inline constexpr std::string_view kStage2Grammar =
    "Write your analysis inside <think></think>, then give the decision inside <answer></answer>: "
    "0 means the image is a real photograph, 1 means it was synthesized.";

/// Appended as a new user turn when a stage-two reply breaks the format.
inline constexpr std::string_view kStage2Reminder =
    "Your previous reply did not follow the required format. Reply again with your reasoning in "
    "<think></think> followed by <answer>0</answer> (real) or <answer>1</answer> (synthesized).";

inline constexpr std::string_view kStage2WrapperId = "stage2/wrapper";

struct PromptBundle {
  std::string template_id;  // the skill checklist template
  std::string rendered_text;
  std::vector<std::shared_ptr<const Pixels>> attachments;  // [0] is the original image
  SkillId skill = SkillId::Value::CS;
};

/// Shared wrapper + skill checklist + evidence summary. Attachments are the
/// original followed by `views` in order. Throws TemplateMissing.
PromptBundle build_stage2_prompt(SkillId skill, const std::shared_ptr<const Pixels>& image,
                                 const EvidenceBundle& evidence, const std::vector<TransformView>& views,
                                 const TemplateStore& templates, std::string_view checklist_id = {});

}  // namespace skillscope
