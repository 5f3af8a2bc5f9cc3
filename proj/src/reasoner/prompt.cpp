#include "skillscope/reasoner/prompt.hpp"

#include "skillscope/core/error.hpp"

namespace skillscope {

PromptBundle build_stage2_prompt(SkillId skill, const std::shared_ptr<const Pixels>& image,
                                 const EvidenceBundle& evidence, const std::vector<TransformView>& views,
                                 const TemplateStore& templates, std::string_view checklist_id) {
  if (evidence.skill != skill) {
    throw Error(ErrorCode::ConfigError, "evidence was produced for " + std::string(evidence.skill.name()) +
                                            ", not " + std::string(skill.name()));
  }
  if (!image) throw Error(ErrorCode::InvalidImage, "stage two needs the original image");

  PromptBundle bundle;
  bundle.skill = skill;
  bundle.template_id = checklist_id.empty() ? checklist_template_id(skill.name()) : std::string(checklist_id);
  const std::string evidence_section =
      evidence.items.empty() ? std::string() : "Tool evidence:\n" + evidence.summary + "\n";
  bundle.rendered_text = render_template(templates.get(kStage2WrapperId),
                                         {
                                             {"skill_name", std::string(skill.name())},
                                             {"skill_definition", std::string(skill.definition())},
                                             {"checklist", templates.get(bundle.template_id)},
                                             {"evidence_section", evidence_section},
                                             {"output_grammar", std::string(kStage2Grammar)},
                                         });
  bundle.attachments.push_back(image);
  for (const auto& v : views) bundle.attachments.push_back(std::make_shared<const Pixels>(v.pixels));
  return bundle;
}

}  // namespace skillscope
