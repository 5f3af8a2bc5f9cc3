#include "skillscope/core/skill.hpp"

#include "skillscope/core/error.hpp"
#include "skillscope/core/format.hpp"

namespace skillscope {
namespace {

struct SkillInfo {
  std::string_view name;
  std::string_view definition;
};

constexpr std::array<SkillInfo, SkillId::kCount> kSkills{{
    {"Light", "lighting consistency: direction, colour and intensity of illumination agree across objects and background"},
    {"Shadow", "shadow consistency: every shadow matches its casting object and a shared light source"},
    {"Phys", "physical consistency: reflections, perspective, contact and gravity behave as in the real world"},
    {"CS", "common-sense consistency: the depicted scene is semantically plausible"},
    {"Func", "functional consistency: tools, mechanisms and hand-object interactions have workable structure"},
    {"OCR", "text consistency: rendered text and typography are legible, coherent and correctly formed"},
    {"Human", "human anatomy: hands, faces, limbs and body proportions are anatomically correct"},
    {"Region", "region analysis: local patches, object boundaries and blended areas are free of artifacts"},
    {"Animal", "animal anatomy: limbs, heads, fur and body structure of animals are correct"},
    {"Freq", "frequency consistency: the spectrum is free of periodic peaks and upsampling traces"},
    {"Pixel", "pixel consistency: neighbouring-pixel statistics and fine texture look camera-like"},
    {"Trans", "transformation consistency: content stays coherent under rotation and colour transforms"},
}};

}  // namespace

SkillId SkillId::from_ordinal(int ordinal) {
  if (ordinal < 0 || ordinal >= kCount) {
    throw Error(ErrorCode::UnknownSkill, "ordinal " + std::to_string(ordinal));
  }
  return SkillId(static_cast<Value>(ordinal));
}

std::string_view SkillId::name() const { return kSkills[ordinal()].name; }

std::string_view SkillId::definition() const { return kSkills[ordinal()].definition; }

std::optional<SkillId> try_skill_from_name(std::string_view name) {
  const std::string lowered = to_lower(name);
  for (int i = 0; i < SkillId::kCount; ++i) {
    if (to_lower(kSkills[i].name) == lowered) return SkillId::from_ordinal(i);
  }
  return std::nullopt;
}

SkillId skill_from_name(std::string_view name) {
  if (auto s = try_skill_from_name(name)) return *s;
  throw Error(ErrorCode::UnknownSkill, "'" + std::string(name) + "'");
}

std::array<SkillId, SkillId::kCount> all_skills() {
  std::array<SkillId, SkillId::kCount> out{
      SkillId::Value::Light, SkillId::Value::Shadow, SkillId::Value::Phys,  SkillId::Value::CS,
      SkillId::Value::Func,  SkillId::Value::OCR,    SkillId::Value::Human, SkillId::Value::Region,
      SkillId::Value::Animal, SkillId::Value::Freq,  SkillId::Value::Pixel, SkillId::Value::Trans};
  return out;
}

}  // namespace skillscope
