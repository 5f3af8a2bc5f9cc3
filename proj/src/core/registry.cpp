#include "skillscope/core/registry.hpp"

#include <algorithm>
#include <set>

#include "skillscope/core/error.hpp"
#include "skillscope/core/templates.hpp"

namespace skillscope {

std::string_view to_string(Producer p) {
  switch (p) {
    case Producer::OcrClient: return "ocr-client";
    case Producer::LightingClient: return "lighting-client";
    case Producer::ShadowClient: return "shadow-client";
    case Producer::RegionClient: return "region-client";
    case Producer::FrequencyAnalyzer: return "frequency-analyzer";
    case Producer::PixelAnalyzer: return "pixel-analyzer";
    case Producer::TransformViews: return "transform-views";
  }
  return "unknown";
}

ToolchainBinding default_binding(SkillId skill) {
  ToolchainBinding b;
  b.template_id = checklist_template_id(skill.name());
  switch (skill.value()) {
    case SkillId::Value::OCR: b.producers = {Producer::OcrClient}; break;
    case SkillId::Value::Light: b.producers = {Producer::LightingClient}; break;
    case SkillId::Value::Shadow: b.producers = {Producer::ShadowClient}; break;
    case SkillId::Value::Region: b.producers = {Producer::RegionClient}; break;
    case SkillId::Value::Freq: b.producers = {Producer::FrequencyAnalyzer}; break;
    case SkillId::Value::Pixel: b.producers = {Producer::PixelAnalyzer}; break;
    case SkillId::Value::Trans: b.producers = {Producer::TransformViews}; break;
    default: break;
  }
  return b;
}

SkillRegistry SkillRegistry::full() {
  const auto skills = all_skills();
  return with_skills(skills);
}

SkillRegistry SkillRegistry::with_skills(std::span<const SkillId> skills) {
  if (skills.empty()) throw Error(ErrorCode::EmptyRegistry, "at least one skill must be enabled");
  SkillRegistry reg;
  std::set<int> seen;
  for (SkillId s : skills) {
    if (!seen.insert(s.ordinal()).second) {
      throw Error(ErrorCode::DuplicateSkill, std::string(s.name()));
    }
    reg.enabled_.push_back(s);
    reg.bindings_.emplace(s.ordinal(), default_binding(s));
  }
  std::sort(reg.enabled_.begin(), reg.enabled_.end());
  return reg;
}

SkillRegistry SkillRegistry::with_subset(std::span<const std::string> names) {
  std::vector<SkillId> skills;
  skills.reserve(names.size());
  for (const auto& n : names) skills.push_back(skill_from_name(n));
  return with_skills(skills);
}

std::vector<SkillId> compact_skills() {
  return {SkillId::Value::Freq, SkillId::Value::Pixel, SkillId::Value::OCR, SkillId::Value::Trans};
}

std::vector<SkillId> advanced_skills() {
  auto out = compact_skills();
  for (SkillId s : {SkillId::Value::Light, SkillId::Value::Shadow, SkillId::Value::Region,
                    SkillId::Value::Human}) {
    out.push_back(s);
  }
  return out;
}

SkillRegistry SkillRegistry::preset(std::string_view name) {
  if (name == "full") return full();
  if (name == "compact") return with_skills(compact_skills());
  if (name == "advanced") return with_skills(advanced_skills());
  if (name == "none") throw Error(ErrorCode::EmptyRegistry, "preset 'none' enables no skills");
  throw Error(ErrorCode::ConfigError, "unknown registry preset '" + std::string(name) + "'");
}

bool SkillRegistry::contains(SkillId skill) const {
  return bindings_.count(skill.ordinal()) != 0;
}

const ToolchainBinding& SkillRegistry::binding(SkillId skill) const {
  auto it = bindings_.find(skill.ordinal());
  if (it == bindings_.end()) {
    throw Error(ErrorCode::SkillNotInLibrary, std::string(skill.name()) + " is not enabled");
  }
  return it->second;
}

std::string SkillRegistry::names_joined(std::string_view sep) const {
  std::string out;
  for (std::size_t i = 0; i < enabled_.size(); ++i) {
    if (i) out += sep;
    out += enabled_[i].name();
  }
  return out;
}

void SkillRegistry::rebind(SkillId skill, ToolchainBinding binding) {
  auto it = bindings_.find(skill.ordinal());
  if (it == bindings_.end()) {
    throw Error(ErrorCode::SkillNotInLibrary, std::string(skill.name()) + " is not enabled");
  }
  it->second = std::move(binding);
}

}  // namespace skillscope
