#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "skillscope/core/skill.hpp"

namespace skillscope {

/// Evidence producers a skill's toolchain can invoke.
enum class Producer {
  OcrClient,
  LightingClient,
  ShadowClient,
  RegionClient,
  FrequencyAnalyzer,
  PixelAnalyzer,
  TransformViews,
};

std::string_view to_string(Producer p);

struct ToolchainBinding {
  std::vector<Producer> producers;  // empty = prompt-only skill
  std::string template_id;          // stage-two checklist template

  friend bool operator==(const ToolchainBinding&, const ToolchainBinding&) = default;
};

/// Default binding for a skill: external tools for Light/Shadow/OCR/Region,
/// built-in analyzers for Freq/Pixel/Trans, prompt-only for the rest.
ToolchainBinding default_binding(SkillId skill);

class SkillRegistry {
 public:
  /// All twelve skills with default bindings.
  static SkillRegistry full();

  /// Throws UnknownSkill, DuplicateSkill or EmptyRegistry.
  static SkillRegistry with_subset(std::span<const std::string> names);
  static SkillRegistry with_skills(std::span<const SkillId> skills);

  /// Named ablation presets: "none" is rejected (empty), "compact" (4),
  /// "advanced" (8), "full" (12).
  static SkillRegistry preset(std::string_view name);

  [[nodiscard]] const std::vector<SkillId>& enabled() const { return enabled_; }
  [[nodiscard]] bool contains(SkillId skill) const;
  [[nodiscard]] const ToolchainBinding& binding(SkillId skill) const;
  [[nodiscard]] SkillId lowest_enabled() const { return enabled_.front(); }
  [[nodiscard]] std::string names_joined(std::string_view sep = ", ") const;

  /// Replace the binding of an enabled skill.
  void rebind(SkillId skill, ToolchainBinding binding);

  friend bool operator==(const SkillRegistry&, const SkillRegistry&) = default;

 private:
  SkillRegistry() = default;

  std::vector<SkillId> enabled_;  // ordinal order
  std::map<int, ToolchainBinding> bindings_;
};

std::vector<SkillId> compact_skills();
std::vector<SkillId> advanced_skills();

}  // namespace skillscope
