#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "skillscope/analyzers/tool_client.hpp"
#include "skillscope/analyzers/toolchain.hpp"
#include "skillscope/core/registry.hpp"
#include "skillscope/core/templates.hpp"
#include "skillscope/core/trajectory.hpp"
#include "skillscope/core/types.hpp"
#include "skillscope/io/reasoner_client.hpp"
#include "skillscope/router/router.hpp"

namespace skillscope {

/// External collaborators shared by every detection. Either client may be
/// null; stages that need a missing one fail with ReasonerUnavailable /
/// ToolUnavailable.
struct Services {
  std::shared_ptr<const ReasonerClient> reasoner;
  std::shared_ptr<const ToolClient> tools;
  std::shared_ptr<const TemplateStore> templates;
};

enum class RoutingMode { Reasoner, Fallback };

struct PipelineConfig {
  AnalyzerSettings analyzers;
  RouterThresholds thresholds;
  RoutingMode routing = RoutingMode::Reasoner;
  /// Use fallback_route when the reasoner is unreachable during stage one.
  bool allow_fallback = true;
  /// Skip stage one and use this skill.
  std::optional<SkillId> skill_override;
  /// Feed OCR coverage into the clues (costs one OCR call per image).
  bool ocr_clues = true;
};

struct DetectionRun {
  Trajectory trajectory;
  EvidenceBundle evidence;
  int attempts = 0;
};

/// Toolchain, stage-two prompt, reasoner call and parse. A format-invalid
/// reply is retried once with a grammar reminder; the valid reply wins,
/// otherwise the latest reply carrying an answer digit. Throws
/// IndeterminateOutput when neither attempt yields one.
DetectionRun run_detection(const std::shared_ptr<const Pixels>& image, const SkillChoice& choice,
                           const SkillRegistry& registry, const Services& services, const PipelineConfig& config,
                           const std::vector<ChatMessage>& history = {});

/// Answer 0 -> Real, 1 -> Fake. Evidence is not consulted. Throws
/// IndeterminateOutput when the trajectory has no answer.
Verdict fuse(const Trajectory& trajectory, const EvidenceBundle& evidence);

struct DetectionOutcome {
  std::string record_id;
  std::optional<Verdict> verdict;  // empty when indeterminate
  SkillChoice skill_choice;
  std::string routing;  // "reasoner" | "fallback" | "override"
  bool used_fallback = false;
  Trajectory trajectory;
  EvidenceBundle evidence;
  int attempts = 0;
  std::map<std::string, double> timings_ms;

  [[nodiscard]] bool indeterminate() const { return !verdict.has_value(); }
};

/// Full pipeline: clues, routing, skill-conditioned detection, fusion. An
/// answerless reasoner reply yields an indeterminate outcome rather than an
/// exception; every other stage error is rethrown with the record id.
DetectionOutcome detect(const ImageRecord& record, const std::shared_ptr<const Pixels>& image,
                        const SkillRegistry& registry, const Services& services, const PipelineConfig& config);

/// Loads the image from record.path first.
DetectionOutcome detect(const ImageRecord& record, const SkillRegistry& registry, const Services& services,
                        const PipelineConfig& config);

/// Outcome document. Timings are included only when `with_timings`.
nlohmann::ordered_json outcome_to_json(const DetectionOutcome& outcome, bool with_timings = true);

}  // namespace skillscope
