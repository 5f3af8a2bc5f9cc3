#include "skillscope/reasoner/pipeline.hpp"

#include <spdlog/spdlog.h>

#include <chrono>

#include "skillscope/core/error.hpp"
#include "skillscope/io/image_io.hpp"
#include "skillscope/reasoner/prompt.hpp"

namespace skillscope {
namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

const TemplateStore& templates_of(const Services& services) {
  static const TemplateStore builtin = TemplateStore::builtin();
  return services.templates ? *services.templates : builtin;
}

const ReasonerClient& need_reasoner(const Services& services) {
  if (!services.reasoner) throw Error(ErrorCode::ReasonerUnavailable, "no reasoner client configured");
  return *services.reasoner;
}

/// Same as run_detection but reports "no answer" through an empty
/// trajectory answer instead of throwing.
DetectionRun attempt_detection(const std::shared_ptr<const Pixels>& image, const SkillChoice& choice,
                               const SkillRegistry& registry, const Services& services, const PipelineConfig& config,
                               const std::vector<ChatMessage>& history) {
  DetectionRun run;
  run.evidence = run_toolchain(choice.skill, *image, registry, services.tools.get(), config.analyzers);
  const auto& binding = registry.binding(choice.skill);
  const PromptBundle prompt = build_stage2_prompt(choice.skill, image, run.evidence, run.evidence.views(),
                                                  templates_of(services), binding.template_id);
  const ReasonerClient& reasoner = need_reasoner(services);

  ReasonerRequest req;
  req.messages = history;
  req.messages.push_back({"user", prompt.rendered_text, prompt.attachments});

  Trajectory first = parse_trajectory(reasoner.complete(req));
  run.attempts = 1;
  if (first.format_valid) {
    run.trajectory = std::move(first);
    return run;
  }
  spdlog::info("stage two reply for skill {} is not format-valid; retrying once", choice.skill.name());
  req.messages.push_back({"assistant", first.raw, {}});
  req.messages.push_back({"user", std::string(kStage2Reminder), {}});
  Trajectory second = parse_trajectory(reasoner.complete(req));
  run.attempts = 2;
  if (second.answer || !first.answer) {
    run.trajectory = std::move(second);
  } else {
    run.trajectory = std::move(first);
  }
  return run;
}

}  // namespace

DetectionRun run_detection(const std::shared_ptr<const Pixels>& image, const SkillChoice& choice,
                           const SkillRegistry& registry, const Services& services, const PipelineConfig& config,
                           const std::vector<ChatMessage>& history) {
  DetectionRun run = attempt_detection(image, choice, registry, services, config, history);
  if (!run.trajectory.answer) {
    throw Error(ErrorCode::IndeterminateOutput, "no answer digit after " + std::to_string(run.attempts) + " attempts");
  }
  return run;
}

Verdict fuse(const Trajectory& trajectory, const EvidenceBundle& /*evidence*/) {
  if (!trajectory.answer) throw Error(ErrorCode::IndeterminateOutput, "trajectory has no answer");
  return Verdict::from_code(*trajectory.answer);
}

DetectionOutcome detect(const ImageRecord& record, const std::shared_ptr<const Pixels>& image,
                        const SkillRegistry& registry, const Services& services, const PipelineConfig& config) {
  DetectionOutcome out;
  out.record_id = record.id;
  try {
    auto t0 = Clock::now();
    const ClueSet clues = extract_clues(*image, config.ocr_clues ? services.tools.get() : nullptr, config.analyzers,
                                        record.id);
    out.timings_ms["clues"] = ms_since(t0);

    t0 = Clock::now();
    std::vector<ChatMessage> history;
    if (config.skill_override) {
      if (!registry.contains(*config.skill_override)) {
        throw Error(ErrorCode::SkillNotInLibrary,
                    "override " + std::string(config.skill_override->name()) + " is not enabled");
      }
      out.skill_choice = {*config.skill_override,
                          "template=override skill=" + std::string(config.skill_override->name()),
                          RouteOrigin::Fallback};
      out.routing = "override";
    } else if (config.routing == RoutingMode::Fallback) {
      out.skill_choice = fallback_route(clues, registry, config.thresholds);
      out.routing = "fallback";
    } else {
      try {
        auto selection = select_skill_with_transcript(image, clues, registry, need_reasoner(services),
                                                      templates_of(services));
        out.skill_choice = std::move(selection.choice);
        history = std::move(selection.transcript);
        out.routing = "reasoner";
      } catch (const Error& e) {
        if (e.code() != ErrorCode::ReasonerUnavailable || !config.allow_fallback) throw;
        spdlog::warn("{}: stage one unavailable ({}), using fallback router", record.id, e.detail());
        out.skill_choice = fallback_route(clues, registry, config.thresholds);
        out.routing = "fallback";
      }
    }
    out.used_fallback = out.routing == "fallback";
    out.timings_ms["route"] = ms_since(t0);

    t0 = Clock::now();
    DetectionRun run = attempt_detection(image, out.skill_choice, registry, services, config, history);
    out.timings_ms["detection"] = ms_since(t0);
    out.trajectory = std::move(run.trajectory);
    out.evidence = std::move(run.evidence);
    out.attempts = run.attempts;

    t0 = Clock::now();
    if (out.trajectory.answer) out.verdict = fuse(out.trajectory, out.evidence);
    out.timings_ms["fuse"] = ms_since(t0);
  } catch (const Error& e) {
    throw e.with_context("record " + record.id);
  }
  spdlog::info("{}: skill={} routing={} verdict={} clues={:.1f}ms route={:.1f}ms detection={:.1f}ms", record.id,
               out.skill_choice.skill.name(), out.routing,
               out.verdict ? std::string(to_string(out.verdict->value)) : "indeterminate", out.timings_ms["clues"],
               out.timings_ms["route"], out.timings_ms["detection"]);
  return out;
}

DetectionOutcome detect(const ImageRecord& record, const SkillRegistry& registry, const Services& services,
                        const PipelineConfig& config) {
  std::shared_ptr<const Pixels> image;
  try {
    image = std::make_shared<const Pixels>(load_image(record.path));
  } catch (const Error& e) {
    throw e.with_context("record " + record.id);
  }
  return detect(record, image, registry, services, config);
}

nlohmann::ordered_json outcome_to_json(const DetectionOutcome& o, bool with_timings) {
  nlohmann::ordered_json j;
  j["id"] = o.record_id;
  j["verdict"] = o.verdict ? nlohmann::ordered_json(std::string(to_string(o.verdict->value))) : nlohmann::ordered_json(nullptr);
  j["code"] = o.verdict ? nlohmann::ordered_json(o.verdict->code()) : nlohmann::ordered_json(nullptr);
  j["indeterminate"] = o.indeterminate();
  j["skill"] = std::string(o.skill_choice.skill.name());
  j["origin"] = std::string(to_string(o.skill_choice.origin));
  j["routing"] = o.routing;
  j["used_fallback"] = o.used_fallback;
  j["rationale"] = o.skill_choice.rationale;
  j["attempts"] = o.attempts;
  nlohmann::ordered_json t;
  t["format_valid"] = o.trajectory.format_valid;
  t["answer"] = o.trajectory.answer ? nlohmann::ordered_json(*o.trajectory.answer) : nlohmann::ordered_json(nullptr);
  t["raw"] = o.trajectory.raw;
  j["trajectory"] = std::move(t);
  nlohmann::ordered_json ev;
  ev["skill"] = std::string(o.evidence.skill.name());
  nlohmann::ordered_json producers = nlohmann::ordered_json::array();
  for (const auto& item : o.evidence.items) producers.push_back(std::string(to_string(item.producer)));
  ev["producers"] = std::move(producers);
  ev["summary"] = o.evidence.summary;
  j["evidence"] = std::move(ev);
  if (with_timings) {
    nlohmann::ordered_json tm;
    for (const auto& [k, v] : o.timings_ms) tm[k] = v;
    j["timings_ms"] = std::move(tm);
  }
  return j;
}

}  // namespace skillscope
