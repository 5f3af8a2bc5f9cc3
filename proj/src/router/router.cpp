#include "skillscope/router/router.hpp"

#include <spdlog/spdlog.h>

#include "skillscope/core/error.hpp"
#include "skillscope/core/format.hpp"
#include "skillscope/core/trajectory.hpp"

namespace skillscope {
namespace {

constexpr std::string_view kStage1Grammar =
    "Answer with exactly one skill name from the list above, written as <skill>NAME</skill>.";

std::string skill_list(const SkillRegistry& registry) {
  std::string out;
  for (SkillId s : registry.enabled()) {
    if (!out.empty()) out += "\n";
    out += "- ";
    out += s.name();
    out += ": ";
    out += s.definition();
  }
  return out;
}

std::string reminder(const SkillRegistry& registry) {
  return "Your previous answer did not name a skill from the list. Choose exactly one of: " +
         registry.names_joined() + ". Reply only with <skill>NAME</skill>.";
}

/// Skill named by the reply's <skill> tag, or the raw tag content when it
/// names nothing enabled.
struct TagLookup {
  std::optional<SkillId> skill;
  std::string named;
};

TagLookup lookup(std::string_view reply, const SkillRegistry& registry) {
  TagLookup out;
  auto tag = extract_block(reply, "skill");
  if (!tag) return out;
  out.named = std::string(trim(*tag));
  if (auto s = try_skill_from_name(out.named); s && registry.contains(*s)) out.skill = s;
  return out;
}

std::string one_line(std::string_view text) {
  std::string s(trim(text));
  for (auto& ch : s) {
    if (ch == '\n' || ch == '\r') ch = ' ';
  }
  return s;
}

}  // namespace

std::string_view to_string(RouteOrigin origin) { return origin == RouteOrigin::Reasoner ? "reasoner" : "fallback"; }

SkillChoice fallback_route(const ClueSet& clues, const SkillRegistry& registry, const RouterThresholds& t) {
  if (registry.enabled().empty()) throw Error(ErrorCode::EmptyRegistry, "no skills enabled");
  struct Rule {
    bool fires;
    SkillId skill;
    const char* name;
  };
  const Rule rules[] = {
      {clues.text_likelihood >= t.text, SkillId::Value::OCR, "text_likelihood"},
      {clues.hf_ratio >= t.hf, SkillId::Value::Freq, "hf_ratio"},
      {clues.residual_energy >= t.residual, SkillId::Value::Pixel, "residual_energy"},
      {true, SkillId::Value::CS, "default"},
  };
  for (const auto& r : rules) {
    if (r.fires && registry.contains(r.skill)) {
      return {r.skill, std::string("template=fallback rule=") + r.name, RouteOrigin::Fallback};
    }
  }
  return {registry.lowest_enabled(), "template=fallback rule=lowest-enabled", RouteOrigin::Fallback};
}

ReasonerRequest build_stage1_request(const std::shared_ptr<const Pixels>& image, const ClueSet& clues,
                                     const SkillRegistry& registry, const TemplateStore& templates) {
  const std::string text = render_template(templates.get(kStage1TemplateId), {
                                                                                 {"skill_list", skill_list(registry)},
                                                                                 {"clue_summary", clue_summary(clues)},
                                                                                 {"output_grammar", std::string(kStage1Grammar)},
                                                                             });
  ReasonerRequest req;
  req.messages.push_back({"user", text, {image}});
  return req;
}

SkillSelection select_skill_with_transcript(const std::shared_ptr<const Pixels>& image, const ClueSet& clues,
                                            const SkillRegistry& registry, const ReasonerClient& reasoner,
                                            const TemplateStore& templates) {
  if (registry.enabled().empty()) throw Error(ErrorCode::EmptyRegistry, "no skills enabled");
  ReasonerRequest req = build_stage1_request(image, clues, registry, templates);

  std::string reply = reasoner.complete(req);
  req.messages.push_back({"assistant", reply, {}});
  TagLookup found = lookup(reply, registry);
  if (!found.skill) {
    spdlog::info("stage one named '{}' outside the enabled skills; retrying once", found.named);
    req.messages.push_back({"user", reminder(registry), {}});
    reply = reasoner.complete(req);
    req.messages.push_back({"assistant", reply, {}});
    found = lookup(reply, registry);
    if (!found.skill) {
      throw Error(ErrorCode::SkillNotInLibrary,
                  "'" + found.named + "' is not one of the enabled skills (" + registry.names_joined() + ")");
    }
  }
  SkillSelection out;
  out.choice = {*found.skill, "template=" + std::string(kStage1TemplateId) + " reply=" + one_line(reply),
                RouteOrigin::Reasoner};
  out.transcript = std::move(req.messages);
  return out;
}

SkillChoice select_skill(const std::shared_ptr<const Pixels>& image, const ClueSet& clues,
                         const SkillRegistry& registry, const ReasonerClient& reasoner,
                         const TemplateStore& templates) {
  return select_skill_with_transcript(image, clues, registry, reasoner, templates).choice;
}

}  // namespace skillscope
