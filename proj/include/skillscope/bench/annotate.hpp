#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "skillscope/core/registry.hpp"
#include "skillscope/core/templates.hpp"
#include "skillscope/core/types.hpp"
#include "skillscope/io/reasoner_client.hpp"

namespace skillscope {

inline constexpr std::string_view kProbeTemplateId = "annotate/probe";

struct Candidate {
  std::string id;
  std::string path;
  Label label = Label::Fake;
  std::string source;
};

/// JSON Lines of {"id", "path", "label", "source"?}; relative paths resolve
/// against the file's directory. Throws ParseError / DuplicateId.
std::vector<Candidate> load_candidates(const std::filesystem::path& path);

/// Probe for one skill. With more than one repeat the prompt names the
/// query index so each repeat is a distinct request.
ReasonerRequest build_probe_request(SkillId skill, const std::shared_ptr<const Pixels>& image,
                                    const TemplateStore& templates, int repeat = 1, int repeats = 1);

/// true for <answer>yes</answer>, false for no, empty for anything else.
std::optional<bool> parse_probe_reply(std::string_view reply);

struct AnnotationReject {
  std::string id;
  std::string reason;  // "ambiguous" | "inconsistent" | "no-skill"
};

struct AnnotationResult {
  std::vector<ImageRecord> records;  // train split, candidate order
  std::vector<AnnotationReject> rejects;
};

/// Fakes are probed once per enabled skill and repeat. A fake is kept with
/// skill s when s answered yes on every repeat and every other skill
/// answered no on every repeat. Two or more unanimous yes skills reject it
/// as "ambiguous"; otherwise mixed or unreadable answers reject it as
/// "inconsistent"; no yes at all rejects it as "no-skill". Reals take the
/// enabled skills round-robin in ordinal order.
AnnotationResult annotate(const std::vector<Candidate>& candidates, const SkillRegistry& registry,
                          const ReasonerClient& reasoner, const TemplateStore& templates, int repeats = 1);

/// One "id<TAB>reason" line per reject.
std::string rejects_report(const std::vector<AnnotationReject>& rejects);

}  // namespace skillscope
