#include "skillscope/bench/annotate.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "skillscope/core/error.hpp"
#include "skillscope/core/format.hpp"
#include "skillscope/core/trajectory.hpp"
#include "skillscope/io/image_io.hpp"

namespace skillscope {

std::vector<Candidate> load_candidates(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open candidates " + path.string());
  std::vector<Candidate> out;
  std::set<std::string> ids;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (trim(raw).empty()) continue;
    const std::string where = path.string() + ": line " + std::to_string(line);
    Candidate c;
    try {
      const auto j = nlohmann::json::parse(raw);
      c.id = j.at("id").get<std::string>();
      std::filesystem::path p(j.at("path").get<std::string>());
      c.path = (p.is_relative() ? (path.parent_path() / p).lexically_normal() : p).string();
      c.label = label_from_string(j.at("label").get<std::string>());
      c.source = j.value("source", std::string());
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::ParseError, where + ": " + e.what());
    } catch (const Error& e) {
      throw e.with_context(where);
    }
    if (c.id.empty()) throw Error(ErrorCode::ParseError, where + ": empty id");
    if (!ids.insert(c.id).second) throw Error(ErrorCode::DuplicateId, where + ": id '" + c.id + "' already used");
    out.push_back(std::move(c));
  }
  return out;
}

ReasonerRequest build_probe_request(SkillId skill, const std::shared_ptr<const Pixels>& image,
                                    const TemplateStore& templates, int repeat, int repeats) {
  std::string note;
  if (repeats > 1) note = " (query " + std::to_string(repeat) + " of " + std::to_string(repeats) + ")";
  const std::string text = render_template(templates.get(kProbeTemplateId), {{"skill_name", std::string(skill.name())},
                                                                             {"skill_definition", std::string(skill.definition())},
                                                                             {"repeat_note", note}});
  return ReasonerRequest{{ChatMessage{"user", text, {image}}}};
}

std::optional<bool> parse_probe_reply(std::string_view reply) {
  const auto block = extract_block(reply, "answer");
  if (!block) return std::nullopt;
  const std::string v = to_lower(trim(*block));
  if (v == "yes") return true;
  if (v == "no") return false;
  return std::nullopt;
}

AnnotationResult annotate(const std::vector<Candidate>& candidates, const SkillRegistry& registry,
                          const ReasonerClient& reasoner, const TemplateStore& templates, int repeats) {
  if (repeats < 1) throw Error(ErrorCode::ConfigError, "annotation repeats must be >= 1");
  AnnotationResult out;
  std::size_t next_real = 0;
  const auto& skills = registry.enabled();
  for (const auto& c : candidates) {
    ImageRecord r{c.id, c.path, c.label, skills.front(), c.source, Split::Train};
    if (c.label == Label::Real) {
      r.skill = skills[next_real++ % skills.size()];
      out.records.push_back(std::move(r));
      continue;
    }
    std::shared_ptr<const Pixels> image;
    try {
      image = std::make_shared<const Pixels>(load_image(c.path));
    } catch (const Error& e) {
      throw e.with_context("candidate " + c.id);
    }
    std::vector<SkillId> yes;
    bool mixed = false;
    for (SkillId s : skills) {
      int yes_count = 0, no_count = 0;
      for (int k = 1; k <= repeats; ++k) {
        std::string reply;
        try {
          reply = reasoner.complete(build_probe_request(s, image, templates, k, repeats));
        } catch (const Error& e) {
          throw e.with_context("candidate " + c.id + " skill " + std::string(s.name()));
        }
        const auto answer = parse_probe_reply(reply);
        if (answer == true) ++yes_count;
        if (answer == false) ++no_count;
      }
      if (yes_count == repeats) {
        yes.push_back(s);
      } else if (no_count != repeats) {
        mixed = true;
      }
    }
    if (yes.size() >= 2) {
      out.rejects.push_back({c.id, "ambiguous"});
    } else if (mixed) {
      out.rejects.push_back({c.id, "inconsistent"});
    } else if (yes.empty()) {
      out.rejects.push_back({c.id, "no-skill"});
    } else {
      r.skill = yes.front();
      out.records.push_back(std::move(r));
    }
  }
  return out;
}

std::string rejects_report(const std::vector<AnnotationReject>& rejects) {
  std::string out;
  for (const auto& r : rejects) out += r.id + "\t" + r.reason + "\n";
  return out;
}

}  // namespace skillscope
