#include "skillscope/core/trajectory.hpp"

#include <cctype>

#include "skillscope/core/format.hpp"

namespace skillscope {
namespace {

std::string open_tag(std::string_view tag) { return "<" + std::string(tag) + ">"; }
std::string close_tag(std::string_view tag) { return "</" + std::string(tag) + ">"; }

bool has_non_space(std::string_view s) {
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) return true;
  }
  return false;
}

std::optional<int> answer_digit(std::string_view content) {
  if (content == "0") return 0;
  if (content == "1") return 1;
  return std::nullopt;
}

class Scanner {
 public:
  explicit Scanner(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at(std::string_view lit) const { return s_.substr(pos_, lit.size()) == lit; }
  bool done() const { return pos_ == s_.size(); }

  /// Consumes `<tag>content</tag>` at the cursor.
  std::optional<std::string_view> block(std::string_view tag) {
    const auto open = open_tag(tag);
    const auto close = close_tag(tag);
    if (!at(open)) return std::nullopt;
    const std::size_t start = pos_ + open.size();
    const std::size_t end = s_.find(close, start);
    if (end == std::string_view::npos) return std::nullopt;
    pos_ = end + close.size();
    return s_.substr(start, end - start);
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

/// Strict parse; returns nullopt on any grammar violation.
std::optional<Trajectory> parse_strict(std::string_view raw) {
  Trajectory t;
  Scanner sc(raw);
  sc.skip_ws();
  if (sc.at("<skill>")) {
    auto name = sc.block("skill");
    if (!name) return std::nullopt;
    t.skill_tag = try_skill_from_name(*name);
    if (!t.skill_tag) return std::nullopt;
    sc.skip_ws();
  }
  auto think = sc.block("think");
  if (!think || !has_non_space(*think)) return std::nullopt;
  t.think_text = std::string(*think);
  sc.skip_ws();
  auto answer = sc.block("answer");
  if (!answer) return std::nullopt;
  t.answer = answer_digit(*answer);
  if (!t.answer) return std::nullopt;
  sc.skip_ws();
  if (!sc.done()) return std::nullopt;
  t.format_valid = true;
  t.raw = std::string(raw);
  return t;
}

}  // namespace

std::optional<std::string> extract_block(std::string_view text, std::string_view tag) {
  const auto open = open_tag(tag);
  const auto close = close_tag(tag);
  const std::size_t b = text.find(open);
  if (b == std::string_view::npos) return std::nullopt;
  const std::size_t start = b + open.size();
  const std::size_t e = text.find(close, start);
  if (e == std::string_view::npos) return std::nullopt;
  return std::string(text.substr(start, e - start));
}

Trajectory parse_trajectory(std::string_view raw) {
  if (auto strict = parse_strict(raw)) return *strict;

  Trajectory t;
  t.raw = std::string(raw);
  if (auto name = extract_block(raw, "skill")) t.skill_tag = try_skill_from_name(trim(*name));
  if (auto think = extract_block(raw, "think")) t.think_text = *think;
  if (auto answer = extract_block(raw, "answer")) t.answer = answer_digit(trim(*answer));
  t.format_valid = false;
  return t;
}

std::string render_trajectory(const std::optional<SkillId>& skill_tag, std::string_view think_text,
                              int answer) {
  std::string out;
  if (skill_tag) {
    out += "<skill>";
    out += skill_tag->name();
    out += "</skill>";
  }
  out += "<think>";
  out += think_text;
  out += "</think><answer>";
  out += answer == 1 ? '1' : '0';
  out += "</answer>";
  return out;
}

std::string render(const Trajectory& t) {
  if (!t.answer) return t.raw;
  return render_trajectory(t.skill_tag, t.think_text, *t.answer);
}

}  // namespace skillscope
