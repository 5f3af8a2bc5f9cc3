#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

namespace skillscope {

/// Prompt templates keyed by id ("stage1/select", "stage2/wrapper",
/// "stage2/light", "annotate/probe", ...). Placeholders are `{{name}}`.
class TemplateStore {
 public:
  /// Templates compiled in from the repository's templates/ directory.
  static TemplateStore builtin();

  /// Loads every `*.txt` under `dir`; file `stage2.light.txt` becomes id
  /// `stage2/light`. Only the files present are available.
  static TemplateStore from_directory(const std::filesystem::path& dir);

  [[nodiscard]] bool contains(std::string_view id) const;
  /// Throws TemplateMissing.
  [[nodiscard]] const std::string& get(std::string_view id) const;

  void put(std::string id, std::string text);

 private:
  std::map<std::string, std::string, std::less<>> templates_;
};

/// Substitutes every `{{name}}`; an unbound placeholder throws TemplateMissing.
std::string render_template(std::string_view text, const std::map<std::string, std::string>& vars);

/// Id of the stage-two checklist template for a skill name ("stage2/light").
std::string checklist_template_id(std::string_view skill_name);

}  // namespace skillscope
