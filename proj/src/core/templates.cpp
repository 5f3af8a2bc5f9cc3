#include "skillscope/core/templates.hpp"

#include <fstream>
#include <sstream>

#include "skillscope/core/error.hpp"
#include "skillscope/core/format.hpp"

namespace skillscope {
namespace {

struct BuiltinTemplate {
  const char* id;
  const char* text;
};

// Generated at configure time from templates/*.txt.
#include "builtin_templates.inc"

std::string id_from_filename(const std::filesystem::path& file) {
  std::string stem = file.stem().string();
  for (auto& ch : stem) {
    if (ch == '.') ch = '/';
  }
  return stem;
}

}  // namespace

TemplateStore TemplateStore::builtin() {
  TemplateStore store;
  for (const auto& t : kBuiltinTemplates) store.put(t.id, t.text);
  return store;
}

TemplateStore TemplateStore::from_directory(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) {
    throw Error(ErrorCode::TemplateMissing, "template directory not found: " + dir.string());
  }
  TemplateStore store;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".txt") continue;
    std::ifstream in(entry.path(), std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    store.put(id_from_filename(entry.path()), ss.str());
  }
  return store;
}

bool TemplateStore::contains(std::string_view id) const { return templates_.find(id) != templates_.end(); }

const std::string& TemplateStore::get(std::string_view id) const {
  auto it = templates_.find(id);
  if (it == templates_.end()) throw Error(ErrorCode::TemplateMissing, std::string(id));
  return it->second;
}

void TemplateStore::put(std::string id, std::string text) { templates_[std::move(id)] = std::move(text); }

std::string render_template(std::string_view text, const std::map<std::string, std::string>& vars) {
  std::string out;
  out.reserve(text.size());
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t open = text.find("{{", pos);
    if (open == std::string_view::npos) {
      out.append(text.substr(pos));
      break;
    }
    const std::size_t close = text.find("}}", open + 2);
    if (close == std::string_view::npos) {
      out.append(text.substr(pos));
      break;
    }
    out.append(text.substr(pos, open - pos));
    const std::string name(trim(text.substr(open + 2, close - open - 2)));
    auto it = vars.find(name);
    if (it == vars.end()) throw Error(ErrorCode::TemplateMissing, "unbound placeholder {{" + name + "}}");
    out += it->second;
    pos = close + 2;
  }
  return out;
}

std::string checklist_template_id(std::string_view skill_name) { return "stage2/" + to_lower(skill_name); }

}  // namespace skillscope
