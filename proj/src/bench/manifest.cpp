#include "skillscope/bench/manifest.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "skillscope/core/error.hpp"
#include "skillscope/core/format.hpp"

namespace skillscope {

namespace {

std::string field(const nlohmann::json& j, const char* key, int line, bool required = true) {
  if (!j.contains(key)) {
    if (!required) return {};
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": missing '" + key + "'");
  }
  if (!j.at(key).is_string()) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": '" + key + "' must be a string");
  }
  return j.at(key).get<std::string>();
}

}  // namespace

Manifest parse_manifest(std::string_view text, const std::filesystem::path& base_dir) {
  Manifest m;
  std::set<std::string, std::less<>> ids;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  bool seen_content = false;
  while (std::getline(in, raw)) {
    ++line;
    if (trim(raw).empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(raw);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + e.what());
    }
    if (!j.is_object()) throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": expected an object");
    if (j.contains("manifest")) {
      if (seen_content) {
        throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": header must be the first line");
      }
      const auto& h = j.at("manifest");
      if (!h.is_object()) throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": bad header");
      m.header = ManifestHeader{field(h, "name", line, false), field(h, "version", line, false),
                                field(h, "created_at", line, false)};
      seen_content = true;
      continue;
    }
    seen_content = true;
    ImageRecord r;
    try {
      r.id = field(j, "id", line);
      if (r.id.empty()) throw Error(ErrorCode::ParseError, "empty id");
      const std::string path = field(j, "path", line);
      if (path.empty()) throw Error(ErrorCode::ParseError, "empty path");
      std::filesystem::path p(path);
      r.path = (p.is_relative() && !base_dir.empty() ? (base_dir / p).lexically_normal() : p).string();
      r.label = label_from_string(field(j, "label", line));
      r.skill = skill_from_name(field(j, "skill", line));
      r.source = field(j, "source", line, false);
      const std::string split = field(j, "split", line, false);
      r.split = split.empty() ? Split::Test : split_from_string(split);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::ParseError && e.detail().starts_with("line ")) throw;
      throw e.with_context("line " + std::to_string(line));
    }
    if (!ids.insert(r.id).second) {
      throw Error(ErrorCode::DuplicateId, "line " + std::to_string(line) + ": id '" + r.id + "' already used");
    }
    m.records.push_back(std::move(r));
  }
  return m;
}

Manifest load_manifest(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open manifest " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_manifest(ss.str(), path.parent_path());
  } catch (const Error& e) {
    throw e.with_context(path.string());
  }
}

nlohmann::ordered_json record_to_json(const ImageRecord& r, const std::filesystem::path& relative_to) {
  std::string path = r.path;
  if (!relative_to.empty()) {
    const auto rel = std::filesystem::absolute(r.path).lexically_relative(std::filesystem::absolute(relative_to));
    if (!rel.empty()) path = rel.generic_string();
  }
  nlohmann::ordered_json j;
  j["id"] = r.id;
  j["path"] = path;
  j["label"] = std::string(to_string(r.label));
  j["skill"] = std::string(r.skill.name());
  j["source"] = r.source;
  j["split"] = std::string(to_string(r.split));
  return j;
}

std::string manifest_to_jsonl(const Manifest& m, const std::filesystem::path& relative_to) {
  std::string out;
  if (m.header) {
    nlohmann::ordered_json h;
    h["name"] = m.header->name;
    h["version"] = m.header->version;
    h["created_at"] = m.header->created_at;
    nlohmann::ordered_json line;
    line["manifest"] = h;
    out += line.dump() + "\n";
  }
  for (const auto& r : m.records) out += record_to_json(r, relative_to).dump() + "\n";
  return out;
}

void save_manifest(const Manifest& m, const std::filesystem::path& path) {
  auto dir = path.parent_path();
  if (dir.empty()) dir = ".";
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  out << manifest_to_jsonl(m, dir);
  if (!out) throw Error(ErrorCode::IoError, "write failed: " + path.string());
}

}  // namespace skillscope
