#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "skillscope/core/types.hpp"

namespace skillscope {

struct ManifestHeader {
  std::string name;
  std::string version;
  std::string created_at;

  friend bool operator==(const ManifestHeader&, const ManifestHeader&) = default;
};

struct Manifest {
  std::optional<ManifestHeader> header;
  std::vector<ImageRecord> records;

  friend bool operator==(const Manifest&, const Manifest&) = default;
};

/// JSON Lines. An optional first line {"manifest": {"name", "version",
/// "created_at"}} carries provenance; every other non-blank line is
///   {"id", "path", "label", "skill", "source"?, "split"?}
/// with split defaulting to "test". Relative paths resolve against
/// `base_dir`. Errors name the offending line: ParseError, DuplicateId,
/// UnknownSkill.
Manifest parse_manifest(std::string_view text, const std::filesystem::path& base_dir = {});
Manifest load_manifest(const std::filesystem::path& path);

nlohmann::ordered_json record_to_json(const ImageRecord& record, const std::filesystem::path& relative_to = {});

/// Paths are written relative to `relative_to` when it is given.
std::string manifest_to_jsonl(const Manifest& manifest, const std::filesystem::path& relative_to = {});
void save_manifest(const Manifest& manifest, const std::filesystem::path& path);

}  // namespace skillscope
