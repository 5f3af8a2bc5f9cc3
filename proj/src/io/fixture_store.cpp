#include "skillscope/io/fixture_store.hpp"

#include <fstream>
#include <sstream>

#include "skillscope/core/error.hpp"
#include "skillscope/core/format.hpp"

namespace skillscope {

std::string_view to_string(ServiceMode mode) {
  switch (mode) {
    case ServiceMode::Live: return "live";
    case ServiceMode::Record: return "record";
    case ServiceMode::Replay: return "replay";
  }
  return "live";
}

ServiceMode service_mode_from_string(std::string_view text) {
  const auto t = to_lower(text);
  if (t == "live") return ServiceMode::Live;
  if (t == "record") return ServiceMode::Record;
  if (t == "replay") return ServiceMode::Replay;
  throw Error(ErrorCode::ConfigError, "mode must be live, record or replay, got '" + std::string(text) + "'");
}

FixtureStore::FixtureStore(std::filesystem::path dir, bool writable) : dir_(std::move(dir)), writable_(writable) {}

std::filesystem::path FixtureStore::path_for(std::string_view key) const {
  return dir_ / (std::string(key) + ".fixture");
}

std::optional<std::string> FixtureStore::read(std::string_view key) const {
  std::ifstream in(path_for(key), std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void FixtureStore::write(std::string_view key, std::string_view body) {
  if (!writable_) throw Error(ErrorCode::RecordingDisabled, "fixture store is read-only");
  std::lock_guard lock(write_mutex_);
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  const auto target = path_for(key);
  auto tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoError, "cannot write fixture " + tmp.string());
    out.write(body.data(), static_cast<std::streamsize>(body.size()));
  }
  std::filesystem::rename(tmp, target, ec);
  if (ec) throw Error(ErrorCode::IoError, "cannot move fixture into place: " + ec.message());
}

}  // namespace skillscope
