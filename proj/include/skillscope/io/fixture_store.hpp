#pragma once

#include <filesystem>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>

namespace skillscope {

enum class ServiceMode { Live, Record, Replay };

std::string_view to_string(ServiceMode mode);
ServiceMode service_mode_from_string(std::string_view text);

/// Directory of recorded wire responses, one file per response, named
/// `<key>.fixture` where key is `<kind>-<digest>`. Writes are serialized;
/// reads are lock-free.
class FixtureStore {
 public:
  FixtureStore(std::filesystem::path dir, bool writable);

  [[nodiscard]] const std::filesystem::path& dir() const { return dir_; }
  [[nodiscard]] bool writable() const { return writable_; }
  [[nodiscard]] std::filesystem::path path_for(std::string_view key) const;

  [[nodiscard]] std::optional<std::string> read(std::string_view key) const;
  /// Throws RecordingDisabled on a read-only store.
  void write(std::string_view key, std::string_view body);

 private:
  std::filesystem::path dir_;
  bool writable_;
  std::mutex write_mutex_;
};

}  // namespace skillscope
