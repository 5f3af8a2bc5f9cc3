#pragma once

#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "skillscope/core/types.hpp"
#include "skillscope/io/fixture_store.hpp"
#include "skillscope/io/http_transport.hpp"

namespace skillscope {

struct ChatMessage {
  std::string role;  // "system" | "user" | "assistant"
  std::string text;
  std::vector<std::shared_ptr<const Pixels>> images;
};

struct ReasonerRequest {
  std::vector<ChatMessage> messages;
};

struct ReasonerSettings {
  std::string model = "default";
  double temperature = 0.0;
};

/// Wire body: {"model", "temperature", "messages": [{"role", "text",
/// "images": [<base64 PNG>...]}]}. With `inline_images == false` images are
/// replaced by their content digests (the canonical form used for keys).
nlohmann::json reasoner_wire_request(const ReasonerRequest& request, const ReasonerSettings& settings,
                                     bool inline_images);

/// sha256 over the canonical (digest-only) wire request.
std::string reasoner_request_digest(const ReasonerRequest& request, const ReasonerSettings& settings);

/// Produces the raw wire response body, `{"text": "..."}`.
class ReasonerBackend {
 public:
  virtual ~ReasonerBackend() = default;
  virtual std::string send(const ReasonerRequest& request, const ReasonerSettings& settings) = 0;
};

class HttpReasonerBackend final : public ReasonerBackend {
 public:
  explicit HttpReasonerBackend(Endpoint endpoint);
  std::string send(const ReasonerRequest& request, const ReasonerSettings& settings) override;

 private:
  HttpTransport transport_;
};

/// Multimodal reasoner front end. Live mode talks to the backend, record
/// mode additionally persists every raw response keyed by request digest,
/// replay mode answers exclusively from fixtures.
class ReasonerClient {
 public:
  ReasonerClient(ReasonerSettings settings, ServiceMode mode, std::shared_ptr<ReasonerBackend> backend,
                 std::shared_ptr<FixtureStore> store);

  /// Returns the response text. Throws ReasonerUnavailable (transport
  /// failure or undecodable body) or FixtureMissing.
  std::string complete(const ReasonerRequest& request) const;

  [[nodiscard]] const ReasonerSettings& settings() const { return settings_; }
  [[nodiscard]] ServiceMode mode() const { return mode_; }

 private:
  ReasonerSettings settings_;
  ServiceMode mode_;
  std::shared_ptr<ReasonerBackend> backend_;
  std::shared_ptr<FixtureStore> store_;
};

}  // namespace skillscope
