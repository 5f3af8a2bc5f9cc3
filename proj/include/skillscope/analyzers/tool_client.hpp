#pragma once

#include <map>
#include <memory>
#include <string>

#include "skillscope/analyzers/tool_types.hpp"
#include "skillscope/core/types.hpp"
#include "skillscope/io/fixture_store.hpp"
#include "skillscope/io/http_transport.hpp"

namespace skillscope {

/// Produces the raw wire response body for a tool request.
class ToolBackend {
 public:
  virtual ~ToolBackend() = default;
  virtual std::string send(ToolKind kind, const Pixels& image) = 0;
};

/// Request body: {"kind": "<kind>", "image": "<base64 PNG>"}.
std::string tool_wire_request(ToolKind kind, const Pixels& image);

class HttpToolBackend final : public ToolBackend {
 public:
  explicit HttpToolBackend(const std::map<ToolKind, Endpoint>& endpoints);
  std::string send(ToolKind kind, const Pixels& image) override;

 private:
  std::map<ToolKind, std::unique_ptr<HttpTransport>> transports_;
};

/// External tool front end with record/replay. Fixture key is
/// `<kind>-<image digest>`.
class ToolClient {
 public:
  ToolClient(ServiceMode mode, std::shared_ptr<ToolBackend> backend, std::shared_ptr<FixtureStore> store);

  /// Throws ToolUnavailable, FixtureMissing or MalformedToolResponse.
  ToolResult call(const Pixels& image, ToolKind kind) const;

  OcrResult ocr(const Pixels& image) const { return std::get<OcrResult>(call(image, ToolKind::Ocr)); }

  [[nodiscard]] ServiceMode mode() const { return mode_; }

 private:
  ServiceMode mode_;
  std::shared_ptr<ToolBackend> backend_;
  std::shared_ptr<FixtureStore> store_;
};

}  // namespace skillscope
