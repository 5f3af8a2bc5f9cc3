#include "skillscope/analyzers/tool_client.hpp"

#include <nlohmann/json.hpp>

#include "skillscope/core/error.hpp"
#include "skillscope/io/digest.hpp"
#include "skillscope/io/image_io.hpp"

namespace skillscope {

std::string tool_wire_request(ToolKind kind, const Pixels& image) {
  const nlohmann::json body{{"kind", to_string(kind)}, {"image", base64_encode(encode_png(image))}};
  return body.dump();
}

HttpToolBackend::HttpToolBackend(const std::map<ToolKind, Endpoint>& endpoints) {
  for (const auto& [kind, ep] : endpoints) {
    transports_.emplace(kind, std::make_unique<HttpTransport>(ep, ErrorCode::ToolUnavailable));
  }
}

std::string HttpToolBackend::send(ToolKind kind, const Pixels& image) {
  auto it = transports_.find(kind);
  if (it == transports_.end()) {
    throw Error(ErrorCode::ToolUnavailable, "no endpoint configured for " + std::string(to_string(kind)));
  }
  return it->second->post_json(tool_wire_request(kind, image));
}

ToolClient::ToolClient(ServiceMode mode, std::shared_ptr<ToolBackend> backend, std::shared_ptr<FixtureStore> store)
    : mode_(mode), backend_(std::move(backend)), store_(std::move(store)) {
  if (mode_ != ServiceMode::Live && !store_) {
    throw Error(ErrorCode::ConfigError, "record/replay mode requires a fixture directory");
  }
}

ToolResult ToolClient::call(const Pixels& image, ToolKind kind) const {
  const std::string key = std::string(to_string(kind)) + "-" + image_digest(image);
  std::string body;
  if (mode_ == ServiceMode::Replay) {
    auto fixture = store_->read(key);
    if (!fixture) throw Error(ErrorCode::FixtureMissing, store_->path_for(key).string());
    body = std::move(*fixture);
  } else {
    if (!backend_) {
      throw Error(ErrorCode::ToolUnavailable, "no tool backend configured for " + std::string(to_string(kind)));
    }
    body = backend_->send(kind, image);
    if (mode_ == ServiceMode::Record) store_->write(key, body);
  }
  return parse_tool_response(kind, body);
}

}  // namespace skillscope
