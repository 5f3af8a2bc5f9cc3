#include "skillscope/io/reasoner_client.hpp"

#include "skillscope/core/error.hpp"
#include "skillscope/io/digest.hpp"
#include "skillscope/io/image_io.hpp"

namespace skillscope {

nlohmann::json reasoner_wire_request(const ReasonerRequest& request, const ReasonerSettings& settings,
                                     bool inline_images) {
  nlohmann::json messages = nlohmann::json::array();
  for (const auto& m : request.messages) {
    nlohmann::json images = nlohmann::json::array();
    for (const auto& img : m.images) {
      images.push_back(inline_images ? base64_encode(encode_png(*img)) : "sha256:" + image_digest(*img));
    }
    messages.push_back({{"role", m.role}, {"text", m.text}, {"images", std::move(images)}});
  }
  return {{"model", settings.model}, {"temperature", settings.temperature}, {"messages", std::move(messages)}};
}

std::string reasoner_request_digest(const ReasonerRequest& request, const ReasonerSettings& settings) {
  return sha256_hex(reasoner_wire_request(request, settings, false).dump());
}

HttpReasonerBackend::HttpReasonerBackend(Endpoint endpoint)
    : transport_(std::move(endpoint), ErrorCode::ReasonerUnavailable) {}

std::string HttpReasonerBackend::send(const ReasonerRequest& request, const ReasonerSettings& settings) {
  return transport_.post_json(reasoner_wire_request(request, settings, true).dump());
}

ReasonerClient::ReasonerClient(ReasonerSettings settings, ServiceMode mode, std::shared_ptr<ReasonerBackend> backend,
                               std::shared_ptr<FixtureStore> store)
    : settings_(std::move(settings)), mode_(mode), backend_(std::move(backend)), store_(std::move(store)) {
  if (mode_ != ServiceMode::Live && !store_) {
    throw Error(ErrorCode::ConfigError, "record/replay mode requires a fixture directory");
  }
  if (mode_ != ServiceMode::Replay && !backend_) {
    throw Error(ErrorCode::ConfigError, "live/record mode requires a reasoner endpoint");
  }
}

std::string ReasonerClient::complete(const ReasonerRequest& request) const {
  const std::string key = "reasoner-" + reasoner_request_digest(request, settings_);
  std::string body;
  if (mode_ == ServiceMode::Replay) {
    auto fixture = store_->read(key);
    if (!fixture) throw Error(ErrorCode::FixtureMissing, store_->path_for(key).string());
    body = std::move(*fixture);
  } else {
    body = backend_->send(request, settings_);
    if (mode_ == ServiceMode::Record) store_->write(key, body);
  }
  try {
    return nlohmann::json::parse(body).at("text").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ReasonerUnavailable, "undecodable reasoner response (" + key + "): " + e.what());
  }
}

}  // namespace skillscope
