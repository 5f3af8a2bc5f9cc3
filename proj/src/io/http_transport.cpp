#include "skillscope/io/http_transport.hpp"

#include <httplib.h>
#include <spdlog/spdlog.h>

#include <cmath>
#include <cstdlib>
#include <regex>

namespace skillscope {

HttpTransport::HttpTransport(Endpoint endpoint, ErrorCode failure)
    : endpoint_(std::move(endpoint)), failure_(failure) {
  static const std::regex kUrl(R"(^(https?://[^/]+)(/.*)?$)");
  std::smatch m;
  if (!std::regex_match(endpoint_.url, m, kUrl)) {
    throw Error(ErrorCode::ConfigError, "invalid endpoint url '" + endpoint_.url + "'");
  }
  scheme_host_port_ = m[1].str();
  path_ = m[2].matched ? m[2].str() : "/";
  if (endpoint_.retries < 0) throw Error(ErrorCode::ConfigError, "retries must be >= 0");
  if (endpoint_.max_in_flight < 1) throw Error(ErrorCode::ConfigError, "max_in_flight must be >= 1");
  in_flight_ = std::make_unique<std::counting_semaphore<>>(endpoint_.max_in_flight);
}

std::string HttpTransport::post_json(const std::string& body) const {
  httplib::Headers headers;
  if (!endpoint_.api_key_env.empty()) {
    if (const char* key = std::getenv(endpoint_.api_key_env.c_str()); key && *key) {
      headers.emplace("Authorization", std::string("Bearer ") + key);
    }
  }
  const auto secs = static_cast<time_t>(endpoint_.timeout_s);
  const auto usecs = static_cast<time_t>(std::round((endpoint_.timeout_s - static_cast<double>(secs)) * 1e6));

  in_flight_->acquire();
  struct Release {
    std::counting_semaphore<>* s;
    ~Release() { s->release(); }
  } release{in_flight_.get()};

  std::string last_error;
  for (int attempt = 0; attempt <= endpoint_.retries; ++attempt) {
    httplib::Client client(scheme_host_port_);
    client.set_connection_timeout(secs, usecs);
    client.set_read_timeout(secs, usecs);
    client.set_write_timeout(secs, usecs);
    auto res = client.Post(path_, headers, body, "application/json");
    if (res && res->status >= 200 && res->status < 300) return res->body;
    last_error = res ? "HTTP " + std::to_string(res->status) : httplib::to_string(res.error());
    spdlog::warn("POST {}{} attempt {}/{} failed: {}", scheme_host_port_, path_, attempt + 1,
                 endpoint_.retries + 1, last_error);
  }
  throw Error(failure_, endpoint_.url + ": " + last_error);
}

}  // namespace skillscope
