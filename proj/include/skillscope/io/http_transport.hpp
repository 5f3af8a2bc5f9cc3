#pragma once

#include <memory>
#include <semaphore>
#include <string>

#include "skillscope/core/error.hpp"

namespace skillscope {

struct Endpoint {
  std::string url;  // http(s)://host[:port][/path]
  double timeout_s = 30.0;
  int retries = 2;
  std::string api_key_env;  // name of the env var holding a bearer token
  int max_in_flight = 4;
};

/// JSON-over-HTTP POST with retries and a cap on concurrent requests.
class HttpTransport {
 public:
  /// `failure` is the error code raised once all attempts fail.
  HttpTransport(Endpoint endpoint, ErrorCode failure);

  [[nodiscard]] const Endpoint& endpoint() const { return endpoint_; }

  /// Returns the response body of the first 2xx reply.
  std::string post_json(const std::string& body) const;

 private:
  Endpoint endpoint_;
  ErrorCode failure_;
  std::string scheme_host_port_;
  std::string path_;
  std::unique_ptr<std::counting_semaphore<>> in_flight_;
};

}  // namespace skillscope
