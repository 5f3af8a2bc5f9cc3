#pragma once

#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <string>
#include <vector>

#include <unistd.h>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "skillscope/analyzers/tool_client.hpp"
#include "skillscope/core/error.hpp"
#include "skillscope/io/reasoner_client.hpp"

namespace skillscope::test {

inline std::filesystem::path data_dir() { return SKILLSCOPE_TEST_DATA; }

/// Fresh empty directory under the system temp dir.
inline std::filesystem::path temp_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("skillscope_" + name + "_" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

template <typename F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an exception";
  return ErrorCode::IoError;
}

#define EXPECT_CODE(stmt, expected) EXPECT_EQ(::skillscope::test::code_of([&] { stmt; }), (expected))

/// Live-mode reasoner whose replies come from a callback; records requests.
class ScriptedReasoner final : public ReasonerBackend {
 public:
  using Fn = std::function<std::string(const ReasonerRequest&, int call)>;
  explicit ScriptedReasoner(Fn fn) : fn_(std::move(fn)) {}
  /// Replies in order; the last one repeats.
  static std::shared_ptr<ScriptedReasoner> replies(std::vector<std::string> texts) {
    return std::make_shared<ScriptedReasoner>([texts](const ReasonerRequest&, int call) {
      return texts[std::min<std::size_t>(static_cast<std::size_t>(call), texts.size() - 1)];
    });
  }
  std::string send(const ReasonerRequest& request, const ReasonerSettings&) override {
    std::lock_guard lock(mutex_);
    requests.push_back(request);
    return nlohmann::json{{"text", fn_(request, static_cast<int>(requests.size()) - 1)}}.dump();
  }
  std::vector<ReasonerRequest> requests;

 private:
  Fn fn_;
  std::mutex mutex_;
};

inline std::shared_ptr<ReasonerClient> live_client(std::shared_ptr<ReasonerBackend> backend) {
  return std::make_shared<ReasonerClient>(ReasonerSettings{}, ServiceMode::Live, std::move(backend), nullptr);
}

/// Live-mode tool backend returning fixed bodies per kind.
class CannedTools final : public ToolBackend {
 public:
  std::map<ToolKind, std::string> bodies;
  int calls = 0;
  std::string send(ToolKind kind, const Pixels&) override {
    ++calls;
    auto it = bodies.find(kind);
    if (it == bodies.end()) throw Error(ErrorCode::ToolUnavailable, "no canned body");
    return it->second;
  }
};

inline Pixels random_pixels(std::mt19937_64& gen, int w, int h, int c) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> d(static_cast<std::size_t>(w) * h * c);
  for (double& v : d) v = u(gen);
  return Pixels(w, h, c, std::move(d));
}

}  // namespace skillscope::test
