#pragma once

#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "skillscope/analyzers/tool_client.hpp"
#include "skillscope/analyzers/tool_types.hpp"
#include "skillscope/core/types.hpp"
#include "skillscope/io/reasoner_client.hpp"

namespace skillscope::oracle {

/// Ground truth attached to one exact raster.
struct Truth {
  std::string id;
  Label label = Label::Real;
  SkillId skill = SkillId::Value::CS;
  std::vector<SkillId> probe_yes;  // annotation probes answered "yes"
  std::vector<Box> text_boxes;     // OCR boxes
};

/// Raster digest -> truth. Thread-safe.
class Book {
 public:
  void add(const Pixels& pixels, Truth truth);
  [[nodiscard]] std::optional<Truth> find(const Pixels& pixels) const;
  [[nodiscard]] std::size_t size() const;

 private:
  mutable std::mutex mutex_;
  std::map<std::string, Truth> by_digest_;
};

/// Answers stage one with the true skill, stage two with the true label
/// and annotation probes from `probe_yes`. Unknown images or prompts throw.
class Reasoner final : public ReasonerBackend {
 public:
  explicit Reasoner(std::shared_ptr<const Book> book) : book_(std::move(book)) {}
  std::string send(const ReasonerRequest& request, const ReasonerSettings& settings) override;
  [[nodiscard]] int calls() const { return calls_; }

 private:
  std::shared_ptr<const Book> book_;
  std::atomic<int> calls_{0};
};

/// Tool responses derived from the truth: OCR returns `text_boxes`, the
/// other kinds return one fixed observation.
class Tools final : public ToolBackend {
 public:
  explicit Tools(std::shared_ptr<const Book> book) : book_(std::move(book)) {}
  std::string send(ToolKind kind, const Pixels& image) override;

 private:
  std::shared_ptr<const Book> book_;
};

/// Reply text a stage-two oracle gives for a truth.
std::string stage2_reply(SkillId skill, Label label);

}  // namespace skillscope::oracle
