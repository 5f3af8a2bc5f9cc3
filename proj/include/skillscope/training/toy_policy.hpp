#pragma once

#include <span>
#include <vector>

#include "skillscope/core/skill.hpp"

namespace skillscope {

/// A (skill, answer) output of the toy policy.
struct ToyOutput {
  SkillId skill = SkillId::Value::Light;
  int answer = 0;

  [[nodiscard]] int index() const { return skill.ordinal() * 2 + answer; }
  static ToyOutput from_index(int index);
  friend bool operator==(const ToyOutput&, const ToyOutput&) = default;
};

/// Tabular softmax policy over 24 outputs per context, temperature 1.
class ToyPolicy {
 public:
  static constexpr int kOutputs = SkillId::kCount * 2;

  /// All-zero logits (uniform policy).
  explicit ToyPolicy(int contexts);
  ToyPolicy(int contexts, std::vector<double> logits);

  [[nodiscard]] int contexts() const { return contexts_; }
  [[nodiscard]] const std::vector<double>& logits() const { return logits_; }
  [[nodiscard]] std::vector<double>& logits() { return logits_; }
  [[nodiscard]] std::span<const double> row(int context) const;

  /// Softmax of a context row; throws UnknownContext.
  [[nodiscard]] std::vector<double> probabilities(int context) const;
  [[nodiscard]] double log_prob(int context, int output) const;

  /// Marginal P(skill | context) and conditional P(answer | context, skill).
  [[nodiscard]] double skill_prob(int context, SkillId skill) const;
  [[nodiscard]] double answer_given_skill(int context, SkillId skill, int answer) const;

  void check_context(int context) const;

  friend bool operator==(const ToyPolicy&, const ToyPolicy&) = default;

 private:
  int contexts_;
  std::vector<double> logits_;  // contexts x kOutputs, row-major
};

}  // namespace skillscope
