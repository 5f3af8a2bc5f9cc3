#include "skillscope/training/toy_policy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "skillscope/core/error.hpp"

namespace skillscope {

ToyOutput ToyOutput::from_index(int index) {
  if (index < 0 || index >= ToyPolicy::kOutputs) {
    throw Error(ErrorCode::ConfigError, "toy output index out of range: " + std::to_string(index));
  }
  return {SkillId::from_ordinal(index / 2), index % 2};
}

ToyPolicy::ToyPolicy(int contexts) : ToyPolicy(contexts, std::vector<double>(static_cast<std::size_t>(std::max(contexts, 0)) * kOutputs, 0.0)) {}

ToyPolicy::ToyPolicy(int contexts, std::vector<double> logits) : contexts_(contexts), logits_(std::move(logits)) {
  if (contexts_ < 1) throw Error(ErrorCode::ConfigError, "toy policy needs at least one context");
  if (logits_.size() != static_cast<std::size_t>(contexts_) * kOutputs) {
    throw Error(ErrorCode::ConfigError, "logit table must be contexts x 24");
  }
}

void ToyPolicy::check_context(int context) const {
  if (context < 0 || context >= contexts_) {
    throw Error(ErrorCode::UnknownContext, "context " + std::to_string(context) + " (policy has " +
                                               std::to_string(contexts_) + ")");
  }
}

std::span<const double> ToyPolicy::row(int context) const {
  check_context(context);
  return std::span<const double>(logits_).subspan(static_cast<std::size_t>(context) * kOutputs, kOutputs);
}

std::vector<double> ToyPolicy::probabilities(int context) const {
  const auto r = row(context);
  const double mx = *std::max_element(r.begin(), r.end());
  std::vector<double> p(kOutputs);
  double z = 0.0;
  for (int i = 0; i < kOutputs; ++i) {
    p[i] = std::exp(r[i] - mx);
    z += p[i];
  }
  for (double& v : p) v /= z;
  return p;
}

double ToyPolicy::log_prob(int context, int output) const {
  const auto r = row(context);
  const double mx = *std::max_element(r.begin(), r.end());
  double z = 0.0;
  for (double v : r) z += std::exp(v - mx);
  return r[output] - mx - std::log(z);
}

double ToyPolicy::skill_prob(int context, SkillId skill) const {
  const auto p = probabilities(context);
  return p[skill.ordinal() * 2] + p[skill.ordinal() * 2 + 1];
}

double ToyPolicy::answer_given_skill(int context, SkillId skill, int answer) const {
  const auto p = probabilities(context);
  const double marginal = p[skill.ordinal() * 2] + p[skill.ordinal() * 2 + 1];
  return p[skill.ordinal() * 2 + answer] / marginal;
}

}  // namespace skillscope
