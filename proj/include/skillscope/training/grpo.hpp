#pragma once

#include <span>
#include <vector>

#include "skillscope/core/skill.hpp"
#include "skillscope/training/reward.hpp"
#include "skillscope/training/toy_policy.hpp"

namespace skillscope {

inline constexpr double kAdvantageEpsilon = 1e-8;

struct GroupStats {
  double mean = 0.0;
  double std = 0.0;  // population convention
  int size = 0;
};

/// Throws GroupTooSmall for fewer than two rewards.
GroupStats group_stats(std::span<const double> rewards);

/// (R_i - mean) / std, or all zeros when std < eps.
std::vector<double> group_advantages(std::span<const double> rewards, double eps = kAdvantageEpsilon);

struct RolloutGroup {
  int context = 0;
  std::vector<RolloutSample> samples;
};

struct LossAndGrad {
  double loss = 0.0;
  std::vector<double> grad;  // shaped like ToyPolicy::logits()
};

/// loss = -(1/N) sum_i A_i log pi(o_i | context) over all N samples of all
/// groups, with advantages held constant. The gradient is analytic:
/// d/dlogits log softmax = onehot - probs.
LossAndGrad grpo_loss_and_grad(const ToyPolicy& policy, std::span<const RolloutGroup> groups);

/// Loss only; used by finite-difference checks.
double grpo_loss(const ToyPolicy& policy, std::span<const RolloutGroup> groups);

struct SftExample {
  int context = 0;
  SkillId skill = SkillId::Value::Light;
  int answer = 0;
};

/// mean of -log P(skill | x) - log P(answer | x, skill) on the factored policy.
double sft_loss(const ToyPolicy& policy, std::span<const SftExample> examples);
LossAndGrad sft_loss_and_grad(const ToyPolicy& policy, std::span<const SftExample> examples);

}  // namespace skillscope
