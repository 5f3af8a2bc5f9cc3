#include "skillscope/training/grpo.hpp"

#include <cmath>
#include <string>

#include "skillscope/core/error.hpp"

namespace skillscope {

GroupStats group_stats(std::span<const double> rewards) {
  if (rewards.size() < 2) {
    throw Error(ErrorCode::GroupTooSmall, "group needs at least 2 samples, got " + std::to_string(rewards.size()));
  }
  GroupStats s;
  s.size = static_cast<int>(rewards.size());
  double sum = 0.0;
  for (double r : rewards) sum += r;
  s.mean = sum / s.size;
  double sq = 0.0;
  for (double r : rewards) sq += (r - s.mean) * (r - s.mean);
  s.std = std::sqrt(sq / s.size);
  return s;
}

std::vector<double> group_advantages(std::span<const double> rewards, double eps) {
  const GroupStats s = group_stats(rewards);
  std::vector<double> adv(rewards.size(), 0.0);
  if (s.std < eps) return adv;
  for (std::size_t i = 0; i < rewards.size(); ++i) adv[i] = (rewards[i] - s.mean) / s.std;
  return adv;
}

namespace {

std::size_t total_samples(const ToyPolicy& policy, std::span<const RolloutGroup> groups) {
  std::size_t n = 0;
  for (const auto& g : groups) {
    policy.check_context(g.context);
    if (g.samples.size() < 2) {
      throw Error(ErrorCode::GroupTooSmall, "group for context " + std::to_string(g.context) + " has " +
                                                std::to_string(g.samples.size()) + " samples");
    }
    n += g.samples.size();
  }
  return n;
}

std::vector<double> rewards_of(const RolloutGroup& g) {
  std::vector<double> r;
  r.reserve(g.samples.size());
  for (const auto& s : g.samples) r.push_back(s.reward);
  return r;
}

int output_index(const RolloutSample& s) { return ToyOutput{s.skill, s.answer}.index(); }

}  // namespace

double grpo_loss(const ToyPolicy& policy, std::span<const RolloutGroup> groups) {
  const std::size_t n = total_samples(policy, groups);
  if (n == 0) return 0.0;
  double loss = 0.0;
  for (const auto& g : groups) {
    const auto adv = group_advantages(rewards_of(g));
    for (std::size_t i = 0; i < g.samples.size(); ++i) {
      loss -= adv[i] * policy.log_prob(g.context, output_index(g.samples[i]));
    }
  }
  return loss / static_cast<double>(n);
}

LossAndGrad grpo_loss_and_grad(const ToyPolicy& policy, std::span<const RolloutGroup> groups) {
  LossAndGrad out;
  out.grad.assign(policy.logits().size(), 0.0);
  const std::size_t n = total_samples(policy, groups);
  if (n == 0) return out;
  const double inv_n = 1.0 / static_cast<double>(n);
  for (const auto& g : groups) {
    const auto adv = group_advantages(rewards_of(g));
    const auto probs = policy.probabilities(g.context);
    double* grow = out.grad.data() + static_cast<std::size_t>(g.context) * ToyPolicy::kOutputs;
    for (std::size_t i = 0; i < g.samples.size(); ++i) {
      if (adv[i] == 0.0) continue;
      const int o = output_index(g.samples[i]);
      out.loss -= adv[i] * policy.log_prob(g.context, o) * inv_n;
      // d(-A log pi_o)/dz_j = -A (1[j=o] - pi_j)
      for (int j = 0; j < ToyPolicy::kOutputs; ++j) grow[j] += adv[i] * probs[j] * inv_n;
      grow[o] -= adv[i] * inv_n;
    }
  }
  return out;
}

double sft_loss(const ToyPolicy& policy, std::span<const SftExample> examples) {
  if (examples.empty()) return 0.0;
  double total = 0.0;
  for (const auto& ex : examples) {
    total -= std::log(policy.skill_prob(ex.context, ex.skill));
    total -= std::log(policy.answer_given_skill(ex.context, ex.skill, ex.answer));
  }
  return total / static_cast<double>(examples.size());
}

LossAndGrad sft_loss_and_grad(const ToyPolicy& policy, std::span<const SftExample> examples) {
  LossAndGrad out;
  out.grad.assign(policy.logits().size(), 0.0);
  if (examples.empty()) return out;
  out.loss = sft_loss(policy, examples);
  // The factored loss telescopes to -log pi(skill, answer | x).
  const double inv_n = 1.0 / static_cast<double>(examples.size());
  for (const auto& ex : examples) {
    const auto probs = policy.probabilities(ex.context);
    double* grow = out.grad.data() + static_cast<std::size_t>(ex.context) * ToyPolicy::kOutputs;
    for (int j = 0; j < ToyPolicy::kOutputs; ++j) grow[j] += probs[j] * inv_n;
    grow[ToyOutput{ex.skill, ex.answer}.index()] -= inv_n;
  }
  return out;
}

}  // namespace skillscope
