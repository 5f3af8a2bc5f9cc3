#include "skillscope/training/reward.hpp"

#include "skillscope/core/trajectory.hpp"

namespace skillscope {

int format_reward(std::string_view raw) { return parse_trajectory(raw).format_valid ? 1 : 0; }

double reward(const RolloutSample& sample, int gt_answer, SkillId gt_skill, const RewardWeights& w) {
  const double ans = sample.answer == gt_answer ? 1.0 : 0.0;
  const double skill = sample.skill == gt_skill ? 1.0 : 0.0;
  return w.answer * ans + w.skill * skill + w.format * format_reward(sample.raw_text);
}

}  // namespace skillscope
