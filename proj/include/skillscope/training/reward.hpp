#pragma once

#include <string>
#include <string_view>

#include "skillscope/core/skill.hpp"
#include "skillscope/core/types.hpp"

namespace skillscope {

struct RolloutSample {
  int context = 0;
  SkillId skill = SkillId::Value::Light;
  int answer = 0;
  std::string raw_text;
  double reward = 0.0;
};

/// 1 when the raw text is a format-valid trajectory, else 0.
int format_reward(std::string_view raw);

/// Weighted sum of three {0,1} indicators: answer match, skill match and
/// format validity.
double reward(const RolloutSample& sample, int gt_answer, SkillId gt_skill, const RewardWeights& w = {});

}  // namespace skillscope
