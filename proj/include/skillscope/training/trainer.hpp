#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "skillscope/core/types.hpp"
#include "skillscope/training/toy_policy.hpp"

namespace skillscope {

struct ToyContext {
  std::string id;
  SkillId skill = SkillId::Value::Light;
  int answer = 0;
};

struct TrainConfig {
  std::vector<ToyContext> contexts;
  int steps = 2000;
  int group_size = 8;
  double learning_rate = 0.1;
  std::uint64_t seed = 42;
  RewardWeights weights;
  std::string generator = "mt19937_64";
};

/// Schema: {"contexts": N | [{"id", "skill", "answer"}...], "steps",
/// "group_size", "learning_rate", "seed", "weights": {"answer", "skill",
/// "format"}, "generator"}. An integer N generates contexts ctx0..ctx{N-1}
/// with skill ordinal (5*i) mod 12 and answer i mod 2. Throws ConfigError.
TrainConfig train_config_from_json(const nlohmann::json& j);
TrainConfig load_train_config(const std::filesystem::path& path);

struct CurvePoint {
  int step = 0;
  double mean_reward = 0.0;
  double loss = 0.0;
};

struct TrainResult {
  ToyPolicy policy;
  std::vector<CurvePoint> curve;
};

/// Uniform double in [0,1) from the top 53 bits of one generator draw.
double uniform01(std::uint64_t draw);

/// Plain gradient descent on the GRPO loss. Each step samples group_size
/// outputs per context (inverse-CDF on one uniform01 draw each, contexts in
/// order), scores them, records mean reward and loss, then updates.
TrainResult train_toy(const TrainConfig& config);

/// "step,mean_reward,loss" header plus one row per step, 6 decimals.
std::string curve_csv(const std::vector<CurvePoint>& curve);

}  // namespace skillscope
