#include "skillscope/training/trainer.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <set>

#include "skillscope/core/error.hpp"
#include "skillscope/core/trajectory.hpp"
#include "skillscope/training/grpo.hpp"
#include "skillscope/training/reward.hpp"

namespace skillscope {

namespace {

[[noreturn]] void bad_config(const std::string& msg) { throw Error(ErrorCode::ConfigError, "train config: " + msg); }

template <typename T>
T get_or(const nlohmann::json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    bad_config(std::string("field '") + key + "': " + e.what());
  }
}

}  // namespace

TrainConfig train_config_from_json(const nlohmann::json& j) {
  if (!j.is_object()) bad_config("expected an object");
  TrainConfig c;
  if (!j.contains("contexts")) bad_config("missing 'contexts'");
  const auto& ctx = j.at("contexts");
  if (ctx.is_number_integer()) {
    const int n = ctx.get<int>();
    if (n < 1) bad_config("contexts must be >= 1");
    for (int i = 0; i < n; ++i) {
      c.contexts.push_back({"ctx" + std::to_string(i), SkillId::from_ordinal((5 * i) % SkillId::kCount), i % 2});
    }
  } else if (ctx.is_array()) {
    std::set<std::string> seen;
    for (const auto& e : ctx) {
      ToyContext tc;
      try {
        tc.id = e.at("id").get<std::string>();
        tc.skill = skill_from_name(e.at("skill").get<std::string>());
        tc.answer = e.at("answer").get<int>();
      } catch (const nlohmann::json::exception& ex) {
        bad_config(std::string("context entry: ") + ex.what());
      } catch (const Error& ex) {
        bad_config(ex.detail());
      }
      if (tc.answer != 0 && tc.answer != 1) bad_config("context answer must be 0 or 1");
      if (!seen.insert(tc.id).second) bad_config("duplicate context id " + tc.id);
      c.contexts.push_back(tc);
    }
    if (c.contexts.empty()) bad_config("contexts list is empty");
  } else {
    bad_config("contexts must be an integer or a list");
  }
  c.steps = get_or(j, "steps", c.steps);
  c.group_size = get_or(j, "group_size", c.group_size);
  c.learning_rate = get_or(j, "learning_rate", c.learning_rate);
  c.seed = get_or(j, "seed", c.seed);
  c.generator = get_or(j, "generator", c.generator);
  if (j.contains("weights")) {
    const auto& w = j.at("weights");
    c.weights.answer = get_or(w, "answer", c.weights.answer);
    c.weights.skill = get_or(w, "skill", c.weights.skill);
    c.weights.format = get_or(w, "format", c.weights.format);
  }
  if (c.steps < 1) bad_config("steps must be >= 1");
  if (c.group_size < 2) bad_config("group_size must be >= 2");
  if (!std::isfinite(c.learning_rate) || c.learning_rate < 0) bad_config("learning_rate must be finite and >= 0");
  if (c.generator != "mt19937_64") bad_config("unsupported generator '" + c.generator + "'");
  return c;
}

TrainConfig load_train_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ConfigError, path.string() + ": " + e.what());
  }
  return train_config_from_json(j);
}

double uniform01(std::uint64_t draw) { return static_cast<double>(draw >> 11) * 0x1.0p-53; }

TrainResult train_toy(const TrainConfig& config) {
  const int n_ctx = static_cast<int>(config.contexts.size());
  ToyPolicy policy(n_ctx);
  std::mt19937_64 gen(config.seed);
  std::vector<CurvePoint> curve;
  curve.reserve(static_cast<std::size_t>(config.steps));

  for (int step = 1; step <= config.steps; ++step) {
    std::vector<RolloutGroup> groups;
    double reward_sum = 0.0;
    int count = 0;
    for (int c = 0; c < n_ctx; ++c) {
      const auto& truth = config.contexts[static_cast<std::size_t>(c)];
      const auto probs = policy.probabilities(c);
      RolloutGroup g{c, {}};
      for (int k = 0; k < config.group_size; ++k) {
        const double u = uniform01(gen());
        int pick = ToyPolicy::kOutputs - 1;
        double acc = 0.0;
        for (int o = 0; o < ToyPolicy::kOutputs; ++o) {
          acc += probs[o];
          if (u < acc) {
            pick = o;
            break;
          }
        }
        const ToyOutput out = ToyOutput::from_index(pick);
        RolloutSample s{c, out.skill, out.answer, render_trajectory(out.skill, truth.id, out.answer), 0.0};
        s.reward = reward(s, truth.answer, truth.skill, config.weights);
        reward_sum += s.reward;
        ++count;
        g.samples.push_back(std::move(s));
      }
      groups.push_back(std::move(g));
    }
    const LossAndGrad lg = grpo_loss_and_grad(policy, groups);
    auto& logits = policy.logits();
    for (std::size_t i = 0; i < logits.size(); ++i) logits[i] -= config.learning_rate * lg.grad[i];
    curve.push_back({step, reward_sum / count, lg.loss});
  }
  return {std::move(policy), std::move(curve)};
}

namespace {

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s(buf);
  if (s == "-0.000000") s = "0.000000";
  return s;
}

}  // namespace

std::string curve_csv(const std::vector<CurvePoint>& curve) {
  std::string out = "step,mean_reward,loss\n";
  for (const auto& p : curve) {
    out += std::to_string(p.step) + "," + fixed6(p.mean_reward) + "," + fixed6(p.loss) + "\n";
  }
  return out;
}

}  // namespace skillscope
