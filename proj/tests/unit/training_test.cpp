#include <cmath>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "skillscope/core/trajectory.hpp"
#include "skillscope/training/grpo.hpp"
#include "skillscope/training/reward.hpp"
#include "skillscope/training/toy_policy.hpp"
#include "skillscope/training/trainer.hpp"
#include "test_util.hpp"

namespace skillscope {
namespace {

std::vector<double> advantages(std::vector<double> r) { return group_advantages(r); }

TEST(Reward, FormatExamples) {
  EXPECT_EQ(format_reward("<skill>Freq</skill><think>a</think><answer>1</answer>"), 1);
  EXPECT_EQ(format_reward("<answer>1</answer>"), 0);
  EXPECT_EQ(format_reward(""), 0);
}

TEST(Reward, WeightedIndicators) {
  const std::string valid = render_trajectory(SkillId::Value::Freq, "a", 1);
  RolloutSample s{0, SkillId::Value::Freq, 1, valid, 0.0};
  EXPECT_EQ(reward(s, 1, SkillId::Value::Freq), 3.0);
  EXPECT_EQ(reward(s, 1, SkillId::Value::Pixel), 2.0);
  RolloutSample bad{0, SkillId::Value::Light, 0, "garbage", 0.0};
  EXPECT_EQ(reward(bad, 1, SkillId::Value::Freq), 0.0);
  EXPECT_EQ(reward(s, 1, SkillId::Value::Freq, RewardWeights{0.5, 2.0, 0.25}), 2.75);
}

TEST(Advantages, Examples) {
  const auto a = advantages({1, 0, 1, 0});
  for (int i = 0; i < 4; ++i) EXPECT_DOUBLE_EQ(a[i], i % 2 == 0 ? 1.0 : -1.0);
  for (double v : advantages({2, 2, 2, 2})) EXPECT_EQ(v, 0.0);
  const auto b = advantages({3, 0, 0, 0});
  EXPECT_NEAR(b[0], 1.7321, 1e-4);
  for (int i = 1; i < 4; ++i) EXPECT_NEAR(b[i], -0.5774, 1e-4);
  const std::vector<double> one = {1.0};
  EXPECT_CODE(group_advantages(one), ErrorCode::GroupTooSmall);
  const auto st = group_stats(std::vector<double>{3, 0, 0, 0});
  EXPECT_DOUBLE_EQ(st.mean, 0.75);
  EXPECT_DOUBLE_EQ(st.std, std::sqrt(1.6875));
}

TEST(Advantages, CenteringAndAffineInvariance) {
  std::mt19937_64 gen(2024);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  std::uniform_int_distribution<int> size(2, 16);
  for (int trial = 0; trial < 10000; ++trial) {
    std::vector<double> r(static_cast<std::size_t>(size(gen)));
    for (double& v : r) v = u(gen);
    const auto a = group_advantages(r);
    if (group_stats(r).std < kAdvantageEpsilon) continue;
    EXPECT_NEAR(std::accumulate(a.begin(), a.end(), 0.0), 0.0, 1e-9 * r.size());
    const double shift = u(gen);
    const double scale = std::abs(u(gen)) + 0.1;
    std::vector<double> r2 = r;
    for (double& v : r2) v = shift + scale * v;
    const auto a2 = group_advantages(r2);
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a[i], a2[i], 1e-9);
  }
}

TEST(Policy, NormalizationAndFactoring) {
  std::mt19937_64 gen(1);
  std::normal_distribution<double> n(0.0, 3.0);
  std::vector<double> logits(2 * ToyPolicy::kOutputs);
  for (double& v : logits) v = n(gen);
  const ToyPolicy p(2, logits);
  for (int c = 0; c < 2; ++c) {
    const auto probs = p.probabilities(c);
    EXPECT_NEAR(std::accumulate(probs.begin(), probs.end(), 0.0), 1.0, 1e-12);
    for (SkillId s : all_skills()) {
      const double joint = probs[ToyOutput{s, 1}.index()];
      EXPECT_NEAR(p.skill_prob(c, s) * p.answer_given_skill(c, s, 1), joint, 1e-15);
      EXPECT_NEAR(std::log(joint), p.log_prob(c, ToyOutput{s, 1}.index()), 1e-12);
    }
  }
  EXPECT_CODE(p.probabilities(2), ErrorCode::UnknownContext);
  EXPECT_CODE(p.probabilities(-1), ErrorCode::UnknownContext);
  for (int i = 0; i < ToyPolicy::kOutputs; ++i) EXPECT_EQ(ToyOutput::from_index(i).index(), i);
  // Extreme logits stay finite.
  std::vector<double> big(ToyPolicy::kOutputs, 0.0);
  big[3] = 1000.0;
  EXPECT_NEAR(ToyPolicy(1, big).probabilities(0)[3], 1.0, 1e-12);
}

RolloutSample sample(int ctx, int output, double r) {
  const auto o = ToyOutput::from_index(output);
  return {ctx, o.skill, o.answer, "", r};
}

TEST(Grpo, EqualRewardsGiveZero) {
  const ToyPolicy p(1);
  const std::vector<RolloutGroup> groups = {{0, {sample(0, 1, 2.0), sample(0, 5, 2.0), sample(0, 7, 2.0)}}};
  const auto lg = grpo_loss_and_grad(p, groups);
  EXPECT_EQ(lg.loss, 0.0);
  for (double g : lg.grad) EXPECT_EQ(g, 0.0);
}

TEST(Grpo, TwoSampleHandComputation) {
  // Uniform over two outputs: restrict the row to two live logits.
  std::vector<double> logits(ToyPolicy::kOutputs, -1e9);
  logits[0] = logits[1] = 0.0;
  const ToyPolicy p(1, logits);
  const std::vector<RolloutGroup> groups = {{0, {sample(0, 0, 1.0), sample(0, 1, 0.0)}}};
  const double expected = -(1.0 * std::log(0.5) + (-1.0) * std::log(0.5)) / 2.0;
  EXPECT_NEAR(grpo_loss(p, groups), expected, 1e-15);
  EXPECT_NEAR(expected, 0.0, 1e-15);
}

template <typename LossFn>
void expect_fd_gradient(const ToyPolicy& p, const std::vector<double>& grad, LossFn loss) {
  const double h = 1e-5;
  for (std::size_t i = 0; i < p.logits().size(); ++i) {
    ToyPolicy plus = p;
    ToyPolicy minus = p;
    plus.logits()[i] += h;
    minus.logits()[i] -= h;
    const double fd = (loss(plus) - loss(minus)) / (2 * h);
    EXPECT_NEAR(grad[i], fd, 1e-4 * std::max(1.0, std::abs(fd))) << "coordinate " << i;
  }
}

ToyPolicy random_policy(std::mt19937_64& gen, int contexts) {
  std::normal_distribution<double> n(0.0, 1.0);
  std::vector<double> logits(static_cast<std::size_t>(contexts) * ToyPolicy::kOutputs);
  for (double& v : logits) v = n(gen);
  return ToyPolicy(contexts, logits);
}

std::vector<RolloutGroup> random_groups(std::mt19937_64& gen, int contexts) {
  std::uniform_int_distribution<int> out(0, ToyPolicy::kOutputs - 1);
  std::uniform_int_distribution<int> rew(0, 3);
  std::uniform_int_distribution<int> size(2, 6);
  std::vector<RolloutGroup> groups;
  for (int c = 0; c < contexts; ++c) {
    RolloutGroup g{c, {}};
    const int n = size(gen);
    for (int i = 0; i < n; ++i) g.samples.push_back(sample(c, out(gen), rew(gen)));
    groups.push_back(g);
  }
  return groups;
}

TEST(Grpo, FiniteDifferenceSeed13) {
  std::mt19937_64 gen(13);
  const ToyPolicy p = random_policy(gen, 2);
  const auto groups = random_groups(gen, 2);
  expect_fd_gradient(p, grpo_loss_and_grad(p, groups).grad, [&](const ToyPolicy& q) { return grpo_loss(q, groups); });
}

TEST(Grpo, FiniteDifferenceRandomDraws) {
  std::mt19937_64 gen(77);
  for (int draw = 0; draw < 50; ++draw) {
    const ToyPolicy p = random_policy(gen, 1 + draw % 3);
    const auto groups = random_groups(gen, p.contexts());
    const auto lg = grpo_loss_and_grad(p, groups);
    EXPECT_NEAR(lg.loss, grpo_loss(p, groups), 1e-12);
    expect_fd_gradient(p, lg.grad, [&](const ToyPolicy& q) { return grpo_loss(q, groups); });
  }
}

TEST(Grpo, Errors) {
  const ToyPolicy p(1);
  const std::vector<RolloutGroup> small = {{0, {sample(0, 0, 1.0)}}};
  EXPECT_CODE(grpo_loss_and_grad(p, small), ErrorCode::GroupTooSmall);
  const std::vector<RolloutGroup> stray = {{4, {sample(4, 0, 1.0), sample(4, 1, 0.0)}}};
  EXPECT_CODE(grpo_loss_and_grad(p, stray), ErrorCode::UnknownContext);
}

TEST(Sft, Examples) {
  const std::vector<SftExample> ex = {{0, SkillId::Value::OCR, 1}};
  EXPECT_NEAR(sft_loss(ToyPolicy(1), ex), std::log(12.0) + std::log(2.0), 1e-12);
  EXPECT_NEAR(sft_loss(ToyPolicy(1), ex), 3.1781, 1e-4);

  std::vector<double> sure(ToyPolicy::kOutputs, -1e9);
  sure[ToyOutput{SkillId::Value::OCR, 1}.index()] = 0.0;
  EXPECT_NEAR(sft_loss(ToyPolicy(1, sure), ex), 0.0, 1e-12);

  // Two equally likely outputs: skill prob 0.5, answer prob 0.5.
  std::vector<double> half(ToyPolicy::kOutputs, -1e9);
  half[ToyOutput{SkillId::Value::OCR, 1}.index()] = 0.0;
  half[ToyOutput{SkillId::Value::Freq, 0}.index()] = std::log(2.0);
  half[ToyOutput{SkillId::Value::OCR, 0}.index()] = 0.0;
  EXPECT_NEAR(sft_loss(ToyPolicy(1, half), ex), 2 * std::log(2.0), 1e-12);
}

TEST(Sft, GradientAndMonotoneDescent) {
  std::mt19937_64 gen(5);
  ToyPolicy p = random_policy(gen, 3);
  const std::vector<SftExample> batch = {
      {0, SkillId::Value::Light, 0}, {1, SkillId::Value::Trans, 1}, {2, SkillId::Value::CS, 1}, {0, SkillId::Value::Freq, 1}};
  expect_fd_gradient(p, sft_loss_and_grad(p, batch).grad, [&](const ToyPolicy& q) { return sft_loss(q, batch); });
  double prev = sft_loss(p, batch);
  for (int step = 0; step < 100; ++step) {
    const auto lg = sft_loss_and_grad(p, batch);
    for (std::size_t i = 0; i < lg.grad.size(); ++i) p.logits()[i] -= 1e-3 * lg.grad[i];
    const double now = sft_loss(p, batch);
    EXPECT_LE(now, prev);
    prev = now;
    for (int c = 0; c < 3; ++c) {
      const auto probs = p.probabilities(c);
      EXPECT_NEAR(std::accumulate(probs.begin(), probs.end(), 0.0), 1.0, 1e-12);
    }
  }
}

TrainConfig seed42() { return load_train_config(test::data_dir() / "train_seed42.json"); }

// Straight-line re-statement of the sampling and update contract.
std::vector<double> reference_rewards(const TrainConfig& cfg) {
  const int n = static_cast<int>(cfg.contexts.size());
  const int k = ToyPolicy::kOutputs;
  std::vector<std::vector<double>> theta(static_cast<std::size_t>(n), std::vector<double>(k, 0.0));
  std::mt19937_64 gen(cfg.seed);
  std::vector<double> means;
  for (int step = 0; step < cfg.steps; ++step) {
    std::vector<std::vector<double>> grad(static_cast<std::size_t>(n), std::vector<double>(k, 0.0));
    std::vector<std::vector<double>> probs(static_cast<std::size_t>(n));
    std::vector<std::vector<std::pair<int, double>>> picks(static_cast<std::size_t>(n));
    double total = 0.0;
    for (int c = 0; c < n; ++c) {
      const double mx = *std::max_element(theta[c].begin(), theta[c].end());
      double z = 0.0;
      for (double t : theta[c]) z += std::exp(t - mx);
      for (double t : theta[c]) probs[c].push_back(std::exp(t - mx) / z);
      for (int g = 0; g < cfg.group_size; ++g) {
        const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
        int o = k - 1;
        double acc = 0.0;
        for (int j = 0; j < k; ++j) {
          acc += probs[c][j];
          if (u < acc) {
            o = j;
            break;
          }
        }
        const double r = cfg.weights.answer * (o % 2 == cfg.contexts[c].answer) +
                         cfg.weights.skill * (o / 2 == cfg.contexts[c].skill.ordinal()) + cfg.weights.format;
        picks[c].push_back({o, r});
        total += r;
      }
    }
    const double count = static_cast<double>(n) * cfg.group_size;
    means.push_back(total / count);
    for (int c = 0; c < n; ++c) {
      double mu = 0.0;
      for (auto [o, r] : picks[c]) mu += r;
      mu /= cfg.group_size;
      double var = 0.0;
      for (auto [o, r] : picks[c]) var += (r - mu) * (r - mu);
      const double sigma = std::sqrt(var / cfg.group_size);
      for (auto [o, r] : picks[c]) {
        const double a = sigma < kAdvantageEpsilon ? 0.0 : (r - mu) / sigma;
        for (int j = 0; j < k; ++j) grad[c][j] -= a * ((j == o) - probs[c][j]) / count;
      }
    }
    for (int c = 0; c < n; ++c) {
      for (int j = 0; j < k; ++j) theta[c][j] -= cfg.learning_rate * grad[c][j];
    }
  }
  return means;
}

TEST(Trainer, Seed42ReachesNearMaxReward) {
  const TrainConfig cfg = seed42();
  ASSERT_EQ(cfg.contexts.size(), 3u);
  ASSERT_EQ(cfg.steps, 2000);
  const auto result = train_toy(cfg);
  ASSERT_EQ(result.curve.size(), 2000u);
  EXPECT_GE(result.curve.back().mean_reward, 2.7);
  const auto ref = reference_rewards(cfg);
  for (std::size_t i = 0; i < ref.size(); ++i) ASSERT_NEAR(result.curve[i].mean_reward, ref[i], 1e-12) << "step " << i + 1;
}

TEST(Trainer, Deterministic) {
  TrainConfig cfg = seed42();
  cfg.steps = 300;
  EXPECT_EQ(curve_csv(train_toy(cfg).curve), curve_csv(train_toy(cfg).curve));
  const auto csv = curve_csv(train_toy(cfg).curve);
  EXPECT_EQ(csv.rfind("step,mean_reward,loss\n1,", 0), 0u);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 301);
}

TEST(Trainer, ZeroLearningRateKeepsLogits) {
  TrainConfig cfg = seed42();
  cfg.learning_rate = 0.0;
  cfg.steps = 50;
  EXPECT_EQ(train_toy(cfg).policy, ToyPolicy(3));
}

TEST(Trainer, ConfigParsing) {
  const auto cfg = train_config_from_json(nlohmann::json{{"contexts", 3}});
  ASSERT_EQ(cfg.contexts.size(), 3u);
  EXPECT_EQ(cfg.contexts[1].id, "ctx1");
  EXPECT_EQ(cfg.contexts[1].skill.ordinal(), 5);
  EXPECT_EQ(cfg.contexts[2].skill.ordinal(), 10);
  EXPECT_EQ(cfg.contexts[1].answer, 1);
  const auto explicit_cfg = train_config_from_json(nlohmann::json::parse(
      R"({"contexts":[{"id":"a","skill":"Freq","answer":1}],"steps":5,"weights":{"format":0.5}})"));
  EXPECT_EQ(explicit_cfg.contexts[0].skill, SkillId::Value::Freq);
  EXPECT_EQ(explicit_cfg.weights.format, 0.5);
  EXPECT_EQ(explicit_cfg.weights.answer, 1.0);

  for (const char* bad : {R"({"contexts":0})", R"({"contexts":2,"steps":0})", R"({"contexts":2,"group_size":1})",
                          R"({"contexts":2,"learning_rate":-0.1})", R"({"contexts":2,"generator":"pcg64"})",
                          R"({"contexts":[{"id":"a","skill":"Freq","answer":2}]})",
                          R"({"contexts":[{"id":"a","skill":"Freq","answer":1},{"id":"a","skill":"CS","answer":0}]})",
                          R"({"steps":3})"}) {
    EXPECT_CODE(train_config_from_json(nlohmann::json::parse(bad)), ErrorCode::ConfigError) << bad;
  }
}

}  // namespace
}  // namespace skillscope
