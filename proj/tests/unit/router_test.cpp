#include <random>

#include <gtest/gtest.h>

#include "skillscope/io/image_io.hpp"
#include "skillscope/router/clues.hpp"
#include "skillscope/router/router.hpp"
#include "synth.hpp"
#include "test_util.hpp"

namespace skillscope {
namespace {

std::shared_ptr<const Pixels> shared(Pixels p) { return std::make_shared<const Pixels>(std::move(p)); }

TEST(Clues, ConstantImage) {
  const auto c = extract_clues(Pixels::filled(64, 64, 3, 0.5), nullptr);
  EXPECT_EQ(c.hf_ratio, 0.0);
  EXPECT_EQ(c.residual_energy, 0.0);
  EXPECT_EQ(c.text_likelihood, 0.0);
  EXPECT_DOUBLE_EQ(c.luminance_mean, 0.5);
  EXPECT_NEAR(c.luminance_var, 0.0, 1e-15);
}

TEST(Clues, CheckerboardIsHighFrequency) {
  const auto c = extract_clues(synth::checkerboard(64, 64, 0.0, 1.0), nullptr);
  EXPECT_NEAR(c.hf_ratio, 1.0, 0.02);
  EXPECT_DOUBLE_EQ(c.luminance_mean, 0.5);
  EXPECT_DOUBLE_EQ(c.luminance_var, 0.25);
  EXPECT_NEAR(c.residual_energy, 0.5, 1e-12);
}

TEST(Clues, TextLikelihoodFromReplayedOcr) {
  const Pixels photo = load_image(test::data_dir() / "images" / "photo.png");
  ToolClient replay(ServiceMode::Replay, nullptr,
                    std::make_shared<FixtureStore>(test::data_dir() / "fixtures", false));
  const auto c = extract_clues(photo, &replay, {}, "photo");
  // Two disjoint boxes: 0.2 x 0.25 and 0.25 x 0.2.
  EXPECT_NEAR(c.text_likelihood, 0.2 * 0.25 + 0.25 * 0.2, 1e-12);
  EXPECT_EQ(c.image_id, "photo");
  EXPECT_EQ(c.hf_ratio, extract_clues(photo, nullptr).hf_ratio);
}

TEST(Clues, AnalyzerErrorsAreWrapped) {
  EXPECT_CODE(extract_clues(Pixels::filled(4, 4, 1, 0.0), nullptr), ErrorCode::AnalyzerFailure);
}

TEST(Clues, SummaryIsStable) {
  ClueSet c{0.5, 0.25, 0.125, 0.3, 0.01, "x"};
  EXPECT_EQ(clue_summary(c), clue_summary(c));
  EXPECT_NE(clue_summary(c).find("0.5000"), std::string::npos);
}

TEST(Fallback, Examples) {
  const auto full = SkillRegistry::full();
  ClueSet c;
  c.text_likelihood = 0.2;
  c.hf_ratio = 0.9;
  EXPECT_EQ(fallback_route(c, full).skill, SkillId::Value::OCR);
  EXPECT_EQ(fallback_route(c, full).origin, RouteOrigin::Fallback);
  EXPECT_EQ(fallback_route(ClueSet{}, full).skill, SkillId::Value::CS);
  const SkillId freq_only[] = {SkillId::Value::Freq};
  EXPECT_EQ(fallback_route(ClueSet{}, SkillRegistry::with_skills(freq_only)).skill, SkillId::Value::Freq);
}

TEST(Fallback, PriorityAndFallThrough) {
  const auto full = SkillRegistry::full();
  ClueSet c;
  c.hf_ratio = 0.5;
  c.residual_energy = 0.02;
  EXPECT_EQ(fallback_route(c, full).skill, SkillId::Value::Freq);
  const SkillId no_freq[] = {SkillId::Value::Pixel, SkillId::Value::Light};
  EXPECT_EQ(fallback_route(c, SkillRegistry::with_skills(no_freq)).skill, SkillId::Value::Pixel);
  c.residual_energy = 0.0199;
  EXPECT_EQ(fallback_route(c, SkillRegistry::with_skills(no_freq)).skill, SkillId::Value::Light);
  EXPECT_EQ(fallback_route(c, full, RouterThresholds{0.05, 0.6, 0.01}).skill, SkillId::Value::Pixel);
}

TEST(Fallback, ClosureOverRandomRegistries) {
  std::mt19937_64 gen(99);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<SkillId> skills;
    for (SkillId s : all_skills()) {
      if (u(gen) < 0.3) skills.push_back(s);
    }
    if (skills.empty()) skills.push_back(all_skills()[trial % 12]);
    const auto reg = SkillRegistry::with_skills(skills);
    ClueSet c{u(gen), u(gen) * 0.05, u(gen) * 0.1, 0, 0, ""};
    const auto a = fallback_route(c, reg);
    EXPECT_TRUE(reg.contains(a.skill));
    EXPECT_EQ(a, fallback_route(c, reg));
  }
}

TEST(Fallback, EmptyRegistry) {
  EXPECT_CODE(fallback_route(ClueSet{}, SkillRegistry::with_skills(std::span<const SkillId>{})),
              ErrorCode::EmptyRegistry);
}

class SelectTest : public ::testing::Test {
 protected:
  std::shared_ptr<const Pixels> image = shared(synth::uniform_noise(16, 16, 3, 1));
  ClueSet clues{0.4, 0.1, 0.0, 0.5, 0.08, "img"};
  TemplateStore templates = TemplateStore::builtin();
};

TEST_F(SelectTest, PassesThroughEnabledSkill) {
  auto backend = test::ScriptedReasoner::replies({"I think text.\n<skill>OCR</skill>"});
  const auto choice = select_skill(image, clues, SkillRegistry::full(), *test::live_client(backend), templates);
  EXPECT_EQ(choice.skill, SkillId::Value::OCR);
  EXPECT_EQ(choice.origin, RouteOrigin::Reasoner);
  EXPECT_NE(choice.rationale.find("stage1/select"), std::string::npos);
  ASSERT_EQ(backend->requests.size(), 1u);
  const auto& msg = backend->requests[0].messages.at(0);
  EXPECT_EQ(msg.images.size(), 1u);
  for (SkillId s : all_skills()) {
    EXPECT_NE(msg.text.find("- " + std::string(s.name()) + ": " + std::string(s.definition())), std::string::npos);
  }
  EXPECT_NE(msg.text.find(clue_summary(clues)), std::string::npos);
}

TEST_F(SelectTest, UnknownSkillRetriesOnceThenFails) {
  auto backend = test::ScriptedReasoner::replies({"<skill>Texture</skill>"});
  EXPECT_CODE(select_skill(image, clues, SkillRegistry::full(), *test::live_client(backend), templates),
              ErrorCode::SkillNotInLibrary);
  ASSERT_EQ(backend->requests.size(), 2u);
  const auto& retry = backend->requests[1].messages;
  ASSERT_EQ(retry.size(), 3u);
  EXPECT_EQ(retry[1].role, "assistant");
  EXPECT_NE(retry[2].text.find("Choose exactly one of"), std::string::npos);
}

TEST_F(SelectTest, SubsetRestriction) {
  const SkillId subset[] = {SkillId::Value::Freq, SkillId::Value::Pixel};
  const auto reg = SkillRegistry::with_skills(subset);
  auto backend = test::ScriptedReasoner::replies({"<skill>Light</skill>"});
  EXPECT_CODE(select_skill(image, clues, reg, *test::live_client(backend), templates), ErrorCode::SkillNotInLibrary);
  EXPECT_EQ(backend->requests[0].messages[0].text.find("- Light:"), std::string::npos);
}

TEST_F(SelectTest, RetryRecovers) {
  auto backend = test::ScriptedReasoner::replies({"no tag here", "<skill> Pixel </skill>"});
  const auto sel =
      select_skill_with_transcript(image, clues, SkillRegistry::full(), *test::live_client(backend), templates);
  EXPECT_EQ(sel.choice.skill, SkillId::Value::Pixel);
  EXPECT_EQ(sel.transcript.size(), 4u);
  EXPECT_EQ(sel.transcript.back().role, "assistant");
}

TEST_F(SelectTest, ReplayIsDeterministic) {
  const auto dir = test::temp_dir("router_replay");
  auto backend = test::ScriptedReasoner::replies({"<skill>OCR</skill>"});
  ReasonerClient recorder({}, ServiceMode::Record, backend, std::make_shared<FixtureStore>(dir, true));
  const auto recorded = select_skill(image, clues, SkillRegistry::full(), recorder, templates);
  ReasonerClient replay({}, ServiceMode::Replay, nullptr, std::make_shared<FixtureStore>(dir, false));
  const auto a = select_skill(image, clues, SkillRegistry::full(), replay, templates);
  const auto b = select_skill(image, clues, SkillRegistry::full(), replay, templates);
  EXPECT_EQ(a, recorded);
  EXPECT_EQ(a, b);
  ClueSet other = clues;
  other.hf_ratio = 0.41;
  EXPECT_CODE(select_skill(image, other, SkillRegistry::full(), replay, templates), ErrorCode::FixtureMissing);
}

}  // namespace
}  // namespace skillscope
