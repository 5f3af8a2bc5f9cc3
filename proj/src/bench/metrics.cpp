#include "skillscope/bench/metrics.hpp"

#include <map>

#include "skillscope/core/error.hpp"
#include "skillscope/io/digest.hpp"
#include "skillscope/reasoner/pipeline.hpp"

namespace skillscope {

PredictionRecord prediction_from_outcome(const DetectionOutcome& outcome) {
  PredictionRecord p;
  p.id = outcome.record_id;
  p.verdict = outcome.verdict;
  p.selected_skill = outcome.skill_choice.skill;
  p.indeterminate = outcome.indeterminate();
  p.trajectory_digest = sha256_hex(outcome.trajectory.raw);
  return p;
}

void Confusion::add(Label truth, const std::optional<Verdict>& verdict) {
  const bool predicted_fake = verdict && verdict->value == Label::Fake;
  const bool fake = truth == Label::Fake;
  if (fake && predicted_fake) ++tp;
  if (!fake && predicted_fake) ++fp;
  if (fake && !predicted_fake) ++fn;
  if (!fake && !predicted_fake) ++tn;
  if (verdict && verdict->value == truth) ++correct;
  ++total;
}

double f1(int tp, int fp, int fn) {
  if (tp == 0) return 0.0;
  const double p = static_cast<double>(tp) / (tp + fp);
  const double r = static_cast<double>(tp) / (tp + fn);
  return 2.0 * p * r / (p + r);
}

double accuracy(std::span<const PredictionRecord> predictions, std::span<const ImageRecord> manifest) {
  std::map<std::string, Label, std::less<>> truth;
  for (const auto& r : manifest) truth.emplace(r.id, r.label);
  Confusion c;
  for (const auto& p : predictions) {
    auto it = truth.find(p.id);
    if (it == truth.end()) throw Error(ErrorCode::ParseError, "prediction for unknown id '" + p.id + "'");
    c.add(it->second, p.indeterminate ? std::nullopt : p.verdict);
  }
  return c.total == 0 ? 0.0 : static_cast<double>(c.correct) / c.total;
}

MetricsTable build_table(std::span<const ImageRecord> records,
                         std::span<const std::optional<PredictionRecord>> predictions,
                         std::vector<RecordError> errors, const SkillRegistry& registry, std::string label) {
  if (records.size() != predictions.size()) {
    throw Error(ErrorCode::ConfigError, "prediction slots do not match records");
  }
  std::map<int, Confusion> per_skill;
  std::map<int, int> routed;
  Confusion all;
  int routed_all = 0;
  MetricsTable t;
  t.label = std::move(label);
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    if (!registry.contains(r.skill)) {
      ++t.skipped;
      continue;
    }
    const auto& p = predictions[i];
    const std::optional<Verdict> v = p && !p->indeterminate ? p->verdict : std::nullopt;
    per_skill[r.skill.ordinal()].add(r.label, v);
    all.add(r.label, v);
    if (p && p->selected_skill == r.skill) {
      ++routed[r.skill.ordinal()];
      ++routed_all;
    }
  }
  if (all.total == 0) throw Error(ErrorCode::EmptyManifest, "no records with an enabled skill to evaluate");
  for (SkillId s : registry.enabled()) {
    MetricsRow row;
    row.skill = s;
    if (auto it = per_skill.find(s.ordinal()); it != per_skill.end()) {
      const Confusion& c = it->second;
      row.n = c.total;
      row.accuracy = static_cast<double>(c.correct) / c.total;
      row.f1 = f1(c.tp, c.fp, c.fn);
      row.routing_accuracy = static_cast<double>(routed[s.ordinal()]) / c.total;
    }
    t.rows.push_back(row);
  }
  t.overall.n = all.total;
  t.overall.accuracy = static_cast<double>(all.correct) / all.total;
  t.overall.f1 = f1(all.tp, all.fp, all.fn);
  t.overall.routing_accuracy = static_cast<double>(routed_all) / all.total;
  t.errors = std::move(errors);
  return t;
}

}  // namespace skillscope
