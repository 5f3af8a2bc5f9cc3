#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "skillscope/core/registry.hpp"
#include "skillscope/core/types.hpp"

namespace skillscope {

struct DetectionOutcome;

struct PredictionRecord {
  std::string id;
  std::optional<Verdict> verdict;  // empty when indeterminate
  SkillId selected_skill = SkillId::Value::Light;
  bool indeterminate = false;
  std::string trajectory_digest;
};

/// sha256 of the raw trajectory text.
PredictionRecord prediction_from_outcome(const DetectionOutcome& outcome);

/// Fake is the positive class. An indeterminate prediction is a negative
/// prediction, so it lands in fn for fake records and tn for real ones,
/// and is always counted incorrect.
struct Confusion {
  int tp = 0;
  int fp = 0;
  int fn = 0;
  int tn = 0;
  int correct = 0;
  int total = 0;

  void add(Label truth, const std::optional<Verdict>& verdict);
};

double f1(int tp, int fp, int fn);

/// correct / total over predictions whose id appears in the manifest.
/// Throws ParseError for a prediction id the manifest does not contain.
double accuracy(std::span<const PredictionRecord> predictions, std::span<const ImageRecord> manifest);

struct MetricsRow {
  SkillId skill = SkillId::Value::Light;
  int n = 0;
  double accuracy = 0.0;
  double f1 = 0.0;
  double routing_accuracy = 0.0;
};

struct OverallRow {
  int n = 0;
  double accuracy = 0.0;
  double f1 = 0.0;
  double routing_accuracy = 0.0;
};

struct RecordError {
  std::string id;
  std::string message;
};

struct MetricsTable {
  std::string label;  // "clean" or a perturbation label
  std::vector<MetricsRow> rows;  // one per enabled skill, ordinal order
  OverallRow overall;
  std::vector<RecordError> errors;
  int skipped = 0;  // records whose skill is not enabled
};

/// One slot per record (same order). A record with an empty slot failed
/// and counts as an incorrect negative prediction with a routing miss; its
/// message must be in `errors`.
MetricsTable build_table(std::span<const ImageRecord> records,
                         std::span<const std::optional<PredictionRecord>> predictions,
                         std::vector<RecordError> errors, const SkillRegistry& registry, std::string label);

}  // namespace skillscope
