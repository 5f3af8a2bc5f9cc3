#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace skillscope {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitIndeterminate = 2;

struct DetectArgs {
  std::filesystem::path image;
  std::optional<std::filesystem::path> config;
  std::optional<std::string> skill;
  std::optional<std::filesystem::path> out;
  bool timings = false;
};

struct EvaluateArgs {
  std::filesystem::path manifest;
  std::optional<std::filesystem::path> config;
  std::vector<std::string> perturb;
  bool robustness = false;
  std::optional<std::string> skills;
  std::optional<std::filesystem::path> out;
  std::string format = "machine";
  std::optional<int> parallelism;
};

struct AnnotateArgs {
  std::filesystem::path candidates;
  std::filesystem::path out;
  std::optional<std::filesystem::path> config;
  std::optional<std::filesystem::path> rejects;
  std::optional<std::string> skills;
  std::optional<int> repeats;
};

struct TrainToyArgs {
  std::optional<std::filesystem::path> config;  // training config file
  std::optional<std::filesystem::path> app_config;
  std::optional<std::filesystem::path> out;
};

struct FewShotArgs {
  std::filesystem::path manifest;
  int n = 1;
  std::uint64_t seed = 0;
  std::optional<std::filesystem::path> out;
};

struct RecordArgs {
  std::string kind;  // ocr | lighting | shadow | region
  std::filesystem::path image;
  std::optional<std::filesystem::path> config;
};

/// Each command writes its document to `out` (or the named file) and
/// diagnostics to `err`, and returns an exit code. No command throws.
int cmd_detect(const DetectArgs& args, std::ostream& out, std::ostream& err);
int cmd_evaluate(const EvaluateArgs& args, std::ostream& out, std::ostream& err);
int cmd_annotate(const AnnotateArgs& args, std::ostream& out, std::ostream& err);
int cmd_train_toy(const TrainToyArgs& args, std::ostream& out, std::ostream& err);
int cmd_fewshot(const FewShotArgs& args, std::ostream& out, std::ostream& err);
int cmd_record(const RecordArgs& args, std::ostream& out, std::ostream& err);

}  // namespace skillscope
