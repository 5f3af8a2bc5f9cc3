#include "skillscope/cli/commands.hpp"

#include <fstream>
#include <ostream>

#include "skillscope/analyzers/tool_client.hpp"
#include "skillscope/bench/annotate.hpp"
#include "skillscope/bench/evaluate.hpp"
#include "skillscope/bench/fewshot.hpp"
#include "skillscope/bench/report.hpp"
#include "skillscope/cli/config.hpp"
#include "skillscope/core/error.hpp"
#include "skillscope/io/image_io.hpp"
#include "skillscope/training/trainer.hpp"

namespace skillscope {

namespace {

AppConfig app_config(const std::optional<std::filesystem::path>& path) {
  return path ? load_config(*path) : AppConfig{.perturbations = robustness_suite()};
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  f << text;
  if (!f) throw Error(ErrorCode::IoError, "write failed: " + path.string());
}

void deliver(const std::optional<std::filesystem::path>& path, const std::string& text, std::ostream& out) {
  if (path) {
    write_text(*path, text);
  } else {
    out << text;
  }
}

template <typename F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitError;
}

}  // namespace

int cmd_detect(const DetectArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    AppConfig config = app_config(args.config);
    if (args.skill) config.pipeline.skill_override = skill_from_name(*args.skill);
    const SkillRegistry registry = make_registry(config);
    const Services services = make_services(config);
    const ImageRecord record{args.image.stem().string(), args.image.string(), Label::Real,
                             SkillId::Value::CS, "cli", Split::Test};
    const DetectionOutcome outcome = detect(record, registry, services, config.pipeline);
    deliver(args.out, outcome_to_json(outcome, args.timings).dump(2) + "\n", out);
    return outcome.indeterminate() ? kExitIndeterminate : kExitOk;
  });
}

int cmd_evaluate(const EvaluateArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const AppConfig config = app_config(args.config);
    std::vector<PerturbationSpec> specs;
    for (const auto& p : args.perturb) specs.push_back(parse_perturbation(p));
    if (args.robustness) specs.insert(specs.end(), config.perturbations.begin(), config.perturbations.end());
    const ReportFormat format = report_format_from_string(args.format);
    const int parallelism = args.parallelism.value_or(config.parallelism);
    if (parallelism < 1) throw Error(ErrorCode::ConfigError, "parallelism must be >= 1");

    const SkillRegistry registry = make_registry(config, args.skills);
    const Manifest manifest = load_manifest(args.manifest);
    const Detector detector = pipeline_detector(registry, make_services(config), config.pipeline);

    std::vector<MetricsTable> tables;
    if (specs.empty()) {
      tables.push_back(evaluate(manifest, detector, std::nullopt, registry, parallelism));
    } else {
      for (const auto& s : specs) tables.push_back(evaluate(manifest, detector, s, registry, parallelism));
    }
    for (const auto& t : tables) {
      if (!t.errors.empty()) err << "warning: " << t.label << ": " << t.errors.size() << " record(s) failed\n";
    }
    deliver(args.out, render_report(tables, format), out);
    return kExitOk;
  });
}

int cmd_annotate(const AnnotateArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const AppConfig config = app_config(args.config);
    const SkillRegistry registry = make_registry(config, args.skills);
    const Services services = make_services(config);
    if (!services.reasoner) throw Error(ErrorCode::ReasonerUnavailable, "annotation needs a reasoner");
    const int repeats = args.repeats.value_or(config.annotate_repeats);
    const auto candidates = load_candidates(args.candidates);
    const AnnotationResult result = annotate(candidates, registry, *services.reasoner, *services.templates, repeats);
    save_manifest(Manifest{std::nullopt, result.records}, args.out);
    const std::string report = rejects_report(result.rejects);
    if (args.rejects) {
      write_text(*args.rejects, report);
    } else {
      out << report;
    }
    err << "annotate: " << result.records.size() << " retained, " << result.rejects.size() << " rejected\n";
    return kExitOk;
  });
}

int cmd_train_toy(const TrainToyArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    std::optional<std::filesystem::path> path = args.config;
    if (!path && args.app_config) {
      const AppConfig config = load_config(*args.app_config);
      if (!config.training_config.empty()) path = config.training_config;
    }
    const TrainConfig tc = path ? load_train_config(*path) : train_config_from_json({{"contexts", 3}});
    const TrainResult result = train_toy(tc);
    deliver(args.out, curve_csv(result.curve), out);
    return kExitOk;
  });
}

int cmd_fewshot(const FewShotArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Manifest manifest = load_manifest(args.manifest);
    const FewShotResult result = few_shot_sample(manifest, args.n, args.seed);
    for (const auto& w : result.warnings) err << "warning: " << w << "\n";
    if (args.out) {
      save_manifest(result.manifest, *args.out);
    } else {
      out << manifest_to_jsonl(result.manifest);
    }
    return kExitOk;
  });
}

int cmd_record(const RecordArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const AppConfig config = app_config(args.config);
    if (config.mode != ServiceMode::Record) {
      throw Error(ErrorCode::RecordingDisabled,
                  "recording disabled: config mode is " + std::string(to_string(config.mode)) + ", not record");
    }
    const ToolKind kind = tool_kind_from_string(args.kind);
    const Services services = make_services(config);
    if (!services.tools) throw Error(ErrorCode::ToolUnavailable, "no tool endpoints configured");
    const Pixels image = load_image(args.image);
    const ToolResult result = services.tools->call(image, kind);
    out << tool_response_json(result).dump(2) << "\n";
    return kExitOk;
  });
}

}  // namespace skillscope
