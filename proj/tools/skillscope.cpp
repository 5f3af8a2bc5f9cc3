#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <spdlog/spdlog.h>

#include "skillscope/cli/commands.hpp"

namespace {

template <typename T>
void opt_path(CLI::App* app, const std::string& name, std::optional<T>& target, const std::string& help) {
  app->add_option_function<std::string>(name, [&target](const std::string& v) { target = T(v); }, help);
}

void opt_path(CLI::App* app, const std::string& name, std::optional<int>& target, const std::string& help) {
  app->add_option_function<int>(name, [&target](const int& v) { target = v; }, help);
}

}  // namespace

int main(int argc, char** argv) {
  using namespace skillscope;
  CLI::App app{"skill-routed synthetic image detection"};
  app.require_subcommand(1);
  bool verbose = false;
  app.add_flag("-v,--verbose", verbose, "debug logging");

  DetectArgs detect;
  auto* d = app.add_subcommand("detect", "run the two-stage pipeline on one image");
  d->add_option("image", detect.image, "image path")->required();
  opt_path(d, "--config", detect.config, "config file");
  opt_path(d, "--skill", detect.skill, "bypass routing with this skill");
  opt_path(d, "--out", detect.out, "write the outcome document here");
  d->add_flag("--timings", detect.timings, "include stage timings");

  EvaluateArgs evaluate;
  auto* e = app.add_subcommand("evaluate", "score a manifest and emit a report");
  e->add_option("--manifest", evaluate.manifest, "manifest path")->required();
  opt_path(e, "--config", evaluate.config, "config file");
  e->add_option("--perturb", evaluate.perturb, "kind:param, repeatable (jpeg:85, blur:1.0, resize:0.5)");
  e->add_flag("--robustness", evaluate.robustness, "append the configured perturbation suite");
  opt_path(e, "--skills", evaluate.skills, "comma-separated skill subset or preset");
  opt_path(e, "--out", evaluate.out, "report path");
  e->add_option("--format", evaluate.format, "machine | markdown");
  opt_path(e, "--parallelism", evaluate.parallelism, "worker threads");

  AnnotateArgs annotate;
  auto* a = app.add_subcommand("annotate", "assign skills to candidate images");
  a->add_option("--candidates", annotate.candidates, "candidates JSONL")->required();
  a->add_option("--out", annotate.out, "output manifest")->required();
  opt_path(a, "--config", annotate.config, "config file");
  opt_path(a, "--rejects", annotate.rejects, "rejects report path");
  opt_path(a, "--skills", annotate.skills, "comma-separated skill subset or preset");
  opt_path(a, "--repeats", annotate.repeats, "queries per skill that must agree");

  TrainToyArgs train;
  auto* t = app.add_subcommand("train-toy", "GRPO on the toy bandit");
  opt_path(t, "--config", train.config, "training config");
  opt_path(t, "--app-config", train.app_config, "run config naming a training config");
  opt_path(t, "--out", train.out, "learning curve CSV");

  FewShotArgs fewshot;
  auto* f = app.add_subcommand("fewshot", "seeded per-skill subsample of the train split");
  f->add_option("--manifest", fewshot.manifest, "manifest path")->required();
  f->add_option("--n", fewshot.n, "records per skill and label");
  f->add_option("--seed", fewshot.seed, "sampling seed");
  opt_path(f, "--out", fewshot.out, "output manifest");

  RecordArgs record;
  auto* r = app.add_subcommand("record", "call one external tool and store the fixture");
  r->add_option("--kind", record.kind, "ocr | lighting | shadow | region")->required();
  r->add_option("--image", record.image, "image path")->required();
  opt_path(r, "--config", record.config, "config file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    return app.exit(err) == 0 ? 0 : 1;
  }
  spdlog::set_level(verbose ? spdlog::level::debug : spdlog::level::warn);

  if (*d) return cmd_detect(detect, std::cout, std::cerr);
  if (*e) return cmd_evaluate(evaluate, std::cout, std::cerr);
  if (*a) return cmd_annotate(annotate, std::cout, std::cerr);
  if (*t) return cmd_train_toy(train, std::cout, std::cerr);
  if (*f) return cmd_fewshot(fewshot, std::cout, std::cerr);
  return cmd_record(record, std::cout, std::cerr);
}
