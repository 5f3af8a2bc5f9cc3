#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "skillscope/analyzers/tool_types.hpp"
#include "skillscope/bench/perturb.hpp"
#include "skillscope/core/registry.hpp"
#include "skillscope/io/fixture_store.hpp"
#include "skillscope/io/http_transport.hpp"
#include "skillscope/io/reasoner_client.hpp"
#include "skillscope/reasoner/pipeline.hpp"

namespace skillscope {

/// Run configuration. See README for the file schema; relative paths are
/// resolved against the directory of the config file.
struct AppConfig {
  ServiceMode mode = ServiceMode::Live;
  std::filesystem::path fixture_dir;
  std::optional<Endpoint> reasoner_endpoint;
  ReasonerSettings reasoner;
  std::map<ToolKind, Endpoint> tools;
  /// Skill names, or a single preset name ("full", "compact", "advanced").
  std::vector<std::string> skills;
  PipelineConfig pipeline;
  std::vector<PerturbationSpec> perturbations;  // used by evaluate --robustness
  std::filesystem::path training_config;
  std::filesystem::path templates_dir;
  int parallelism = 1;
  int annotate_repeats = 1;
};

/// Throws ConfigError on unknown keys, bad types or invalid combinations.
AppConfig config_from_json(const nlohmann::json& j, const std::filesystem::path& base_dir);
AppConfig load_config(const std::filesystem::path& path);

/// Registry from a comma-separated flag when given, else from the config.
SkillRegistry make_registry(const AppConfig& config, const std::optional<std::string>& skills_flag = std::nullopt);

TemplateStore make_templates(const AppConfig& config);

/// Clients for the configured mode. In live mode a missing endpoint leaves
/// the corresponding client null.
Services make_services(const AppConfig& config);

std::vector<std::string> split_list(const std::string& text);

}  // namespace skillscope
