#include "skillscope/cli/config.hpp"

#include <fstream>
#include <set>

#include "skillscope/analyzers/tool_client.hpp"
#include "skillscope/core/error.hpp"
#include "skillscope/core/format.hpp"

namespace skillscope {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw Error(ErrorCode::ConfigError, msg); }

void check_keys(const nlohmann::json& j, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) bad(where + ": expected an object");
  std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [k, v] : j.items()) {
    if (!ok.contains(k)) bad(where + ": unknown key '" + k + "'");
  }
}

template <typename T>
void read(const nlohmann::json& j, const char* key, T& target, const std::string& where) {
  if (!j.contains(key)) return;
  try {
    target = j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    bad(where + "." + key + ": wrong type");
  }
}

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& p) {
  if (p.empty()) return {};
  std::filesystem::path path(p);
  return path.is_relative() ? (base / path).lexically_normal() : path;
}

Endpoint endpoint_from_json(const nlohmann::json& j, const std::string& where) {
  Endpoint e;
  if (j.is_string()) {
    e.url = j.get<std::string>();
    return e;
  }
  check_keys(j, where, {"endpoint", "timeout_s", "retries", "api_key_env", "max_in_flight"});
  read(j, "endpoint", e.url, where);
  read(j, "timeout_s", e.timeout_s, where);
  read(j, "retries", e.retries, where);
  read(j, "api_key_env", e.api_key_env, where);
  read(j, "max_in_flight", e.max_in_flight, where);
  if (e.url.empty()) bad(where + ": endpoint is required");
  if (e.timeout_s <= 0) bad(where + ": timeout_s must be positive");
  if (e.retries < 0) bad(where + ": retries must be >= 0");
  if (e.max_in_flight < 1) bad(where + ": max_in_flight must be >= 1");
  return e;
}

}  // namespace

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto end = comma == std::string::npos ? text.size() : comma;
    const auto item = trim(std::string_view(text).substr(start, end - start));
    if (!item.empty()) out.emplace_back(item);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

AppConfig config_from_json(const nlohmann::json& j, const std::filesystem::path& base_dir) {
  check_keys(j, "config", {"mode", "fixture_dir", "reasoner", "tools", "skills", "router", "analyzers",
                           "perturbations", "training_config", "templates_dir", "parallelism", "annotate_repeats"});
  AppConfig c;
  std::string text;
  if (j.contains("mode")) {
    read(j, "mode", text, "config");
    c.mode = service_mode_from_string(text);
  }
  text.clear();
  read(j, "fixture_dir", text, "config");
  c.fixture_dir = resolve(base_dir, text);

  if (j.contains("reasoner")) {
    const auto& r = j.at("reasoner");
    check_keys(r, "reasoner",
               {"endpoint", "model", "temperature", "timeout_s", "retries", "api_key_env", "max_in_flight"});
    read(r, "model", c.reasoner.model, "reasoner");
    read(r, "temperature", c.reasoner.temperature, "reasoner");
    if (r.contains("endpoint")) {
      nlohmann::json ep = r;
      ep.erase("model");
      ep.erase("temperature");
      c.reasoner_endpoint = endpoint_from_json(ep, "reasoner");
    }
  }
  if (j.contains("tools")) {
    const auto& t = j.at("tools");
    if (!t.is_object()) bad("tools: expected an object");
    for (const auto& [k, v] : t.items()) {
      ToolKind kind;
      try {
        kind = tool_kind_from_string(k);
      } catch (const Error&) {
        bad("tools: unknown tool kind '" + k + "'");
      }
      c.tools[kind] = endpoint_from_json(v, "tools." + k);
    }
  }
  if (j.contains("skills")) {
    const auto& s = j.at("skills");
    if (s.is_string()) {
      c.skills = {s.get<std::string>()};
    } else {
      read(j, "skills", c.skills, "config");
    }
  }
  if (j.contains("router")) {
    const auto& r = j.at("router");
    check_keys(r, "router", {"mode", "allow_fallback", "ocr_clues", "thresholds"});
    if (r.contains("mode")) {
      std::string m;
      read(r, "mode", m, "router");
      if (m == "reasoner") {
        c.pipeline.routing = RoutingMode::Reasoner;
      } else if (m == "fallback") {
        c.pipeline.routing = RoutingMode::Fallback;
      } else {
        bad("router.mode must be 'reasoner' or 'fallback'");
      }
    }
    read(r, "allow_fallback", c.pipeline.allow_fallback, "router");
    read(r, "ocr_clues", c.pipeline.ocr_clues, "router");
    if (r.contains("thresholds")) {
      const auto& t = r.at("thresholds");
      check_keys(t, "router.thresholds", {"text", "hf", "residual"});
      read(t, "text", c.pipeline.thresholds.text, "router.thresholds");
      read(t, "hf", c.pipeline.thresholds.hf, "router.thresholds");
      read(t, "residual", c.pipeline.thresholds.residual, "router.thresholds");
    }
  }
  if (j.contains("analyzers")) {
    const auto& a = j.at("analyzers");
    check_keys(a, "analyzers", {"hf_cutoff", "pixel_factor"});
    read(a, "hf_cutoff", c.pipeline.analyzers.hf_cutoff, "analyzers");
    read(a, "pixel_factor", c.pipeline.analyzers.pixel_factor, "analyzers");
  }
  if (j.contains("perturbations")) {
    std::vector<std::string> specs;
    read(j, "perturbations", specs, "config");
    for (const auto& s : specs) c.perturbations.push_back(parse_perturbation(s));
  } else {
    c.perturbations = robustness_suite();
  }
  text.clear();
  read(j, "training_config", text, "config");
  c.training_config = resolve(base_dir, text);
  text.clear();
  read(j, "templates_dir", text, "config");
  c.templates_dir = resolve(base_dir, text);
  read(j, "parallelism", c.parallelism, "config");
  read(j, "annotate_repeats", c.annotate_repeats, "config");

  if (c.parallelism < 1) bad("parallelism must be >= 1");
  if (c.annotate_repeats < 1) bad("annotate_repeats must be >= 1");
  if (c.reasoner.temperature < 0) bad("reasoner.temperature must be >= 0");
  if (c.mode != ServiceMode::Live && c.fixture_dir.empty()) {
    bad(std::string(to_string(c.mode)) + " mode requires fixture_dir");
  }
  if (c.mode == ServiceMode::Record && !c.reasoner_endpoint && c.tools.empty()) {
    bad("record mode needs at least one endpoint");
  }
  return c;
}

AppConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open config " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ConfigError, path.string() + ": " + e.what());
  }
  try {
    return config_from_json(j, std::filesystem::absolute(path).parent_path());
  } catch (const Error& e) {
    throw e.with_context(path.string());
  }
}

SkillRegistry make_registry(const AppConfig& config, const std::optional<std::string>& skills_flag) {
  std::vector<std::string> names = skills_flag ? split_list(*skills_flag) : config.skills;
  if (names.empty()) return SkillRegistry::full();
  if (names.size() == 1) {
    const std::string n = to_lower(names.front());
    if (n == "full" || n == "compact" || n == "advanced" || n == "none") return SkillRegistry::preset(n);
  }
  return SkillRegistry::with_subset(names);
}

TemplateStore make_templates(const AppConfig& config) {
  return config.templates_dir.empty() ? TemplateStore::builtin() : TemplateStore::from_directory(config.templates_dir);
}

Services make_services(const AppConfig& config) {
  Services s;
  s.templates = std::make_shared<const TemplateStore>(make_templates(config));
  std::shared_ptr<FixtureStore> store;
  if (config.mode != ServiceMode::Live) {
    store = std::make_shared<FixtureStore>(config.fixture_dir, config.mode == ServiceMode::Record);
  }
  std::shared_ptr<ReasonerBackend> reasoner_backend;
  if (config.mode != ServiceMode::Replay && config.reasoner_endpoint) {
    reasoner_backend = std::make_shared<HttpReasonerBackend>(*config.reasoner_endpoint);
  }
  if (config.mode == ServiceMode::Replay || reasoner_backend) {
    s.reasoner = std::make_shared<const ReasonerClient>(config.reasoner, config.mode, reasoner_backend, store);
  }
  std::shared_ptr<ToolBackend> tool_backend;
  if (config.mode != ServiceMode::Replay && !config.tools.empty()) {
    tool_backend = std::make_shared<HttpToolBackend>(config.tools);
  }
  if (config.mode == ServiceMode::Replay || tool_backend) {
    s.tools = std::make_shared<const ToolClient>(config.mode, tool_backend, store);
  }
  return s;
}

}  // namespace skillscope
