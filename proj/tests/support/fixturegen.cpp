// Regenerates tests/data: synthetic images, manifests, configs and the
// oracle replay fixtures. Usage: fixturegen <tests/data dir>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <spdlog/spdlog.h>

#include "oracle.hpp"
#include "synth.hpp"
#include "skillscope/bench/annotate.hpp"
#include "skillscope/bench/evaluate.hpp"
#include "skillscope/bench/manifest.hpp"
#include "skillscope/cli/config.hpp"
#include "skillscope/core/error.hpp"
#include "skillscope/core/format.hpp"
#include "skillscope/io/image_io.hpp"

namespace fs = std::filesystem;
using namespace skillscope;

namespace {

void write(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  f << text;
  if (!f) throw Error(ErrorCode::IoError, "cannot write " + path.string());
}

void require_clean(const MetricsTable& t) {
  if (!t.errors.empty()) throw Error(ErrorCode::ConfigError, t.label + ": " + t.errors.front().message);
  if (t.overall.accuracy != 1.0 || t.overall.routing_accuracy != 1.0) {
    throw Error(ErrorCode::ConfigError, t.label + ": oracle run is not perfect");
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: fixturegen <data dir>\n";
    return 1;
  }
  spdlog::set_level(spdlog::level::warn);
  try {
    const fs::path root = fs::absolute(argv[1]);
    const fs::path images = root / "images";
    const fs::path fixtures = root / "fixtures";
    fs::create_directories(images);
    fs::remove_all(fixtures);
    fs::create_directories(fixtures);
    auto book = std::make_shared<oracle::Book>();

    // 24-record manifest: one real and one fake per skill.
    Manifest manifest;
    manifest.header = ManifestHeader{"fixture-24", "1", "2026-10-16"};
    for (SkillId s : all_skills()) {
      for (Label l : {Label::Real, Label::Fake}) {
        const std::string id = to_lower(s.name()) + "_" + std::string(to_string(l));
        const fs::path path = images / (id + ".png");
        save_png(synth::record_image(s, l, 1), path);
        manifest.records.push_back({id, path.string(), l, s, "synthetic", Split::Train});
        oracle::Truth truth{id, l, s, {}, {}};
        if (s == SkillId::Value::OCR) truth.text_boxes = {{0.09375, 0.125, 0.90625, 0.25}};
        book->add(load_image(path), truth);
      }
    }
    save_manifest(manifest, root / "manifest.jsonl");

    // Photographic fixture (prepared separately) with two text boxes
    // covering 5% of the frame each.
    const Pixels photo = load_image(images / "photo.png");
    book->add(photo, {"photo", Label::Real, SkillId::Value::OCR, {}, {{0.1, 0.1, 0.3, 0.35}, {0.5, 0.6, 0.75, 0.8}}});

    // Annotation candidates.
    struct Cand {
      const char* id;
      Label label;
      std::vector<SkillId> yes;
      SkillId look;
    };
    const Cand cands[] = {
        {"cand_single", Label::Fake, {SkillId::Value::Freq}, SkillId::Value::Freq},
        {"cand_multi", Label::Fake, {SkillId::Value::Freq, SkillId::Value::Pixel}, SkillId::Value::Pixel},
        {"cand_none", Label::Fake, {}, SkillId::Value::Phys},
        {"cand_real_a", Label::Real, {}, SkillId::Value::Light},
        {"cand_real_b", Label::Real, {}, SkillId::Value::Shadow},
    };
    std::string cand_lines;
    for (const auto& c : cands) {
      const fs::path path = images / (std::string(c.id) + ".png");
      save_png(synth::record_image(c.look, c.label, 7), path);
      book->add(load_image(path), {c.id, c.label, c.look, c.yes, {}});
      nlohmann::ordered_json j;
      j["id"] = c.id;
      j["path"] = "images/" + std::string(c.id) + ".png";
      j["label"] = std::string(to_string(c.label));
      j["source"] = "synthetic";
      cand_lines += j.dump() + "\n";
    }
    write(root / "candidates.jsonl", cand_lines);

    const std::vector<PerturbationSpec> suite = robustness_suite();
    for (const auto& r : manifest.records) {
      const auto truth = book->find(load_image(r.path));
      for (const auto& spec : suite) book->add(perturb(load_image(r.path), spec), *truth);
    }

    write(root / "replay.json",
          "{\n"
          "  \"mode\": \"replay\",\n"
          "  \"fixture_dir\": \"fixtures\",\n"
          "  \"reasoner\": {\"model\": \"oracle\", \"temperature\": 0},\n"
          "  \"router\": {\"mode\": \"reasoner\", \"allow_fallback\": false, \"ocr_clues\": true},\n"
          "  \"parallelism\": 2\n"
          "}\n");
    write(root / "train_seed42.json",
          "{\n"
          "  \"contexts\": 3,\n"
          "  \"steps\": 2000,\n"
          "  \"group_size\": 8,\n"
          "  \"learning_rate\": 0.1,\n"
          "  \"seed\": 42,\n"
          "  \"weights\": {\"answer\": 1, \"skill\": 1, \"format\": 1},\n"
          "  \"generator\": \"mt19937_64\"\n"
          "}\n");

    AppConfig config = load_config(root / "replay.json");
    auto store = std::make_shared<FixtureStore>(fixtures, true);
    auto reasoner_backend = std::make_shared<oracle::Reasoner>(book);
    Services services;
    services.templates = std::make_shared<const TemplateStore>(TemplateStore::builtin());
    services.reasoner = std::make_shared<const ReasonerClient>(config.reasoner, ServiceMode::Record,
                                                               reasoner_backend, store);
    services.tools = std::make_shared<const ToolClient>(ServiceMode::Record, std::make_shared<oracle::Tools>(book), store);

    const SkillRegistry full = SkillRegistry::full();
    const Detector detector = pipeline_detector(full, services, config.pipeline);
    require_clean(evaluate(manifest, detector, std::nullopt, full, 1));
    for (const auto& spec : suite) require_clean(evaluate(manifest, detector, spec, full, 1));

    const std::vector<std::string> compact_names = {"Freq", "Pixel", "OCR", "Trans"};
    const SkillRegistry compact = SkillRegistry::with_subset(compact_names);
    require_clean(evaluate(manifest, pipeline_detector(compact, services, config.pipeline), std::nullopt, compact, 1));

    PipelineConfig override_cfg = config.pipeline;
    override_cfg.skill_override = SkillId::Value::Freq;
    const ImageRecord pixel_fake = manifest.records[2 * SkillId(SkillId::Value::Pixel).ordinal() + 1];
    detect(pixel_fake, full, services, override_cfg);
    detect(ImageRecord{"photo", (images / "photo.png").string(), Label::Real, SkillId::Value::OCR, "photo", Split::Test},
           full, services, config.pipeline);

    const auto result = annotate(load_candidates(root / "candidates.jsonl"), full, *services.reasoner,
                                 *services.templates, 1);

    std::size_t n = 0;
    for ([[maybe_unused]] const auto& e : fs::directory_iterator(fixtures)) ++n;
    std::cout << "images in book: " << book->size() << "\nreasoner calls: " << reasoner_backend->calls()
              << "\nfixtures: " << n << "\nannotated: " << result.records.size()
              << " rejected: " << result.rejects.size() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "fixturegen: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
