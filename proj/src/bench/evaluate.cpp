#include "skillscope/bench/evaluate.hpp"

#include <atomic>
#include <exception>
#include <thread>
#include <vector>

#include "skillscope/core/error.hpp"
#include "skillscope/io/image_io.hpp"

namespace skillscope {

Detector pipeline_detector(SkillRegistry registry, Services services, PipelineConfig config) {
  return [registry = std::move(registry), services = std::move(services), config = std::move(config)](
             const ImageRecord& record, const std::shared_ptr<const Pixels>& image) {
    return prediction_from_outcome(detect(record, image, registry, services, config));
  };
}

MetricsTable evaluate(const Manifest& manifest, const Detector& detector,
                      const std::optional<PerturbationSpec>& spec, const SkillRegistry& registry,
                      int parallelism) {
  if (manifest.records.empty()) throw Error(ErrorCode::EmptyManifest, "manifest has no records");
  if (parallelism < 1) throw Error(ErrorCode::ConfigError, "parallelism must be >= 1");
  if (spec) spec->validate();

  const auto& records = manifest.records;
  std::vector<std::optional<PredictionRecord>> slots(records.size());
  std::vector<std::string> failures(records.size());
  std::atomic<std::size_t> next{0};

  auto work = [&] {
    for (std::size_t i = next++; i < records.size(); i = next++) {
      const auto& r = records[i];
      if (!registry.contains(r.skill)) continue;
      try {
        auto image = std::make_shared<const Pixels>(spec ? perturb(load_image(r.path), *spec) : load_image(r.path));
        slots[i] = detector(r, image);
      } catch (const std::exception& e) {
        failures[i] = e.what();
        if (failures[i].empty()) failures[i] = "unknown error";
      }
    }
  };

  const int n_threads = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(parallelism), records.size()));
  if (n_threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < n_threads; ++t) pool.emplace_back(work);
  }

  std::vector<RecordError> errors;
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (!failures[i].empty()) errors.push_back({records[i].id, failures[i]});
  }
  return build_table(records, slots, std::move(errors), registry, spec ? spec->label() : "clean");
}

}  // namespace skillscope
