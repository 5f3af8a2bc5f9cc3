#pragma once

#include <functional>
#include <memory>
#include <optional>

#include "skillscope/bench/manifest.hpp"
#include "skillscope/bench/metrics.hpp"
#include "skillscope/bench/perturb.hpp"
#include "skillscope/core/registry.hpp"
#include "skillscope/reasoner/pipeline.hpp"

namespace skillscope {

using Detector = std::function<PredictionRecord(const ImageRecord&, const std::shared_ptr<const Pixels>&)>;

/// Detector backed by the full pipeline.
Detector pipeline_detector(SkillRegistry registry, Services services, PipelineConfig config);

/// Loads, optionally perturbs and detects every record whose skill is
/// enabled, using up to `parallelism` worker threads. Aggregation follows
/// manifest order. Per-record failures go to the table's error list and count
/// as incorrect. Throws EmptyManifest when nothing is left to evaluate.
MetricsTable evaluate(const Manifest& manifest, const Detector& detector,
                      const std::optional<PerturbationSpec>& spec, const SkillRegistry& registry,
                      int parallelism = 1);

}  // namespace skillscope
