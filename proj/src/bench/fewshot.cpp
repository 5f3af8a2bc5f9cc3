#include "skillscope/bench/fewshot.hpp"

#include <algorithm>
#include <random>

#include "skillscope/core/error.hpp"

namespace skillscope {

namespace {

double unit(std::uint64_t draw) { return static_cast<double>(draw >> 11) * 0x1.0p-53; }

}  // namespace

FewShotResult few_shot_sample(const Manifest& manifest, int n_per_skill, std::uint64_t seed) {
  if (n_per_skill < 1) throw Error(ErrorCode::ConfigError, "few-shot n must be >= 1");
  std::mt19937_64 gen(seed);
  FewShotResult out;
  out.manifest.header = manifest.header;
  std::vector<std::size_t> keep;
  for (SkillId skill : all_skills()) {
    const bool present = std::any_of(manifest.records.begin(), manifest.records.end(),
                                     [&](const ImageRecord& r) { return r.skill == skill; });
    if (!present) continue;
    for (Label label : {Label::Real, Label::Fake}) {
      std::vector<std::size_t> pool;
      for (std::size_t i = 0; i < manifest.records.size(); ++i) {
        const auto& r = manifest.records[i];
        if (r.split == Split::Train && r.skill == skill && r.label == label) pool.push_back(i);
      }
      const auto n = static_cast<std::size_t>(n_per_skill);
      if (pool.size() < n) {
        out.warnings.push_back(std::string(skill.name()) + " has only " + std::to_string(pool.size()) + " " +
                               std::string(to_string(label)) + " train record(s), wanted " + std::to_string(n));
      }
      const std::size_t take = std::min(n, pool.size());
      for (std::size_t i = 0; i < take && take < pool.size(); ++i) {
        const auto span = static_cast<double>(pool.size() - i);
        const std::size_t j = i + static_cast<std::size_t>(unit(gen()) * span);
        std::swap(pool[i], pool[j]);
      }
      keep.insert(keep.end(), pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(take));
    }
  }
  std::sort(keep.begin(), keep.end());
  for (std::size_t i : keep) out.manifest.records.push_back(manifest.records[i]);
  return out;
}

}  // namespace skillscope
