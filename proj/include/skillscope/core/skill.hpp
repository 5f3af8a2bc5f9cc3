#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace skillscope {

/// One of the twelve forensic skills. Ordinals follow the canonical listing
/// order and are stable: they index report rows and toy-policy outputs.
class SkillId {
 public:
  enum class Value : std::uint8_t {
    Light = 0,
    Shadow,
    Phys,
    CS,
    Func,
    OCR,
    Human,
    Region,
    Animal,
    Freq,
    Pixel,
    Trans,
  };

  static constexpr int kCount = 12;

  constexpr SkillId(Value v) : value_(v) {}  // NOLINT(google-explicit-constructor)

  static SkillId from_ordinal(int ordinal);

  [[nodiscard]] constexpr Value value() const { return value_; }
  [[nodiscard]] constexpr int ordinal() const { return static_cast<int>(value_); }
  [[nodiscard]] std::string_view name() const;
  /// Short description used in routing prompts and annotation probes.
  [[nodiscard]] std::string_view definition() const;

  friend constexpr bool operator==(SkillId a, SkillId b) { return a.value_ == b.value_; }
  friend constexpr auto operator<=>(SkillId a, SkillId b) { return a.ordinal() <=> b.ordinal(); }

 private:
  Value value_;
};

/// Case-insensitive lookup on canonical names; throws Error{UnknownSkill}.
SkillId skill_from_name(std::string_view name);
std::optional<SkillId> try_skill_from_name(std::string_view name);

std::array<SkillId, SkillId::kCount> all_skills();

}  // namespace skillscope
