#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "morphcx/corpus.hpp"

namespace morphcx {

/// Counting unit. `word` counts whole unsegmented word forms (morphs
/// concatenated), `morph` counts individual morphs.
enum class Unit { word, morph };

std::string_view to_string(Unit unit);
/// Accepts "word" or "morph"; throws ValidationError otherwise.
Unit parse_unit(std::string_view name);

struct VocabStats {
  Unit unit = Unit::word;
  std::uint64_t tokens = 0;
  std::uint64_t types = 0;

  friend bool operator==(const VocabStats&, const VocabStats&) = default;
};

/// Type identity is exact byte equality of the (already case/NFC-processed) strings.
VocabStats compute_vocab_stats(const SegmentedCorpus& corpus, Unit unit);

struct TypeTokenRatio {
  std::uint64_t types = 0;
  std::uint64_t tokens = 0;
  double exact = 0.0;    // 100 * types / tokens
  std::string display;  // exact truncated (never rounded) to 2 decimals
};

/// Throws UndefinedMeasureError when tokens == 0.
TypeTokenRatio ttr_percent(const VocabStats& stats);
TypeTokenRatio ttr_percent(std::uint64_t types, std::uint64_t tokens);

/// 100 * numerator / denominator truncated toward zero to 2 decimals, computed
/// in integer arithmetic so no floating error can push a value across a digit.
std::string truncated_percent(std::uint64_t numerator, std::uint64_t denominator);

}  // namespace morphcx
