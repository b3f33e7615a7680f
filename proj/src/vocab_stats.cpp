#include "morphcx/vocab_stats.hpp"

#include <fmt/format.h>

#include <string_view>
#include <unordered_set>

#include "morphcx/error.hpp"

namespace morphcx {

std::string_view to_string(Unit unit) {
  switch (unit) {
    case Unit::word:
      return "word";
    case Unit::morph:
      return "morph";
  }
  return "word";
}

Unit parse_unit(std::string_view name) {
  if (name == "word") return Unit::word;
  if (name == "morph") return Unit::morph;
  throw ValidationError(fmt::format("unknown unit '{}' (expected word or morph)", name));
}

VocabStats compute_vocab_stats(const SegmentedCorpus& corpus, Unit unit) {
  VocabStats stats{unit, 0, 0};
  if (unit == Unit::morph) {
    std::unordered_set<std::string_view> types;
    for (const auto& sentence : corpus.sentences()) {
      for (const auto& word : sentence.words) {
        for (const auto& morph : word.morphs()) types.insert(morph);
      }
    }
    stats.tokens = corpus.morph_count();
    stats.types = types.size();
  } else {
    std::unordered_set<std::string> types;
    for (const auto& sentence : corpus.sentences()) {
      for (const auto& word : sentence.words) types.insert(word.surface());
    }
    stats.tokens = corpus.token_count();
    stats.types = types.size();
  }
  return stats;
}

std::string truncated_percent(std::uint64_t numerator, std::uint64_t denominator) {
  if (denominator == 0) throw UndefinedMeasureError("percentage of a zero count");
  // 10000 * numerator stays well inside 128 bits for any 64-bit input.
  __extension__ using uint128 = unsigned __int128;
  const auto scaled = static_cast<uint128>(numerator) * 10000u / denominator;
  const auto hundredths = static_cast<std::uint64_t>(scaled);
  return fmt::format("{}.{:02d}", hundredths / 100, hundredths % 100);
}

TypeTokenRatio ttr_percent(std::uint64_t types, std::uint64_t tokens) {
  if (tokens == 0) throw UndefinedMeasureError("TTR is undefined for an empty corpus");
  TypeTokenRatio ttr;
  ttr.types = types;
  ttr.tokens = tokens;
  ttr.exact = 100.0 * static_cast<double>(types) / static_cast<double>(tokens);
  ttr.display = truncated_percent(types, tokens);
  return ttr;
}

TypeTokenRatio ttr_percent(const VocabStats& stats) { return ttr_percent(stats.types, stats.tokens); }

}  // namespace morphcx
