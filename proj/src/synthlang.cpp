#include "morphcx/synthlang.hpp"

#include <fmt/format.h>

#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "morphcx/error.hpp"

namespace morphcx {

namespace {

constexpr std::string_view kVowels = "aeiou";
constexpr std::string_view kStemConsonants = "ptkmnls";
constexpr std::string_view kAffixConsonants = "rwyhzgbd";

// Writes `index` as CV syllables in base |C|*|V|, at least `min_syllables` long.
std::string syllabify(std::uint64_t index, std::string_view consonants, std::size_t min_syllables) {
  const std::uint64_t base = consonants.size() * kVowels.size();
  std::string out;
  std::size_t syllables = 0;
  do {
    const auto digit = index % base;
    out += consonants[digit / kVowels.size()];
    out += kVowels[digit % kVowels.size()];
    index /= base;
    ++syllables;
  } while (index > 0 || syllables < min_syllables);
  return out;
}

void require(bool ok, std::string_view field, std::string_view rule) {
  if (!ok) throw ValidationError(fmt::format("synth spec: {} {}", field, rule));
}

bool is_probability(double p) { return std::isfinite(p) && p >= 0.0 && p <= 1.0; }

}  // namespace

void validate(const SynthSpec& spec) {
  require(spec.stem_count >= 1, "stem_count", "must be >= 1");
  require(spec.affixes_per_slot >= 1, "affixes_per_slot", "must be >= 1");
  require(spec.sentence_count >= 1, "sentence_count", "must be >= 1");
  require(spec.words_per_sentence >= 1, "words_per_sentence", "must be >= 1");
  require(is_probability(spec.slot_fill_probability), "slot_fill_probability", "must be in [0, 1]");
  require(is_probability(spec.fusion_rate), "fusion_rate", "must be in [0, 1]");
  require(spec.affix_slots <= 64, "affix_slots", "must be <= 64");
}

std::uint64_t SeededRng::below(std::uint64_t bound) {
  if (bound == 0) throw ValidationError("SeededRng::below needs a positive bound");
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % bound + 1) % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x > limit);
  return x % bound;
}

double SeededRng::unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

SegmentedCorpus generate_corpus(const SynthSpec& spec) {
  validate(spec);

  std::vector<std::string> stems(spec.stem_count);
  for (std::uint64_t i = 0; i < spec.stem_count; ++i) stems[i] = syllabify(i, kStemConsonants, 2);

  std::vector<std::vector<std::string>> affixes(spec.affix_slots);
  for (std::uint64_t s = 0; s < spec.affix_slots; ++s) {
    for (std::uint64_t j = 0; j < spec.affixes_per_slot; ++j) {
      affixes[s].push_back(syllabify(s * spec.affixes_per_slot + j, kAffixConsonants, 1));
    }
  }

  SeededRng rng(spec.seed);
  std::vector<Sentence> sentences;
  sentences.reserve(spec.sentence_count);
  std::vector<std::string> filled;
  for (std::uint64_t line = 0; line < spec.sentence_count; ++line) {
    Sentence sentence;
    sentence.line_number = line + 1;
    for (std::uint64_t w = 0; w < spec.words_per_sentence; ++w) {
      const auto& stem = stems[rng.below(spec.stem_count)];
      filled.clear();
      for (const auto& slot : affixes) {
        // Both draws happen for every slot so the stream stays aligned across
        // specs that differ only in probabilities.
        const bool fill = rng.bernoulli(spec.slot_fill_probability);
        const auto& affix = slot[rng.below(slot.size())];
        if (fill) filled.push_back(affix);
      }
      const bool fuse = rng.bernoulli(spec.fusion_rate);

      std::vector<std::string> morphs{stem};
      if (fuse && !filled.empty()) {
        std::string portmanteau;
        for (const auto& a : filled) portmanteau += a;
        morphs.push_back(std::move(portmanteau));
      } else {
        morphs.insert(morphs.end(), filled.begin(), filled.end());
      }
      sentence.words.emplace_back(std::move(morphs));
    }
    sentences.push_back(std::move(sentence));
  }
  return SegmentedCorpus(std::move(sentences), "synth", kDefaultMorphDelimiter);
}

}  // namespace morphcx
