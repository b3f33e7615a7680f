#pragma once

// Synthetic corpora with controllable morphological typology.
//
// Every word is a stem followed by `affix_slots` ordered slots; each slot is
// filled independently with probability `slot_fill_probability` by one of its
// `affixes_per_slot` affixes. With probability `fusion_rate` the filled slots
// of a word are emitted as one opaque morph instead of separate morphs. The
// output uses '|' between morphs, matching the true generation structure.
//
// Randomness comes from std::mt19937_64, whose output sequence is fixed by the
// C++ standard, and from the bounded/real sampling helpers in SeededRng
// (std:: distributions are implementation-defined and are not used). The same
// spec therefore yields the same corpus on every platform.

#include <cstdint>
#include <random>

#include "morphcx/corpus.hpp"

namespace morphcx {

struct SynthSpec {
  std::uint64_t stem_count = 200;
  std::uint64_t affix_slots = 5;  // 0 = analytic
  std::uint64_t affixes_per_slot = 3;
  double slot_fill_probability = 0.8;
  double fusion_rate = 0.0;
  std::uint64_t sentence_count = 400;
  std::uint64_t words_per_sentence = 8;
  std::uint64_t seed = 1;

  friend bool operator==(const SynthSpec&, const SynthSpec&) = default;
};

/// Throws ValidationError naming the first invalid field.
void validate(const SynthSpec& spec);

class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform integer in [0, bound), bound >= 1, by rejection sampling.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform double in [0, 1) from the top 53 bits.
  double unit();
  bool bernoulli(double p) { return unit() < p; }

 private:
  std::mt19937_64 engine_;
};

/// Deterministic in `spec` (including the seed).
SegmentedCorpus generate_corpus(const SynthSpec& spec);

}  // namespace morphcx
