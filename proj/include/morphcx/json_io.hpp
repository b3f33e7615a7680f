#pragma once

// JSON documents for fitted models and synthetic-language specs.

#include <json.hpp>

#include "morphcx/morph_lm.hpp"
#include "morphcx/synthlang.hpp"

namespace morphcx {

inline constexpr int kModelFormatVersion = 1;

/// {"format": "morphcx.bigram", "version": 1, "vocab": [...sorted...],
///  "boundary": {"context_count": n, "targets": {morph: n}},
///  "context_counts": {morph: n}, "bigram_counts": {context: {target: n}}}
/// Objects are keyed by morph strings, so key order is lexicographic.
nlohmann::json to_json(const BigramModel& model);

/// {"format": "morphcx.word_context", "version": 1, "eq1_variant": ...,
///  "vocab": [...], "pair_counts": {x: {y: n}}} with x <= y lexicographically.
nlohmann::json to_json(const WordContextModel& model);

nlohmann::json to_json(const SynthSpec& spec);
/// Missing fields keep their defaults; unknown fields are rejected.
SynthSpec synth_spec_from_json(const nlohmann::json& doc);

}  // namespace morphcx
