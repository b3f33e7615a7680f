#include "morphcx/json_io.hpp"

#include <fmt/format.h>

#include <set>
#include <string>

#include "morphcx/error.hpp"

namespace morphcx {

using nlohmann::json;

json to_json(const BigramModel& model) {
  const auto& vocab = model.vocab();
  json boundary_targets = json::object();
  json context_counts = json::object();
  json bigram_counts = json::object();
  for (const auto& [key, count] : model.raw_bigram_counts()) {
    const auto context = BigramModel::key_context(key);
    const auto& target = vocab.name(BigramModel::key_target(key));
    if (context == BigramModel::kBoundaryId) {
      boundary_targets[target] = count;
    } else {
      bigram_counts[vocab.name(context)][target] = count;
    }
  }
  for (SymbolId id = 0; id < vocab.size(); ++id) {
    if (const auto n = model.context_count_id(id); n > 0) context_counts[vocab.name(id)] = n;
  }
  return {
      {"format", "morphcx.bigram"},
      {"version", kModelFormatVersion},
      {"vocab", vocab.sorted()},
      {"boundary",
       {{"context_count", model.context_count(boundary)}, {"targets", boundary_targets}}},
      {"context_counts", context_counts},
      {"bigram_counts", bigram_counts},
  };
}

json to_json(const WordContextModel& model) {
  const auto& vocab = model.vocab();
  json pairs = json::object();
  for (const auto& [key, count] : model.raw_pair_counts()) {
    std::string x = vocab.name(WordContextModel::key_low(key));
    std::string y = vocab.name(WordContextModel::key_high(key));
    if (y < x) std::swap(x, y);
    pairs[x][y] = count;
  }
  return {
      {"format", "morphcx.word_context"},
      {"version", kModelFormatVersion},
      {"eq1_variant", std::string(to_string(model.variant()))},
      {"vocab", vocab.sorted()},
      {"pair_counts", pairs},
  };
}

json to_json(const SynthSpec& spec) {
  return {
      {"stem_count", spec.stem_count},
      {"affix_slots", spec.affix_slots},
      {"affixes_per_slot", spec.affixes_per_slot},
      {"slot_fill_probability", spec.slot_fill_probability},
      {"fusion_rate", spec.fusion_rate},
      {"sentence_count", spec.sentence_count},
      {"words_per_sentence", spec.words_per_sentence},
      {"seed", spec.seed},
  };
}

SynthSpec synth_spec_from_json(const json& doc) {
  if (!doc.is_object()) throw ValidationError("synth spec must be a JSON object");
  SynthSpec spec;
  static const std::set<std::string> known = {
      "stem_count",    "affix_slots",    "affixes_per_slot",   "slot_fill_probability",
      "fusion_rate",   "sentence_count", "words_per_sentence", "seed"};
  for (const auto& [field, value] : doc.items()) {
    if (!known.count(field)) throw ValidationError(fmt::format("synth spec: unknown field '{}'", field));
  }
  auto count = [&](const char* field, std::uint64_t& out) {
    if (!doc.contains(field)) return;
    const auto& v = doc.at(field);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
      throw ValidationError(fmt::format("synth spec: {} must be a non-negative integer", field));
    }
    out = v.get<std::uint64_t>();
  };
  auto real = [&](const char* field, double& out) {
    if (!doc.contains(field)) return;
    const auto& v = doc.at(field);
    if (!v.is_number()) throw ValidationError(fmt::format("synth spec: {} must be a number", field));
    out = v.get<double>();
  };
  count("stem_count", spec.stem_count);
  count("affix_slots", spec.affix_slots);
  count("affixes_per_slot", spec.affixes_per_slot);
  real("slot_fill_probability", spec.slot_fill_probability);
  real("fusion_rate", spec.fusion_rate);
  count("sentence_count", spec.sentence_count);
  count("words_per_sentence", spec.words_per_sentence);
  count("seed", spec.seed);
  validate(spec);
  return spec;
}

}  // namespace morphcx
