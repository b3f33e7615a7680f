#pragma once

// Morph-sequence models.
//
// BigramModel: add-one smoothed bigrams over each line's morph stream
//   [<line-start>, m1, m2, ..., mk], crossing word boundaries but never lines.
//   p(t|c) = (count(c,t) + 1) / (count(c) + V), V = number of morph types.
//
// WordContextModel: symmetric within-word co-occurrence counts fr(x,y), one
//   increment per unordered pair of morph positions in a word.
//   p(x|y) = (fr(x,y) + 1) / (fr(x,y) + V)            (verbatim, default)
//   p(x|y) = (fr(x,y) + 1) / (sum_z fr(z,y) + V)       (standard Laplace)
//   The verbatim form is not a normalized conditional distribution.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "morphcx/corpus.hpp"

namespace morphcx {

enum class ModelKind { bigram, word_context };

std::string_view to_string(ModelKind kind);
/// Accepts "bigram", "word-context" or "word_context".
ModelKind parse_model_kind(std::string_view name);

enum class Eq1Variant { verbatim, standard_laplace };

std::string_view to_string(Eq1Variant variant);

using SymbolId = std::uint32_t;

/// Interned morph strings; ids are dense and assigned in first-seen order.
class SymbolTable {
 public:
  SymbolId intern(std::string_view symbol);
  std::optional<SymbolId> find(std::string_view symbol) const;
  const std::string& name(SymbolId id) const { return names_.at(id); }
  std::size_t size() const noexcept { return names_.size(); }
  /// All symbols in lexicographic byte order.
  std::vector<std::string> sorted() const;

 private:
  std::unordered_map<std::string, SymbolId> ids_;
  std::vector<std::string> names_;
};

/// Tag for the line-start context of the bigram model.
struct Boundary {};
inline constexpr Boundary boundary{};

class BigramModel {
 public:
  static constexpr SymbolId kBoundaryId = std::numeric_limits<SymbolId>::max();

  const SymbolTable& vocab() const noexcept { return vocab_; }
  std::size_t vocab_size() const noexcept { return vocab_.size(); }

  std::uint64_t count(Boundary, std::string_view target) const;
  std::uint64_t count(std::string_view context, std::string_view target) const;
  std::uint64_t context_count(Boundary) const noexcept { return boundary_context_count_; }
  std::uint64_t context_count(std::string_view context) const;

  /// Add-one smoothed p(target | context). Unseen contexts and targets are
  /// allowed; an unseen context yields 1/V. Throws ModelError when V = 0.
  double prob(Boundary, std::string_view target) const;
  double prob(std::string_view context, std::string_view target) const;

  /// Id-level access. `context` may be kBoundaryId; an absent target is an
  /// out-of-vocabulary morph.
  std::uint64_t count_ids(SymbolId context, std::optional<SymbolId> target) const;
  std::uint64_t context_count_id(SymbolId context) const;
  double prob_ids(SymbolId context, std::optional<SymbolId> target) const;

  /// (context, target) -> count, context may be kBoundaryId.
  const std::unordered_map<std::uint64_t, std::uint64_t>& raw_bigram_counts() const noexcept {
    return bigram_counts_;
  }
  static SymbolId key_context(std::uint64_t key) { return static_cast<SymbolId>(key >> 32); }
  static SymbolId key_target(std::uint64_t key) { return static_cast<SymbolId>(key); }

 private:
  friend BigramModel fit_bigram(const SegmentedCorpus& corpus);

  static std::uint64_t key(SymbolId context, SymbolId target) {
    return (std::uint64_t{context} << 32) | target;
  }
  std::optional<SymbolId> context_id(std::string_view context) const;

  SymbolTable vocab_;
  std::unordered_map<std::uint64_t, std::uint64_t> bigram_counts_;
  std::vector<std::uint64_t> context_counts_;
  std::uint64_t boundary_context_count_ = 0;
};

class WordContextModel {
 public:
  const SymbolTable& vocab() const noexcept { return vocab_; }
  std::size_t vocab_size() const noexcept { return vocab_.size(); }
  Eq1Variant variant() const noexcept { return variant_; }

  /// fr(x, y); symmetric in its arguments. Unknown morphs give 0.
  std::uint64_t cooccurrence(std::string_view x, std::string_view y) const;
  /// sum over z of fr(z, y): the denominator mass of the standard Laplace variant.
  std::uint64_t marginal(std::string_view y) const;

  /// p(x | y) under the model's Eq1Variant. Throws ModelError when V = 0.
  double prob(std::string_view x, std::string_view y) const;

  std::uint64_t cooccurrence_ids(std::optional<SymbolId> x, std::optional<SymbolId> y) const;
  double prob_ids(std::optional<SymbolId> x, std::optional<SymbolId> y) const;

  /// Unordered pair (lo, hi) -> fr, with lo <= hi.
  const std::unordered_map<std::uint64_t, std::uint64_t>& raw_pair_counts() const noexcept {
    return pair_counts_;
  }
  static SymbolId key_low(std::uint64_t key) { return static_cast<SymbolId>(key >> 32); }
  static SymbolId key_high(std::uint64_t key) { return static_cast<SymbolId>(key); }

 private:
  friend WordContextModel fit_word_context(const SegmentedCorpus& corpus, Eq1Variant variant);

  static std::uint64_t key(SymbolId a, SymbolId b) {
    if (a > b) std::swap(a, b);
    return (std::uint64_t{a} << 32) | b;
  }

  SymbolTable vocab_;
  std::unordered_map<std::uint64_t, std::uint64_t> pair_counts_;
  std::vector<std::uint64_t> marginals_;
  Eq1Variant variant_ = Eq1Variant::verbatim;
};

/// Throws ModelError on a corpus with no words.
BigramModel fit_bigram(const SegmentedCorpus& corpus);
WordContextModel fit_word_context(const SegmentedCorpus& corpus,
                                  Eq1Variant variant = Eq1Variant::verbatim);

inline double bigram_prob(const BigramModel& model, Boundary, std::string_view target) {
  return model.prob(boundary, target);
}
inline double bigram_prob(const BigramModel& model, std::string_view context,
                          std::string_view target) {
  return model.prob(context, target);
}
inline double word_context_prob(const WordContextModel& model, std::string_view x,
                                std::string_view y) {
  return model.prob(x, y);
}

struct Event {
  SymbolId context;
  SymbolId target;

  friend bool operator==(const Event&, const Event&) = default;
};

/// Evaluation events over a corpus, with their own symbol table so a stream
/// can be scored by a model fitted on a different corpus.
struct EventStream {
  static constexpr SymbolId kBoundaryId = BigramModel::kBoundaryId;

  ModelKind kind = ModelKind::bigram;
  SymbolTable symbols;
  std::vector<Event> events;
  std::size_t skipped_words = 0;  // single-morph words (word_context only)

  std::size_t size() const noexcept { return events.size(); }
  bool empty() const noexcept { return events.empty(); }
};

/// bigram: one event per adjacent pair of each line's boundary-prefixed stream.
/// word_context: for each word of k >= 2 morphs, the k(k-1) ordered
/// (target i, context j), i != j, position pairs in reading order.
EventStream enumerate_events(const SegmentedCorpus& corpus, ModelKind kind);

}  // namespace morphcx
