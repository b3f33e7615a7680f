#include "morphcx/morph_lm.hpp"

#include <fmt/format.h>

#include <algorithm>

#include "morphcx/error.hpp"

namespace morphcx {

std::string_view to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::bigram:
      return "bigram";
    case ModelKind::word_context:
      return "word-context";
  }
  return "bigram";
}

ModelKind parse_model_kind(std::string_view name) {
  if (name == "bigram") return ModelKind::bigram;
  if (name == "word-context" || name == "word_context") return ModelKind::word_context;
  throw ValidationError(fmt::format("unknown model '{}' (expected bigram or word-context)", name));
}

std::string_view to_string(Eq1Variant variant) {
  return variant == Eq1Variant::verbatim ? "verbatim" : "standard-laplace";
}

SymbolId SymbolTable::intern(std::string_view symbol) {
  auto it = ids_.find(std::string(symbol));
  if (it != ids_.end()) return it->second;
  const auto id = static_cast<SymbolId>(names_.size());
  names_.emplace_back(symbol);
  ids_.emplace(names_.back(), id);
  return id;
}

std::optional<SymbolId> SymbolTable::find(std::string_view symbol) const {
  auto it = ids_.find(std::string(symbol));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> SymbolTable::sorted() const {
  std::vector<std::string> out = names_;
  std::sort(out.begin(), out.end());
  return out;
}

// --- BigramModel ------------------------------------------------------------

BigramModel fit_bigram(const SegmentedCorpus& corpus) {
  if (corpus.empty()) throw ModelError("cannot fit a bigram model on an empty corpus");
  BigramModel model;
  for (const auto& sentence : corpus.sentences()) {
    SymbolId previous = BigramModel::kBoundaryId;
    for (const auto& word : sentence.words) {
      for (const auto& morph : word.morphs()) {
        const SymbolId current = model.vocab_.intern(morph);
        if (model.context_counts_.size() < model.vocab_.size()) {
          model.context_counts_.resize(model.vocab_.size(), 0);
        }
        ++model.bigram_counts_[BigramModel::key(previous, current)];
        if (previous == BigramModel::kBoundaryId) {
          ++model.boundary_context_count_;
        } else {
          ++model.context_counts_[previous];
        }
        previous = current;
      }
    }
  }
  return model;
}

std::optional<SymbolId> BigramModel::context_id(std::string_view context) const {
  return vocab_.find(context);
}

std::uint64_t BigramModel::count_ids(SymbolId context, std::optional<SymbolId> target) const {
  if (!target) return 0;
  auto it = bigram_counts_.find(key(context, *target));
  return it == bigram_counts_.end() ? 0 : it->second;
}

std::uint64_t BigramModel::context_count_id(SymbolId context) const {
  if (context == kBoundaryId) return boundary_context_count_;
  return context < context_counts_.size() ? context_counts_[context] : 0;
}

double BigramModel::prob_ids(SymbolId context, std::optional<SymbolId> target) const {
  if (vocab_.size() == 0) throw ModelError("bigram model has an empty vocabulary");
  const auto numerator = static_cast<double>(count_ids(context, target) + 1);
  const auto denominator = static_cast<double>(context_count_id(context) + vocab_.size());
  return numerator / denominator;
}

std::uint64_t BigramModel::count(Boundary, std::string_view target) const {
  return count_ids(kBoundaryId, vocab_.find(target));
}

std::uint64_t BigramModel::count(std::string_view context, std::string_view target) const {
  const auto c = context_id(context);
  return c ? count_ids(*c, vocab_.find(target)) : 0;
}

std::uint64_t BigramModel::context_count(std::string_view context) const {
  const auto c = context_id(context);
  return c ? context_count_id(*c) : 0;
}

double BigramModel::prob(Boundary, std::string_view target) const {
  return prob_ids(kBoundaryId, vocab_.find(target));
}

double BigramModel::prob(std::string_view context, std::string_view target) const {
  if (vocab_.size() == 0) throw ModelError("bigram model has an empty vocabulary");
  const auto c = context_id(context);
  if (!c) return 1.0 / static_cast<double>(vocab_.size());
  return prob_ids(*c, vocab_.find(target));
}

// --- WordContextModel ---------------------------------------------------------

WordContextModel fit_word_context(const SegmentedCorpus& corpus, Eq1Variant variant) {
  if (corpus.empty()) throw ModelError("cannot fit a word-context model on an empty corpus");
  WordContextModel model;
  model.variant_ = variant;
  std::vector<SymbolId> ids;
  for (const auto& sentence : corpus.sentences()) {
    for (const auto& word : sentence.words) {
      ids.clear();
      for (const auto& morph : word.morphs()) ids.push_back(model.vocab_.intern(morph));
      model.marginals_.resize(model.vocab_.size(), 0);
      for (std::size_t i = 0; i < ids.size(); ++i) {
        for (std::size_t j = i + 1; j < ids.size(); ++j) {
          ++model.pair_counts_[WordContextModel::key(ids[i], ids[j])];
          ++model.marginals_[ids[i]];
          if (ids[j] != ids[i]) ++model.marginals_[ids[j]];
        }
      }
    }
  }
  return model;
}

std::uint64_t WordContextModel::cooccurrence_ids(std::optional<SymbolId> x,
                                                 std::optional<SymbolId> y) const {
  if (!x || !y) return 0;
  auto it = pair_counts_.find(key(*x, *y));
  return it == pair_counts_.end() ? 0 : it->second;
}

double WordContextModel::prob_ids(std::optional<SymbolId> x, std::optional<SymbolId> y) const {
  if (vocab_.size() == 0) throw ModelError("word-context model has an empty vocabulary");
  const auto fr = cooccurrence_ids(x, y);
  const auto v = static_cast<double>(vocab_.size());
  if (variant_ == Eq1Variant::verbatim) {
    return static_cast<double>(fr + 1) / (static_cast<double>(fr) + v);
  }
  const std::uint64_t mass = y ? marginals_[*y] : 0;
  return static_cast<double>(fr + 1) / (static_cast<double>(mass) + v);
}

std::uint64_t WordContextModel::cooccurrence(std::string_view x, std::string_view y) const {
  return cooccurrence_ids(vocab_.find(x), vocab_.find(y));
}

std::uint64_t WordContextModel::marginal(std::string_view y) const {
  const auto id = vocab_.find(y);
  return id ? marginals_[*id] : 0;
}

double WordContextModel::prob(std::string_view x, std::string_view y) const {
  return prob_ids(vocab_.find(x), vocab_.find(y));
}

// --- Events -------------------------------------------------------------------

EventStream enumerate_events(const SegmentedCorpus& corpus, ModelKind kind) {
  EventStream stream;
  stream.kind = kind;
  std::vector<SymbolId> ids;
  for (const auto& sentence : corpus.sentences()) {
    if (kind == ModelKind::bigram) {
      SymbolId previous = EventStream::kBoundaryId;
      for (const auto& word : sentence.words) {
        for (const auto& morph : word.morphs()) {
          const SymbolId current = stream.symbols.intern(morph);
          stream.events.push_back({previous, current});
          previous = current;
        }
      }
      continue;
    }
    for (const auto& word : sentence.words) {
      if (word.size() < 2) {
        ++stream.skipped_words;
        continue;
      }
      ids.clear();
      for (const auto& morph : word.morphs()) ids.push_back(stream.symbols.intern(morph));
      for (std::size_t i = 0; i < ids.size(); ++i) {
        for (std::size_t j = 0; j < ids.size(); ++j) {
          if (i != j) stream.events.push_back({ids[j], ids[i]});
        }
      }
    }
  }
  return stream;
}

}  // namespace morphcx
