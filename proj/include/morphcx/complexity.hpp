#pragma once

#include <cstdint>
#include <optional>

#include "morphcx/corpus.hpp"
#include "morphcx/morph_lm.hpp"

namespace morphcx {

/// Information-theoretic summary of one model over one event stream.
/// Entropy is in bits per event; perplexity = 2^H; normalized entropy is
/// H / log2(V) and is absent when V < 2.
struct ComplexityMeasures {
  ModelKind kind = ModelKind::bigram;
  double cross_entropy_bits = 0.0;
  double perplexity = 1.0;
  std::optional<double> normalized_entropy;
  std::uint64_t vocab_size = 0;
  std::uint64_t event_count = 0;
  std::uint64_t skipped_words = 0;
};

/// H = -(1/N) sum log2 p(target | context), compensated summation in event
/// order. Throws EmptyEventStreamError for N = 0 and ValidationError when the
/// stream kind does not match the model.
double cross_entropy(const BigramModel& model, const EventStream& events);
double cross_entropy(const WordContextModel& model, const EventStream& events);

double perplexity_from_entropy(double bits);

/// H / log2(V). Throws UndefinedMeasureError when V < 2.
double normalized_entropy(double bits, std::uint64_t vocab_size);

struct EvaluateOptions {
  Eq1Variant eq1 = Eq1Variant::verbatim;
};

/// Fits the model on `corpus` and scores the same corpus.
ComplexityMeasures evaluate(const SegmentedCorpus& corpus, ModelKind kind,
                            const EvaluateOptions& options = {});

/// Fits on `train` and scores `eval` (held-out evaluation).
ComplexityMeasures evaluate(const SegmentedCorpus& train, const SegmentedCorpus& eval,
                            ModelKind kind, const EvaluateOptions& options = {});

}  // namespace morphcx
