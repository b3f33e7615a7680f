#include "morphcx/complexity.hpp"

#include <cmath>
#include <vector>

#include "morphcx/error.hpp"

namespace morphcx {

namespace {

// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double value) {
    const double t = sum_ + value;
    if (std::abs(sum_) >= std::abs(value)) {
      compensation_ += (sum_ - t) + value;
    } else {
      compensation_ += (value - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

void check_stream(const EventStream& events, ModelKind expected) {
  if (events.kind != expected) {
    throw ValidationError("event stream kind does not match the model");
  }
  if (events.empty()) {
    throw EmptyEventStreamError(events.skipped_words,
                                "entropy is undefined for an empty event stream");
  }
}

// Stream symbol id -> model vocabulary id (absent for unseen morphs).
std::vector<std::optional<SymbolId>> map_symbols(const SymbolTable& stream,
                                                 const SymbolTable& model) {
  std::vector<std::optional<SymbolId>> out(stream.size());
  for (SymbolId id = 0; id < stream.size(); ++id) out[id] = model.find(stream.name(id));
  return out;
}

template <typename ProbFn>
double mean_negative_log2(const EventStream& events, ProbFn&& prob) {
  CompensatedSum sum;
  for (const auto& event : events.events) sum.add(-std::log2(prob(event)));
  // -0.0 for deterministic streams; report it as 0.
  return sum.value() / static_cast<double>(events.size()) + 0.0;
}

}  // namespace

double cross_entropy(const BigramModel& model, const EventStream& events) {
  check_stream(events, ModelKind::bigram);
  const auto mapping = map_symbols(events.symbols, model.vocab());
  return mean_negative_log2(events, [&](const Event& e) {
    if (e.context == EventStream::kBoundaryId) {
      return model.prob_ids(BigramModel::kBoundaryId, mapping[e.target]);
    }
    const auto context = mapping[e.context];
    if (!context) return 1.0 / static_cast<double>(model.vocab_size());
    return model.prob_ids(*context, mapping[e.target]);
  });
}

double cross_entropy(const WordContextModel& model, const EventStream& events) {
  check_stream(events, ModelKind::word_context);
  const auto mapping = map_symbols(events.symbols, model.vocab());
  return mean_negative_log2(
      events, [&](const Event& e) { return model.prob_ids(mapping[e.target], mapping[e.context]); });
}

double perplexity_from_entropy(double bits) { return std::exp2(bits); }

double normalized_entropy(double bits, std::uint64_t vocab_size) {
  if (vocab_size < 2) {
    throw UndefinedMeasureError("normalized entropy needs a vocabulary of at least 2 types");
  }
  return bits / std::log2(static_cast<double>(vocab_size));
}

ComplexityMeasures evaluate(const SegmentedCorpus& train, const SegmentedCorpus& eval,
                            ModelKind kind, const EvaluateOptions& options) {
  ComplexityMeasures m;
  m.kind = kind;
  const EventStream events = enumerate_events(eval, kind);
  m.event_count = events.size();
  m.skipped_words = events.skipped_words;
  if (kind == ModelKind::bigram) {
    const BigramModel model = fit_bigram(train);
    m.vocab_size = model.vocab_size();
    m.cross_entropy_bits = cross_entropy(model, events);
  } else {
    const WordContextModel model = fit_word_context(train, options.eq1);
    m.vocab_size = model.vocab_size();
    m.cross_entropy_bits = cross_entropy(model, events);
  }
  m.perplexity = perplexity_from_entropy(m.cross_entropy_bits);
  if (m.vocab_size >= 2) m.normalized_entropy = normalized_entropy(m.cross_entropy_bits, m.vocab_size);
  return m;
}

ComplexityMeasures evaluate(const SegmentedCorpus& corpus, ModelKind kind,
                            const EvaluateOptions& options) {
  return evaluate(corpus, corpus, kind, options);
}

}  // namespace morphcx
