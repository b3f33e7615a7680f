#pragma once

// Random corpora for property tests (hand-rolled generator, fixed seeds).

#include <random>
#include <string>
#include <vector>

#include "morphcx/corpus.hpp"
#include "oracle.hpp"

namespace fixtures {

/// At most `max_morphs` morphs drawn from a small alphabet so repeats are common.
inline oracle::Text random_text(std::mt19937& rng, int max_morphs = 100) {
  static const std::vector<std::string> alphabet = {"a", "ba", "ki", "tl", "ñe", "zo", "ri", "mo"};
  std::uniform_int_distribution<int> budget_dist(1, max_morphs);
  std::uniform_int_distribution<int> line_len(1, 6);
  std::uniform_int_distribution<int> word_len(1, 4);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  int budget = budget_dist(rng);
  oracle::Text text;
  while (budget > 0) {
    oracle::Line line;
    const int words = line_len(rng);
    for (int w = 0; w < words && budget > 0; ++w) {
      oracle::Word word;
      const int k = std::min(word_len(rng), budget);
      for (int i = 0; i < k; ++i) word.push_back(alphabet[pick(rng)]);
      budget -= k;
      line.push_back(std::move(word));
    }
    text.push_back(std::move(line));
  }
  return text;
}

inline morphcx::SegmentedCorpus to_corpus(const oracle::Text& text) {
  std::vector<morphcx::Sentence> sentences;
  std::size_t line_number = 0;
  for (const auto& line : text) {
    morphcx::Sentence s;
    s.line_number = ++line_number;
    for (const auto& word : line) s.words.emplace_back(word);
    sentences.push_back(std::move(s));
  }
  return morphcx::SegmentedCorpus(std::move(sentences), "rand", U'|');
}

}  // namespace fixtures
