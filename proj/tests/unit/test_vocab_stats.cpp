#include <doctest.h>

#include <random>
#include <set>

#include "../support/fixtures.hpp"
#include "morphcx/error.hpp"
#include "morphcx/vocab_stats.hpp"

using namespace morphcx;

TEST_CASE("word and morph counts") {
  auto a = parse_token_corpus("a a a a", "t");
  CHECK(compute_vocab_stats(a, Unit::word) == VocabStats{Unit::word, 4, 1});

  auto xby = parse_segmented_corpus("x|b x|y", "t");
  CHECK(compute_vocab_stats(xby, Unit::morph) == VocabStats{Unit::morph, 4, 3});
  CHECK(compute_vocab_stats(xby, Unit::word) == VocabStats{Unit::word, 2, 2});

  // Word types are unsegmented forms: two segmentations of "xy" are one type.
  auto resegmented = parse_segmented_corpus("x|y xy", "t");
  CHECK(compute_vocab_stats(resegmented, Unit::word).types == 1);

  auto empty = parse_token_corpus("", "t");
  CHECK(compute_vocab_stats(empty, Unit::word) == VocabStats{Unit::word, 0, 0});
}

TEST_CASE("ttr_percent truncates to two decimals") {
  auto es = ttr_percent(13233, 118364);
  CHECK(es.display == "11.17");
  CHECK(es.exact == doctest::Approx(11.17991957).epsilon(1e-9));

  auto na = ttr_percent(2191, 175744);
  CHECK(na.display == "1.24");
  CHECK(na.exact == doctest::Approx(1.2466997450837582).epsilon(1e-9));

  CHECK(ttr_percent(VocabStats{Unit::word, 4, 1}).display == "25.00");
  CHECK(ttr_percent(VocabStats{Unit::word, 4, 1}).exact == 25.0);
  CHECK(ttr_percent(3, 3).display == "100.00");
  CHECK(ttr_percent(1, 3).display == "33.33");
  CHECK(ttr_percent(2, 3).display == "66.66");
  CHECK(ttr_percent(1, 100000).display == "0.00");

  CHECK_THROWS_AS(ttr_percent(VocabStats{Unit::word, 0, 0}), UndefinedMeasureError);
}

TEST_CASE("unit names") {
  CHECK(parse_unit("word") == Unit::word);
  CHECK(parse_unit("morph") == Unit::morph);
  CHECK(to_string(Unit::morph) == "morph");
  CHECK_THROWS_AS(parse_unit("lemma"), ValidationError);
}

TEST_CASE("property: TTR bounds and monotonicity under appending") {
  std::mt19937 rng(7);
  for (int iter = 0; iter < 100; ++iter) {
    auto text = fixtures::random_text(rng);
    auto extra = fixtures::random_text(rng, 30);
    auto longer = text;
    longer.insert(longer.end(), extra.begin(), extra.end());
    for (const Unit unit : {Unit::word, Unit::morph}) {
      const auto s = compute_vocab_stats(fixtures::to_corpus(text), unit);
      const auto l = compute_vocab_stats(fixtures::to_corpus(longer), unit);
      CHECK(s.types <= s.tokens);
      CHECK(l.tokens >= s.tokens);
      CHECK(l.types >= s.types);

      const auto ttr = ttr_percent(s);
      CHECK(ttr.exact > 0.0);
      CHECK(ttr.exact <= 100.0);
      CHECK((ttr.exact == 100.0) == (s.types == s.tokens));
    }
  }
}

TEST_CASE("property: word-unit types equal distinct concatenated forms") {
  std::mt19937 rng(11);
  for (int iter = 0; iter < 50; ++iter) {
    auto text = fixtures::random_text(rng);
    std::set<std::string> forms;
    std::set<std::string> morphs;
    for (const auto& line : text) {
      for (const auto& word : line) {
        std::string f;
        for (const auto& m : word) {
          f += m;
          morphs.insert(m);
        }
        forms.insert(f);
      }
    }
    const auto corpus = fixtures::to_corpus(text);
    CHECK(compute_vocab_stats(corpus, Unit::word).types == forms.size());
    CHECK(compute_vocab_stats(corpus, Unit::morph).types == morphs.size());
  }
}
