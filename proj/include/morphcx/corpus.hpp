#pragma once

// In-memory corpus model and the plain-text reader/writer.
//
// File format: UTF-8, one sentence per line, tokens separated by runs of
// whitespace, morphs inside a token joined by a single delimiter character
// (default '|'). LF and CRLF are accepted; LF is emitted. Blank lines are
// skipped and tallied in ParseDiagnostics.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace morphcx {

inline constexpr char32_t kDefaultMorphDelimiter = U'|';

struct ParseOptions {
  char32_t morph_delimiter = kDefaultMorphDelimiter;
  bool lowercase = false;    // Unicode full lowercasing, root locale
  bool strip_punct = false;  // drop tokens made only of punctuation
  bool nfc = false;          // NFC-normalize every morph
};

struct ParseDiagnostics {
  std::size_t lines_read = 0;
  std::size_t empty_lines = 0;
  std::size_t stripped_tokens = 0;

  friend bool operator==(const ParseDiagnostics&, const ParseDiagnostics&) = default;
};

/// A whitespace-delimited token split into one or more non-empty morphs.
class SegmentedWord {
 public:
  /// Throws ValidationError if `morphs` is empty or contains an empty string.
  explicit SegmentedWord(std::vector<std::string> morphs);

  const std::vector<std::string>& morphs() const noexcept { return morphs_; }
  std::size_t size() const noexcept { return morphs_.size(); }

  /// Morphs joined with `delimiter` (the token as written in a segmented file).
  std::string joined(std::string_view delimiter) const;
  /// Morphs concatenated without a delimiter: the unsegmented word form.
  std::string surface() const;

  friend bool operator==(const SegmentedWord&, const SegmentedWord&) = default;

 private:
  std::vector<std::string> morphs_;
};

struct Sentence {
  std::vector<SegmentedWord> words;
  std::size_t line_number = 0;  // 1-based line in the source text

  friend bool operator==(const Sentence&, const Sentence&) = default;
};

/// Line/word/morph hierarchy over a text. Immutable after construction.
/// A plain token corpus is the case where every word has exactly one morph.
class SegmentedCorpus {
 public:
  SegmentedCorpus() = default;
  /// Throws ValidationError if line numbers are not strictly increasing.
  SegmentedCorpus(std::vector<Sentence> sentences, std::string language_tag,
                  std::optional<char32_t> delimiter, ParseDiagnostics diagnostics = {});

  const std::vector<Sentence>& sentences() const noexcept { return sentences_; }
  const std::string& language_tag() const noexcept { return language_tag_; }
  /// Empty for a token corpus (tokens were not split).
  std::optional<char32_t> delimiter() const noexcept { return delimiter_; }
  const ParseDiagnostics& diagnostics() const noexcept { return diagnostics_; }

  std::size_t sentence_count() const noexcept { return sentences_.size(); }
  std::size_t token_count() const noexcept { return token_count_; }
  std::size_t morph_count() const noexcept { return morph_count_; }
  bool empty() const noexcept { return token_count_ == 0; }

  /// Content equality: sentences and language tag. The delimiter and the
  /// diagnostics describe how the text was read, not what it contains.
  friend bool operator==(const SegmentedCorpus& a, const SegmentedCorpus& b) {
    return a.language_tag_ == b.language_tag_ && a.sentences_ == b.sentences_;
  }

 private:
  std::vector<Sentence> sentences_;
  std::string language_tag_;
  std::optional<char32_t> delimiter_;
  ParseDiagnostics diagnostics_;
  std::size_t token_count_ = 0;
  std::size_t morph_count_ = 0;
};

struct ParallelCorpus {
  SegmentedCorpus side_a;
  SegmentedCorpus side_b;
};

/// Whitespace tokenization only; every word gets exactly one morph.
/// `options.morph_delimiter` is ignored.
SegmentedCorpus parse_token_corpus(std::string_view text, std::string language_tag,
                                   const ParseOptions& options = {});

/// Whitespace tokenization followed by splitting each token on the delimiter.
/// Throws DecodeError on invalid UTF-8 and ValidationError on an empty morph
/// or an invalid delimiter.
SegmentedCorpus parse_segmented_corpus(std::string_view text, std::string language_tag,
                                       const ParseOptions& options = {});

/// Pairs two corpora line by line. Throws AlignmentError on unequal sentence counts.
ParallelCorpus align_parallel(SegmentedCorpus a, SegmentedCorpus b);

/// Writes one line per sentence, words separated by single spaces, morphs
/// joined with the corpus delimiter (or '|' for a token corpus), LF endings.
std::string serialize(const SegmentedCorpus& corpus);

/// UTF-8 encoding of a single code point.
std::string encode_utf8(char32_t cp);

/// Parses a delimiter argument: exactly one non-whitespace code point.
/// Throws ValidationError otherwise.
char32_t parse_delimiter(std::string_view utf8);

}  // namespace morphcx
