#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace morphcx {

/// Base class for every data error raised by the library. The CLI maps these
/// to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input is not valid UTF-8.
class DecodeError : public Error {
 public:
  DecodeError(std::size_t byte_offset, const std::string& what)
      : Error(what), byte_offset_(byte_offset) {}
  std::size_t byte_offset() const noexcept { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

/// Malformed segmentation (empty morph) or invalid configuration value.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class AlignmentError : public Error {
 public:
  AlignmentError(std::size_t count_a, std::size_t count_b, const std::string& what)
      : Error(what), count_a_(count_a), count_b_(count_b) {}
  std::size_t count_a() const noexcept { return count_a_; }
  std::size_t count_b() const noexcept { return count_b_; }

 private:
  std::size_t count_a_;
  std::size_t count_b_;
};

/// Fitting on an empty corpus, or querying a model with V = 0.
class ModelError : public Error {
 public:
  using Error::Error;
};

/// TTR of an empty corpus, entropy of an empty event stream, normalization with V < 2.
class UndefinedMeasureError : public Error {
 public:
  using Error::Error;
};

/// An evaluation produced no events. Carries how many single-morph words were
/// skipped so the caller can report why.
class EmptyEventStreamError : public UndefinedMeasureError {
 public:
  EmptyEventStreamError(std::size_t skipped_words, const std::string& what)
      : UndefinedMeasureError(what), skipped_words_(skipped_words) {}
  std::size_t skipped_words() const noexcept { return skipped_words_; }

 private:
  std::size_t skipped_words_;
};

}  // namespace morphcx
