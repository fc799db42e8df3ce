#ifndef GRADESIM_WEIGHTING_HPP
#define GRADESIM_WEIGHTING_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gradesim/tokenizer.hpp"
#include "gradesim/vocabulary.hpp"

namespace gradesim {

/// Occurrence count of every distinct term of one document.
class TermCounts {
 public:
  TermCounts() = default;

  static TermCounts of(const TokenSequence& doc);

  const Vocabulary& vocabulary() const noexcept { return vocab_; }
  /// counts()[j] is the count of vocabulary()[j].
  std::span<const std::uint64_t> counts() const noexcept { return counts_; }
  std::uint64_t count(std::string_view term) const;
  std::uint64_t total() const noexcept { return total_; }

 private:
  Vocabulary vocab_;
  std::vector<std::uint64_t> counts_;
  std::uint64_t total_ = 0;
};

/// Reference collection for document frequencies. Only the term sets of
/// its documents matter.
class DocumentCollection {
 public:
  DocumentCollection() = default;

  static DocumentCollection of(std::span<const TokenSequence> docs);

  /// Appends one document by its vocabulary. Throws Error(kDomain) if empty.
  void add(const Vocabulary& doc_vocab);
  void add(const TokenSequence& doc) { add(Vocabulary::of(doc)); }

  std::size_t size() const noexcept { return size_; }
  std::uint32_t document_frequency(std::string_view term) const;

 private:
  std::size_t size_ = 0;
  std::map<std::string, std::uint32_t, std::less<>> df_;
};

/// count(term in doc) / len(doc). Throws Error(kDomain) for an empty doc.
double term_frequency(std::string_view term, const TokenSequence& doc);

/// Smoothed IDF: ln((1 + N) / (1 + df)) + 1. Throws Error(kDomain) if N = 0.
double inverse_document_frequency(std::string_view term,
                                  const DocumentCollection& coll);
double inverse_document_frequency(std::size_t n_docs, std::size_t df);

/// TF-IDF coordinates of one document over a given vocabulary, zero where
/// the term is absent from the document.
class WeightedVector {
 public:
  /// Throws Error(kDomain) on length mismatch or a negative coordinate.
  WeightedVector(std::shared_ptr<const Vocabulary> vocab,
                 std::vector<double> coords);

  const Vocabulary& vocabulary() const noexcept { return *vocab_; }
  const std::shared_ptr<const Vocabulary>& shared_vocabulary() const noexcept {
    return vocab_;
  }
  std::span<const double> coords() const noexcept { return coords_; }
  std::size_t size() const noexcept { return coords_.size(); }

  bool aligned_with(const WeightedVector& other) const {
    return vocab_ == other.vocab_ || *vocab_ == *other.vocab_;
  }

 private:
  std::shared_ptr<const Vocabulary> vocab_;
  std::vector<double> coords_;
};

/// Throws Error(kDomain) for an empty vocabulary or empty document.
WeightedVector weighted_vector(const TermCounts& doc,
                               std::shared_ptr<const Vocabulary> vocab,
                               const DocumentCollection& coll);
WeightedVector weighted_vector(const TokenSequence& doc, const Vocabulary& vocab,
                               const DocumentCollection& coll);

/// The pair dictionary: sorted union of the distinct terms of a and b.
Vocabulary pair_vocabulary(const TokenSequence& a, const TokenSequence& b);

}  // namespace gradesim

#endif  // GRADESIM_WEIGHTING_HPP
