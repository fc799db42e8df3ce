#include "gradesim/weighting.hpp"

#include <algorithm>
#include <cmath>

#include "gradesim/error.hpp"

namespace gradesim {

TermCounts TermCounts::of(const TokenSequence& doc) {
  std::vector<std::string> sorted = doc.tokens;
  std::sort(sorted.begin(), sorted.end());

  TermCounts tc;
  tc.total_ = sorted.size();
  std::vector<std::string> terms;
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i + 1;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    terms.push_back(std::move(sorted[i]));
    tc.counts_.push_back(j - i);
    i = j;
  }
  tc.vocab_ = Vocabulary::of(std::move(terms));
  return tc;
}

std::uint64_t TermCounts::count(std::string_view term) const {
  const auto pos = vocab_.position(term);
  return pos ? counts_[*pos] : 0;
}

DocumentCollection DocumentCollection::of(std::span<const TokenSequence> docs) {
  DocumentCollection coll;
  for (const auto& doc : docs) coll.add(doc);
  return coll;
}

void DocumentCollection::add(const Vocabulary& doc_vocab) {
  if (doc_vocab.empty()) {
    throw Error(ErrorCode::kDomain, "collection documents must be nonempty");
  }
  for (const auto& term : doc_vocab) {
    auto it = df_.find(term);
    if (it == df_.end()) {
      df_.emplace(term, 1u);
    } else {
      ++it->second;
    }
  }
  ++size_;
}

std::uint32_t DocumentCollection::document_frequency(
    std::string_view term) const {
  auto it = df_.find(term);
  return it == df_.end() ? 0u : it->second;
}

double term_frequency(std::string_view term, const TokenSequence& doc) {
  if (doc.empty()) {
    throw Error(ErrorCode::kDomain, "term frequency of an empty document");
  }
  const auto n = std::count(doc.tokens.begin(), doc.tokens.end(), term);
  return static_cast<double>(n) / static_cast<double>(doc.size());
}

double inverse_document_frequency(std::size_t n_docs, std::size_t df) {
  if (n_docs == 0) {
    throw Error(ErrorCode::kDomain, "IDF over an empty collection");
  }
  if (df > n_docs) {
    throw Error(ErrorCode::kDomain, "document frequency exceeds collection size");
  }
  return std::log(static_cast<double>(1 + n_docs) / static_cast<double>(1 + df)) +
         1.0;
}

double inverse_document_frequency(std::string_view term,
                                  const DocumentCollection& coll) {
  return inverse_document_frequency(coll.size(), coll.document_frequency(term));
}

WeightedVector::WeightedVector(std::shared_ptr<const Vocabulary> vocab,
                               std::vector<double> coords)
    : vocab_(std::move(vocab)), coords_(std::move(coords)) {
  if (!vocab_) vocab_ = std::make_shared<const Vocabulary>();
  if (coords_.size() != vocab_->size()) {
    throw Error(ErrorCode::kDomain,
                "vector has " + std::to_string(coords_.size()) +
                    " coordinates for a vocabulary of " +
                    std::to_string(vocab_->size()));
  }
  for (double c : coords_) {
    if (!(c >= 0.0)) {
      throw Error(ErrorCode::kDomain, "TF-IDF coordinates must be nonnegative");
    }
  }
}

WeightedVector weighted_vector(const TermCounts& doc,
                               std::shared_ptr<const Vocabulary> vocab,
                               const DocumentCollection& coll) {
  if (!vocab || vocab->empty()) {
    throw Error(ErrorCode::kDomain, "weighted vector over an empty vocabulary");
  }
  if (doc.total() == 0) {
    throw Error(ErrorCode::kDomain, "weighted vector of an empty document");
  }

  const auto& doc_terms = doc.vocabulary().terms();
  const auto counts = doc.counts();
  const double len = static_cast<double>(doc.total());

  std::vector<double> coords(vocab->size(), 0.0);
  std::size_t k = 0;
  for (std::size_t j = 0; j < vocab->size(); ++j) {
    const std::string& term = (*vocab)[j];
    while (k < doc_terms.size() && doc_terms[k] < term) ++k;
    if (k < doc_terms.size() && doc_terms[k] == term) {
      const double tf = static_cast<double>(counts[k]) / len;
      coords[j] = tf * inverse_document_frequency(term, coll);
    }
  }
  return WeightedVector(std::move(vocab), std::move(coords));
}

WeightedVector weighted_vector(const TokenSequence& doc, const Vocabulary& vocab,
                               const DocumentCollection& coll) {
  return weighted_vector(TermCounts::of(doc),
                         std::make_shared<const Vocabulary>(vocab), coll);
}

Vocabulary pair_vocabulary(const TokenSequence& a, const TokenSequence& b) {
  return Vocabulary::merge(Vocabulary::of(a), Vocabulary::of(b));
}

}  // namespace gradesim
