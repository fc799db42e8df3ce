#include "gradesim/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "gradesim/error.hpp"

namespace gradesim {

double cosine(const WeightedVector& v, const WeightedVector& w) {
  if (!v.aligned_with(w)) {
    throw Error(ErrorCode::kAlignment,
                "cosine of vectors over different vocabularies");
  }
  const auto a = v.coords();
  const auto b = w.coords();
  double dot = 0.0;
  double norm_a = 0.0;
  double norm_b = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    dot += a[j] * b[j];
    norm_a += a[j] * a[j];
    norm_b += b[j] * b[j];
  }
  if (norm_a == 0.0 || norm_b == 0.0) {
    throw Error(ErrorCode::kUndefinedSimilarity,
                "cosine is undefined for a zero vector");
  }
  const double c = dot / (std::sqrt(norm_a) * std::sqrt(norm_b));
  return std::clamp(c, 0.0, 1.0);
}

PairSimilarity pair_similarity(const TermCounts& query,
                               const TermCounts& class_doc,
                               const DocumentCollection& coll) {
  auto vocab = std::make_shared<const Vocabulary>(
      Vocabulary::merge(query.vocabulary(), class_doc.vocabulary()));
  const WeightedVector v = weighted_vector(query, vocab, coll);
  const WeightedVector vi = weighted_vector(class_doc, vocab, coll);

  PairSimilarity out;
  out.score = cosine(v, vi);
  out.shared_unique = query.vocabulary().intersection_size(class_doc.vocabulary());
  out.pair_vocab_size = vocab->size();
  return out;
}

PairSimilarity pair_similarity(const TokenSequence& query,
                               const ClassDocument& class_doc,
                               const DocumentCollection& coll) {
  return pair_similarity(TermCounts::of(query), class_doc.counts, coll);
}

ClassSimilarityMatrix class_similarity_matrix(const GradedCorpus& corpus) {
  ClassSimilarityMatrix m;
  const auto& docs = corpus.documents();
  for (std::size_t i = 0; i < Grade::kCount; ++i) {
    const auto own = docs[i].vocabulary().size();
    m.cells[i][i] = {1.0, own, own};
    for (std::size_t j = i + 1; j < Grade::kCount; ++j) {
      // Cosine over a shared pair dictionary is symmetric, so one
      // evaluation fills both cells.
      const PairSimilarity s =
          pair_similarity(docs[j].counts, docs[i].counts, corpus.collection());
      m.cells[i][j] = s;
      m.cells[j][i] = s;
    }
  }
  return m;
}

}  // namespace gradesim
