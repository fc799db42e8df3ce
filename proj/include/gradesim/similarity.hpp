#ifndef GRADESIM_SIMILARITY_HPP
#define GRADESIM_SIMILARITY_HPP

#include <cstdint>

#include "gradesim/corpus.hpp"
#include "gradesim/grade.hpp"
#include "gradesim/weighting.hpp"

namespace gradesim {

struct PairSimilarity {
  double score = 0.0;
  /// Terms present in both documents.
  std::uint64_t shared_unique = 0;
  std::uint64_t pair_vocab_size = 0;
};

/// dot(v, w) / (|v| |w|), clamped to [0, 1].
/// Throws Error(kAlignment) if the vocabularies differ and
/// Error(kUndefinedSimilarity) if either vector is all zero.
double cosine(const WeightedVector& v, const WeightedVector& w);

/// Aligns both documents on their pair dictionary and scores them.
PairSimilarity pair_similarity(const TermCounts& query,
                               const TermCounts& class_doc,
                               const DocumentCollection& coll);
PairSimilarity pair_similarity(const TokenSequence& query,
                               const ClassDocument& class_doc,
                               const DocumentCollection& coll);

/// cells[row][col]: class `col` taken as the query against class `row`.
struct ClassSimilarityMatrix {
  PerGrade<PerGrade<PairSimilarity>> cells{};

  const PairSimilarity& at(Grade row, Grade col) const {
    return cells[row.index()][col.index()];
  }
};

/// Pairwise class similarities over the four-class collection. The diagonal
/// is fixed at 1 with each class's own vocabulary size.
ClassSimilarityMatrix class_similarity_matrix(const GradedCorpus& corpus);

}  // namespace gradesim

#endif  // GRADESIM_SIMILARITY_HPP
