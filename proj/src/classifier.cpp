#include "gradesim/classifier.hpp"

#include "gradesim/error.hpp"
#include "gradesim/similarity.hpp"
#include "gradesim/weighting.hpp"

namespace gradesim {

std::string_view to_string(Decision d) noexcept {
  switch (d) {
    case Decision::kContainment:
      return "containment";
    case Decision::kCosineArgmax:
      return "cosine-argmax";
  }
  return "unknown";
}

std::optional<Grade> containment_class(const Vocabulary& query_vocab,
                                       const GradedCorpus& corpus) {
  for (Grade g : kAllGrades) {
    if (query_vocab.is_subset_of(corpus.document(g).vocabulary())) return g;
  }
  return std::nullopt;
}

ClassificationResult classify(const TokenSequence& query,
                              const GradedCorpus& corpus) {
  if (query.empty()) {
    throw Error(ErrorCode::kEmptyQuery, "query text contains no tokens");
  }
  const TermCounts counts = TermCounts::of(query);

  DocumentCollection coll = corpus.collection();
  coll.add(counts.vocabulary());

  ClassificationResult result;
  for (Grade g : kAllGrades) {
    const PairSimilarity s =
        pair_similarity(counts, corpus.document(g).counts, coll);
    result.scores[g.index()] = s.score;
    result.shared_unique[g.index()] = s.shared_unique;
  }

  if (auto contained = containment_class(counts.vocabulary(), corpus)) {
    result.decision = Decision::kContainment;
    result.chosen_grade = *contained;
    result.scores[contained->index()] = 1.0;
    return result;
  }

  result.decision = Decision::kCosineArgmax;
  Grade best = kAllGrades.front();
  for (Grade g : kAllGrades) {
    if (result.scores[g.index()] > result.scores[best.index()]) best = g;
  }
  result.chosen_grade = best;
  return result;
}

ClassificationResult classify(std::string_view raw_text,
                              const GradedCorpus& corpus) {
  return classify(tokenize(raw_text), corpus);
}

}  // namespace gradesim
