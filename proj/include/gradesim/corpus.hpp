#ifndef GRADESIM_CORPUS_HPP
#define GRADESIM_CORPUS_HPP

#include <cstdint>
#include <filesystem>
#include <string_view>
#include <vector>

#include "gradesim/grade.hpp"
#include "gradesim/tokenizer.hpp"
#include "gradesim/vocabulary.hpp"
#include "gradesim/weighting.hpp"

namespace gradesim {

struct ManifestEntry {
  Grade grade;
  std::filesystem::path path;

  bool operator==(const ManifestEntry&) const = default;
};

/// Which files make up each grade. Every grade 1..4 has at least one entry.
struct CorpusManifest {
  std::vector<ManifestEntry> entries;
};

/// Parses `<grade>\t<path>` lines; '#' lines and blank lines are skipped.
/// Relative paths are resolved against `base_dir`.
CorpusManifest parse_manifest(std::string_view text,
                              const std::filesystem::path& base_dir = {});

/// Reads and parses a manifest file. Relative entry paths are taken
/// relative to the manifest's own directory.
CorpusManifest load_manifest(const std::filesystem::path& path);

/// All textbooks of one grade concatenated into a single document.
struct ClassDocument {
  Grade grade;
  TokenSequence tokens;
  TermCounts counts;

  const Vocabulary& vocabulary() const noexcept { return counts.vocabulary(); }
};

struct GradeStats {
  std::uint64_t total_tokens = 0;
  std::uint64_t unique_tokens = 0;

  bool operator==(const GradeStats&) const = default;
};

struct CorpusStats {
  PerGrade<GradeStats> grades{};
  /// Size of the union of the four grade vocabularies.
  std::uint64_t overall_unique = 0;

  bool operator==(const CorpusStats&) const = default;
};

/// Immutable four-grade reference corpus.
class GradedCorpus {
 public:
  /// Takes per-grade token sequences directly; used by build_corpus and tests.
  static GradedCorpus from_documents(PerGrade<TokenSequence> docs);

  const ClassDocument& document(Grade g) const { return classes_[g.index()]; }
  const PerGrade<ClassDocument>& documents() const noexcept { return classes_; }
  const CorpusStats& stats() const noexcept { return stats_; }

  /// The four class documents as an IDF collection (N = 4).
  const DocumentCollection& collection() const noexcept { return collection_; }

 private:
  GradedCorpus(PerGrade<ClassDocument> classes, CorpusStats stats,
               DocumentCollection collection)
      : classes_(std::move(classes)),
        stats_(stats),
        collection_(std::move(collection)) {}

  PerGrade<ClassDocument> classes_;
  CorpusStats stats_;
  DocumentCollection collection_;
};

/// Tokenizes every file in manifest order and groups by grade.
GradedCorpus build_corpus(const CorpusManifest& manifest);

inline const CorpusStats& corpus_stats(const GradedCorpus& corpus) {
  return corpus.stats();
}

/// Reads a whole file as bytes. Throws Error(kIo) naming the path.
std::string read_file(const std::filesystem::path& path);

}  // namespace gradesim

#endif  // GRADESIM_CORPUS_HPP
