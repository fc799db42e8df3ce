#include "gradesim/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "gradesim/error.hpp"

namespace gradesim {
namespace {

std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\f\v";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

[[noreturn]] void line_error(ErrorCode code, std::size_t line_no,
                             const std::string& msg) {
  throw Error(code, "manifest line " + std::to_string(line_no) + ": " + msg);
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kIo, "error reading " + path.string());
  return std::move(buf).str();
}

CorpusManifest parse_manifest(std::string_view text,
                              const std::filesystem::path& base_dir) {
  validate_utf8(text, "manifest");

  CorpusManifest manifest;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;

    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (trim(line).empty() || line.front() == '#') continue;

    const auto tab = line.find('\t');
    if (tab == std::string_view::npos) {
      line_error(ErrorCode::kParse, line_no, "expected <grade><TAB><path>");
    }
    const std::string_view grade_field = trim(line.substr(0, tab));
    const std::string_view path_field = trim(line.substr(tab + 1));

    int grade = 0;
    const auto [end, ec] = std::from_chars(
        grade_field.data(), grade_field.data() + grade_field.size(), grade);
    if (grade_field.empty() || ec != std::errc() ||
        end != grade_field.data() + grade_field.size()) {
      line_error(ErrorCode::kParse, line_no,
                 "grade '" + std::string(grade_field) + "' is not an integer");
    }
    if (grade < Grade::kMin || grade > Grade::kMax) {
      line_error(ErrorCode::kRange, line_no,
                 "grade " + std::to_string(grade) + " outside 1..4");
    }
    if (path_field.empty()) line_error(ErrorCode::kParse, line_no, "empty path");

    std::filesystem::path path{std::string(path_field)};
    if (path.is_relative() && !base_dir.empty()) path = base_dir / path;

    ManifestEntry entry{Grade(grade), std::move(path)};
    if (std::find(manifest.entries.begin(), manifest.entries.end(), entry) !=
        manifest.entries.end()) {
      line_error(ErrorCode::kParse, line_no,
                 "duplicate entry for grade " + std::to_string(grade));
    }
    manifest.entries.push_back(std::move(entry));
  }

  std::string missing;
  for (Grade g : kAllGrades) {
    const bool present =
        std::any_of(manifest.entries.begin(), manifest.entries.end(),
                    [g](const ManifestEntry& e) { return e.grade == g; });
    if (!present) {
      if (!missing.empty()) missing += ", ";
      missing += std::to_string(g.value());
    }
  }
  if (!missing.empty()) {
    throw Error(ErrorCode::kIncompleteCorpus,
                "manifest has no files for grade(s) " + missing);
  }
  return manifest;
}

CorpusManifest load_manifest(const std::filesystem::path& path) {
  return parse_manifest(read_file(path), path.parent_path());
}

GradedCorpus GradedCorpus::from_documents(PerGrade<TokenSequence> docs) {
  CorpusStats stats;
  DocumentCollection collection;
  Vocabulary all;

  auto make = [&](Grade g) {
    TokenSequence& tokens = docs[g.index()];
    if (tokens.empty()) {
      throw Error(ErrorCode::kEmptyClass,
                  "grade " + std::to_string(g.value()) + " has no tokens");
    }
    ClassDocument doc{g, std::move(tokens), {}};
    doc.counts = TermCounts::of(doc.tokens);
    stats.grades[g.index()] = {doc.tokens.size(), doc.vocabulary().size()};
    collection.add(doc.vocabulary());
    all = Vocabulary::merge(all, doc.vocabulary());
    return doc;
  };
  PerGrade<ClassDocument> classes{make(Grade(1)), make(Grade(2)),
                                  make(Grade(3)), make(Grade(4))};
  stats.overall_unique = all.size();
  return GradedCorpus(std::move(classes), stats, std::move(collection));
}

GradedCorpus build_corpus(const CorpusManifest& manifest) {
  PerGrade<TokenSequence> docs;
  for (const auto& entry : manifest.entries) {
    const std::string bytes = read_file(entry.path);
    TokenSequence file_tokens;
    try {
      file_tokens = tokenize(bytes);
    } catch (const DecodeError& e) {
      throw DecodeError(e.offset(), entry.path.string());
    }
    TokenSequence& doc = docs[entry.grade.index()];
    doc.source_len += file_tokens.source_len;
    doc.tokens.insert(doc.tokens.end(),
                      std::make_move_iterator(file_tokens.tokens.begin()),
                      std::make_move_iterator(file_tokens.tokens.end()));
  }
  return GradedCorpus::from_documents(std::move(docs));
}

}  // namespace gradesim
