#include "report.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "json.hpp"

namespace gradesim::cli {
namespace {

std::int64_t pow10(int p) {
  std::int64_t r = 1;
  while (p-- > 0) r *= 10;
  return r;
}

void check_precision(int precision) {
  if (precision < 1 || precision > kMaxPrecision) {
    throw std::invalid_argument("precision must be in 1.." +
                                std::to_string(kMaxPrecision));
  }
}

const char* decision_name(gradesim_decision d) {
  return d == GRADESIM_DECISION_CONTAINMENT ? "containment" : "cosine-argmax";
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

// Left-aligned columns separated by two spaces.
std::string layout(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) {
      width[c] = std::max(width[c], row[c].size());
    }
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += c + 1 == row.size() ? row[c] : pad(row[c], width[c] + 2);
    }
    out += line + '\n';
  }
  return out;
}

std::string tsv(const std::vector<std::vector<std::string>>& rows) {
  std::string out;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += '\t';
      out += row[c];
    }
    out += '\n';
  }
  return out;
}

}  // namespace

double round_score(double value, int precision) {
  check_precision(precision);
  const std::int64_t scale = pow10(precision);
  return static_cast<double>(std::llround(value * static_cast<double>(scale))) /
         static_cast<double>(scale);
}

std::string format_score(double value, int precision) {
  check_precision(precision);
  if (value == 1.0) return "1";
  const std::int64_t scale = pow10(precision);
  const std::int64_t scaled = std::llround(value * static_cast<double>(scale));
  const std::int64_t mag = scaled < 0 ? -scaled : scaled;
  std::ostringstream os;
  if (scaled < 0) os << '-';
  os << mag / scale << '.' << std::setw(precision) << std::setfill('0')
     << mag % scale;
  return os.str();
}

std::string render_stats(const GradeStatsTable& grades,
                         std::uint64_t overall_unique, const OutputSpec& spec) {
  std::uint64_t total = 0;
  for (const auto& g : grades) total += g.total_tokens;

  if (spec.format == Format::kJson) {
    nlohmann::ordered_json j;
    j["grades"] = nlohmann::ordered_json::array();
    for (int g = 1; g <= GRADESIM_NUM_GRADES; ++g) {
      const auto& s = grades[g - 1];
      j["grades"].push_back({{"grade", g},
                             {"total_tokens", s.total_tokens},
                             {"unique_tokens", s.unique_tokens}});
    }
    j["total_tokens"] = total;
    j["overall_unique"] = overall_unique;
    return j.dump(2) + '\n';
  }

  std::vector<std::vector<std::string>> rows;
  rows.push_back({"grade", "total_tokens", "unique_tokens"});
  for (int g = 1; g <= GRADESIM_NUM_GRADES; ++g) {
    const auto& s = grades[g - 1];
    rows.push_back({std::to_string(g), std::to_string(s.total_tokens),
                    std::to_string(s.unique_tokens)});
  }
  rows.push_back({"overall", std::to_string(total), std::to_string(overall_unique)});
  return spec.format == Format::kTsv ? tsv(rows) : layout(rows);
}

std::string render_matrix(std::span<const gradesim_pair_similarity> cells,
                          const OutputSpec& spec) {
  constexpr int n = GRADESIM_NUM_GRADES;
  if (cells.size() != static_cast<std::size_t>(n * n)) {
    throw std::invalid_argument("matrix must have 16 cells");
  }
  auto at = [&](int r, int c) -> const gradesim_pair_similarity& {
    return cells[static_cast<std::size_t>((r - 1) * n + (c - 1))];
  };

  if (spec.format == Format::kJson) {
    nlohmann::ordered_json j;
    j["cells"] = nlohmann::ordered_json::array();
    for (int r = 1; r <= n; ++r) {
      for (int c = 1; c <= n; ++c) {
        const auto& cell = at(r, c);
        j["cells"].push_back({{"row", r},
                              {"col", c},
                              {"score", round_score(cell.score, spec.precision)},
                              {"shared_unique", cell.shared_unique},
                              {"pair_vocab_size", cell.pair_vocab_size}});
      }
    }
    return j.dump(2) + '\n';
  }

  std::vector<std::vector<std::string>> rows;
  if (spec.format == Format::kTsv) {
    rows.push_back({"row", "col", "score", "shared_unique", "pair_vocab_size"});
    for (int r = 1; r <= n; ++r) {
      for (int c = 1; c <= n; ++c) {
        const auto& cell = at(r, c);
        rows.push_back({std::to_string(r), std::to_string(c),
                        format_score(cell.score, spec.precision),
                        std::to_string(cell.shared_unique),
                        std::to_string(cell.pair_vocab_size)});
      }
    }
    return tsv(rows);
  }

  rows.push_back({""});
  for (int c = 1; c <= n; ++c) rows[0].push_back("grade " + std::to_string(c));
  for (int r = 1; r <= n; ++r) {
    std::vector<std::string> row{"grade " + std::to_string(r)};
    for (int c = 1; c <= n; ++c) {
      const auto& cell = at(r, c);
      row.push_back(format_score(cell.score, spec.precision) + " " +
                    std::to_string(cell.shared_unique));
    }
    rows.push_back(std::move(row));
  }
  return layout(rows);
}

std::string render_classification(const gradesim_classification& result,
                                  const OutputSpec& spec) {
  const std::string recommendation =
      "recommended for grade " + std::to_string(result.chosen_grade);

  if (spec.format == Format::kJson) {
    nlohmann::ordered_json j;
    j["grades"] = nlohmann::ordered_json::array();
    for (int g = 1; g <= GRADESIM_NUM_GRADES; ++g) {
      j["grades"].push_back(
          {{"grade", g},
           {"score", round_score(result.scores[g - 1], spec.precision)},
           {"shared_unique", result.shared_unique[g - 1]}});
    }
    j["chosen_grade"] = result.chosen_grade;
    j["decision"] = decision_name(result.decision);
    j["recommendation"] = recommendation;
    return j.dump(2) + '\n';
  }

  std::vector<std::vector<std::string>> rows;
  rows.push_back({"grade", "score", "shared_unique"});
  for (int g = 1; g <= GRADESIM_NUM_GRADES; ++g) {
    rows.push_back({std::to_string(g),
                    format_score(result.scores[g - 1], spec.precision),
                    std::to_string(result.shared_unique[g - 1])});
  }
  if (spec.format == Format::kTsv) {
    rows.push_back({"chosen_grade", std::to_string(result.chosen_grade)});
    rows.push_back({"decision", decision_name(result.decision)});
    rows.push_back({"recommendation", recommendation});
    return tsv(rows);
  }
  std::string out = layout(rows);
  out += "decision: " + std::string(decision_name(result.decision)) + '\n';
  out += "chosen grade: " + std::to_string(result.chosen_grade) + '\n';
  out += recommendation + '\n';
  return out;
}

}  // namespace gradesim::cli
