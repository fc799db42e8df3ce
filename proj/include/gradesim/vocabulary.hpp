#ifndef GRADESIM_VOCABULARY_HPP
#define GRADESIM_VOCABULARY_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gradesim/tokenizer.hpp"

namespace gradesim {

/// Distinct terms in strictly ascending code-point order.
///
/// std::string compares bytes as unsigned char, and UTF-8 byte order equals
/// code-point order, so plain string comparison gives the required ordering.
class Vocabulary {
 public:
  Vocabulary() = default;

  static Vocabulary of(const TokenSequence& seq);
  static Vocabulary of(std::vector<std::string> terms);

  /// Sorted union of the two term sets.
  static Vocabulary merge(const Vocabulary& a, const Vocabulary& b);

  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }
  const std::string& operator[](std::size_t i) const { return terms_[i]; }
  const std::vector<std::string>& terms() const noexcept { return terms_; }
  auto begin() const noexcept { return terms_.begin(); }
  auto end() const noexcept { return terms_.end(); }

  bool contains(std::string_view term) const;
  std::optional<std::size_t> position(std::string_view term) const;

  bool is_subset_of(const Vocabulary& other) const;
  std::size_t intersection_size(const Vocabulary& other) const;

  bool operator==(const Vocabulary&) const = default;

 private:
  explicit Vocabulary(std::vector<std::string> sorted_unique)
      : terms_(std::move(sorted_unique)) {}

  std::vector<std::string> terms_;
};

}  // namespace gradesim

#endif  // GRADESIM_VOCABULARY_HPP
