#include "gradesim/vocabulary.hpp"

#include <algorithm>
#include <iterator>

namespace gradesim {

Vocabulary Vocabulary::of(std::vector<std::string> terms) {
  std::sort(terms.begin(), terms.end());
  terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
  return Vocabulary(std::move(terms));
}

Vocabulary Vocabulary::of(const TokenSequence& seq) {
  return of(seq.tokens);
}

Vocabulary Vocabulary::merge(const Vocabulary& a, const Vocabulary& b) {
  std::vector<std::string> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.terms_.begin(), a.terms_.end(), b.terms_.begin(),
                 b.terms_.end(), std::back_inserter(out));
  return Vocabulary(std::move(out));
}

std::optional<std::size_t> Vocabulary::position(std::string_view term) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), term,
                             [](const std::string& a, std::string_view b) {
                               return std::string_view(a) < b;
                             });
  if (it == terms_.end() || *it != term) return std::nullopt;
  return static_cast<std::size_t>(it - terms_.begin());
}

bool Vocabulary::contains(std::string_view term) const {
  return position(term).has_value();
}

bool Vocabulary::is_subset_of(const Vocabulary& other) const {
  return std::includes(other.terms_.begin(), other.terms_.end(),
                       terms_.begin(), terms_.end());
}

std::size_t Vocabulary::intersection_size(const Vocabulary& other) const {
  std::size_t n = 0;
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() && b != other.terms_.end()) {
    if (*a < *b) {
      ++a;
    } else if (*b < *a) {
      ++b;
    } else {
      ++n;
      ++a;
      ++b;
    }
  }
  return n;
}

}  // namespace gradesim
