#ifndef GRADESIM_TESTS_ORACLE_BRUTE_FORCE_HPP
#define GRADESIM_TESTS_ORACLE_BRUTE_FORCE_HPP

// Test-only reference classifier. Deliberately shares no code with the
// library: vocabularies, document frequencies, TF, IDF and cosine are all
// recomputed with plain loops over token lists.

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <vector>

namespace oracle {

using Doc = std::vector<std::string>;

inline bool has(const Doc& d, const std::string& t) {
  for (const auto& x : d) {
    if (x == t) return true;
  }
  return false;
}

inline Doc distinct(const Doc& d) {
  Doc out;
  for (const auto& t : d) {
    if (!has(out, t)) out.push_back(t);
  }
  return out;
}

inline double tf(const std::string& t, const Doc& d) {
  int n = 0;
  for (const auto& x : d) n += (x == t);
  return static_cast<double>(n) / static_cast<double>(d.size());
}

inline double idf(const std::string& t, const std::vector<Doc>& coll) {
  int df = 0;
  for (const auto& d : coll) df += has(d, t) ? 1 : 0;
  const double n = static_cast<double>(coll.size());
  return std::log((1.0 + n) / (1.0 + df)) + 1.0;
}

inline double pair_cosine(const Doc& q, const Doc& c, const std::vector<Doc>& coll) {
  Doc dict = distinct(q);
  for (const auto& t : distinct(c)) {
    if (!has(dict, t)) dict.push_back(t);
  }
  double s = 0, p = 0, r = 0;
  for (const auto& t : dict) {
    const double v = has(q, t) ? tf(t, q) * idf(t, coll) : 0.0;
    const double w = has(c, t) ? tf(t, c) * idf(t, coll) : 0.0;
    s += v * w;
    p += v * v;
    r += w * w;
  }
  return s / (std::sqrt(p) * std::sqrt(r));
}

inline int shared(const Doc& a, const Doc& b) {
  int n = 0;
  for (const auto& t : distinct(a)) n += has(b, t) ? 1 : 0;
  return n;
}

struct Result {
  int grade = 0;
  bool containment = false;
  std::array<double, 4> scores{};
  std::array<int, 4> shared{};
};

inline Result classify(const std::array<Doc, 4>& classes, const Doc& query) {
  std::vector<Doc> coll(classes.begin(), classes.end());
  coll.push_back(query);

  Result r;
  for (int g = 0; g < 4; ++g) {
    r.scores[g] = pair_cosine(query, classes[g], coll);
    r.shared[g] = shared(query, classes[g]);
  }
  for (int g = 0; g < 4; ++g) {
    bool all_in = true;
    for (const auto& t : query) all_in = all_in && has(classes[g], t);
    if (all_in) {
      r.grade = g + 1;
      r.containment = true;
      r.scores[g] = 1.0;
      return r;
    }
  }
  int best = 0;
  for (int g = 1; g < 4; ++g) {
    if (r.scores[g] > r.scores[best]) best = g;
  }
  r.grade = best + 1;
  return r;
}

}  // namespace oracle

#endif  // GRADESIM_TESTS_ORACLE_BRUTE_FORCE_HPP
