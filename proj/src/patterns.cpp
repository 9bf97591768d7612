#include "mdperm/patterns.hpp"

#include <algorithm>
#include <map>

namespace mdperm::patterns {

Pattern Pattern::of(std::vector<int> letters, bool consecutive) {
  if (letters.empty()) throw DomainError("pattern must have at least one letter");
  int max_letter = 0;
  for (int v : letters) {
    if (v < 1) throw DomainError("pattern letters start at 1");
    max_letter = std::max(max_letter, v);
  }
  std::vector<char> used(static_cast<size_t>(max_letter), 0);
  for (int v : letters) used[static_cast<size_t>(v - 1)] = 1;
  for (int v = 0; v < max_letter; ++v)
    if (!used[static_cast<size_t>(v)])
      throw DomainError("pattern skips letter " + std::to_string(v + 1));
  return Pattern{std::move(letters), consecutive};
}

Pattern Pattern::parse(std::string_view text) {
  bool consecutive = false;
  if (text.substr(0, 2) == "c:") {
    consecutive = true;
    text.remove_prefix(2);
  }
  std::vector<int> letters;
  for (char ch : text) {
    if (ch < '1' || ch > '9') throw DomainError("pattern literal must use digits 1-9");
    letters.push_back(ch - '0');
  }
  return of(std::move(letters), consecutive);
}

std::string Pattern::to_string() const {
  std::string out = consecutive ? "c:" : "";
  for (int v : letters) out += static_cast<char>('0' + v);
  return out;
}

namespace {

int sign_of(int a, int b) { return a < b ? -1 : (a > b ? 1 : 0); }

bool window_matches(const std::vector<int>& levels, size_t start, const Pattern& p) {
  const size_t k = p.letters.size();
  for (size_t j = 0; j + 1 < k; ++j)
    for (size_t m = j + 1; m < k; ++m)
      if (sign_of(p.letters[j], p.letters[m]) !=
          sign_of(levels[start + j], levels[start + m]))
        return false;
  return true;
}

// Depth-first scan over increasing index tuples, pruning on the first pair
// inconsistent with the pattern. Fine at desk scale (k <= 4, n <= 12).
void count_classical(const std::vector<int>& levels, const Pattern& p,
                     std::vector<size_t>& chosen, size_t next, Int& total) {
  const size_t k = p.letters.size();
  const size_t t = chosen.size();
  if (t == k) {
    ++total;
    return;
  }
  for (size_t i = next; i + (k - t) <= levels.size(); ++i) {
    bool ok = true;
    for (size_t j = 0; j < t && ok; ++j)
      ok = sign_of(p.letters[j], p.letters[t]) == sign_of(levels[chosen[j]], levels[i]);
    if (!ok) continue;
    chosen.push_back(i);
    count_classical(levels, p, chosen, i + 1, total);
    chosen.pop_back();
  }
}

} // namespace

Int count_occurrences(const LevelVector& levels, const Pattern& pattern) {
  const size_t n = levels.levels.size();
  const size_t k = pattern.letters.size();
  Int total = 0;
  if (k > n) return total;
  if (pattern.consecutive) {
    for (size_t start = 0; start + k <= n; ++start)
      if (window_matches(levels.levels, start, pattern)) ++total;
    return total;
  }
  std::vector<size_t> chosen;
  chosen.reserve(k);
  count_classical(levels.levels, pattern, chosen, 0, total);
  return total;
}

PatternStats stats(const LevelVector& levels) {
  PatternStats out;
  for (size_t i = 0; i + 1 < levels.levels.size(); ++i) {
    const int a = levels.levels[i], b = levels.levels[i + 1];
    if (a < b)
      ++out.ascents;
    else if (a > b)
      ++out.descents;
    else
      ++out.plateaux;
  }
  return out;
}

int repeated_level_count(const LevelVector& levels) {
  std::map<int, int> freq;
  for (int v : levels.levels) ++freq[v];
  int repeated = 0;
  for (const auto& [value, count] : freq)
    if (count >= 2) ++repeated;
  return repeated;
}

int repeated_level_count(const MultiPermutation& perm, LevelKind kind) {
  return repeated_level_count(level_vector(perm, kind));
}

StructureFlags classify(const LevelVector& levels) {
  const auto& v = levels.levels;
  const size_t n = v.size();
  StructureFlags flags;

  flags.weakly_increasing = true;
  for (size_t i = 0; i + 1 < n; ++i)
    if (v[i] > v[i + 1]) flags.weakly_increasing = false;

  flags.complete_plateau =
      std::all_of(v.begin(), v.end(), [&](int x) { return x == v.front(); });

  // Strictly rising steps, then strictly falling; a plateau breaks both runs.
  bool falling = false;
  flags.unimodal = true;
  long descents = 0;
  size_t first_descent = 0;
  for (size_t i = 0; i + 1 < n; ++i) {
    const int step = sign_of(v[i], v[i + 1]);
    if (step == 0) {
      flags.unimodal = false;
      break;
    }
    if (step > 0) {  // descent
      if (descents == 0) first_descent = i;
      ++descents;
      falling = true;
    } else if (falling) {  // ascent after a descent
      flags.unimodal = false;
      break;
    }
  }
  flags.hoe = n >= 2 && flags.unimodal && descents == 1 && first_descent == n - 2;
  return flags;
}

StructureFlags classify(const MultiPermutation& perm, LevelKind kind) {
  return classify(level_vector(perm, kind));
}

} // namespace mdperm::patterns
