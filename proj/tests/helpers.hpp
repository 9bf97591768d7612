#pragma once

#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "mdperm/core.hpp"

namespace mdperm::test {

/// Builds a permutation from digit-string rows, e.g. perm({"01423", "40132"}).
inline MultiPermutation perm(std::initializer_list<std::string> rows) {
  std::vector<std::vector<int>> parsed;
  for (const auto& row : rows) {
    std::vector<int> entries;
    for (char ch : row) entries.push_back(ch - '0');
    parsed.push_back(std::move(entries));
  }
  return MultiPermutation::from_rows(std::move(parsed));
}

inline LevelVector levels(std::vector<int> values, LevelKind kind = LevelKind::MaxEntry) {
  return LevelVector{std::move(values), kind};
}

inline MultiPermutation random_permutation(int d, int n, std::mt19937& rng) {
  std::vector<std::vector<int>> rows(static_cast<size_t>(d - 1));
  for (auto& row : rows) {
    row.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) row[static_cast<size_t>(i)] = i;
    std::shuffle(row.begin(), row.end(), rng);
  }
  return MultiPermutation::from_rows(std::move(rows));
}

} // namespace mdperm::test
