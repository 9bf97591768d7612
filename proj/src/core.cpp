#include "mdperm/core.hpp"

#include <algorithm>

#include "mdperm/bigint.hpp"

namespace mdperm {

std::string to_string(LevelKind kind) {
  return kind == LevelKind::MaxEntry ? "max" : "sum";
}

MultiPermutation MultiPermutation::from_rows(std::vector<std::vector<int>> rows) {
  if (rows.empty()) throw EmptyPermutation("a permutation needs at least one stored row");
  const size_t n = rows.front().size();
  if (n == 0) throw EmptyPermutation("rows must be non-empty");
  std::vector<char> seen(n);
  for (size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != n)
      throw RaggedRows("row " + std::to_string(r) + " has length " +
                       std::to_string(rows[r].size()) + ", expected " + std::to_string(n));
    std::fill(seen.begin(), seen.end(), 0);
    for (int e : rows[r]) {
      if (e < 0 || static_cast<size_t>(e) >= n)
        throw NotABijection("entry " + std::to_string(e) + " out of range in row " +
                            std::to_string(r));
      if (seen[static_cast<size_t>(e)])
        throw NotABijection("entry " + std::to_string(e) + " repeated in row " +
                            std::to_string(r));
      seen[static_cast<size_t>(e)] = 1;
    }
  }
  return MultiPermutation(std::move(rows), static_cast<int>(n));
}

std::vector<int> MultiPermutation::column(int position) const {
  std::vector<int> col;
  col.reserve(rows_.size());
  for (const auto& row : rows_) col.push_back(row[static_cast<size_t>(position - 1)]);
  return col;
}

Element element(const MultiPermutation& perm, int position) {
  return Element{position, perm.column(position)};
}

int LevelVector::min() const { return *std::min_element(levels.begin(), levels.end()); }
int LevelVector::max() const { return *std::max_element(levels.begin(), levels.end()); }

LevelVector level_vector(const MultiPermutation& perm, LevelKind kind) {
  const int n = perm.length();
  LevelVector out;
  out.kind = kind;
  out.levels.assign(static_cast<size_t>(n), 0);
  if (kind == LevelKind::MaxEntry) {
    for (const auto& row : perm.rows())
      for (int i = 0; i < n; ++i)
        out.levels[static_cast<size_t>(i)] =
            std::max(out.levels[static_cast<size_t>(i)], row[static_cast<size_t>(i)]);
  } else {
    for (const auto& row : perm.rows())
      for (int i = 0; i < n; ++i) out.levels[static_cast<size_t>(i)] += row[static_cast<size_t>(i)];
  }
  return out;
}

MultiPermutation complement(const MultiPermutation& perm) {
  const int n = perm.length();
  std::vector<std::vector<int>> rows = perm.rows();
  for (auto& row : rows)
    for (int& e : row) e = n - 1 - e;
  return MultiPermutation::from_rows(std::move(rows));
}

MultiPermutation reverse(const MultiPermutation& perm) {
  std::vector<std::vector<int>> rows = perm.rows();
  for (auto& row : rows) std::reverse(row.begin(), row.end());
  return MultiPermutation::from_rows(std::move(rows));
}

bool is_canonical(const MultiPermutation& perm) {
  const auto& first = perm.row(0);
  for (int i = 0; i < perm.length(); ++i)
    if (first[static_cast<size_t>(i)] != i) return false;
  return true;
}

} // namespace mdperm
