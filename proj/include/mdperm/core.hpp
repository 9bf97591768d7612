#pragma once

#include <compare>
#include <string>
#include <vector>

#include "mdperm/errors.hpp"

namespace mdperm {

/// Which level function assigns an integer to each column.
enum class LevelKind {
  MaxEntry,  // level of a column = its maximum entry
  EntrySum,  // level of a column = sum of its entries
};

std::string to_string(LevelKind kind);

/// A d-dimensional permutation of length n, stored as its d-1 explicit rows.
///
/// Each row is a bijection on {0,...,n-1}. The leading identity row is
/// implicit: it is never stored and never contributes to levels. Entries are
/// 0-based so that every entry-sum level 0..(d-1)(n-1) is attainable.
class MultiPermutation {
 public:
  /// Validating constructor; throws EmptyPermutation / RaggedRows /
  /// NotABijection. The dimension is row count + 1.
  static MultiPermutation from_rows(std::vector<std::vector<int>> rows);

  int dimension() const { return static_cast<int>(rows_.size()) + 1; }
  int length() const { return n_; }

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  /// Stored row r, 0-based (row 0 holds the second dimension).
  const std::vector<int>& row(int r) const { return rows_[static_cast<size_t>(r)]; }

  /// Column at 1-based position i: the d-1 stored entries, top to bottom.
  std::vector<int> column(int position) const;

  auto operator<=>(const MultiPermutation&) const = default;

 private:
  MultiPermutation(std::vector<std::vector<int>> rows, int n)
      : rows_(std::move(rows)), n_(n) {}

  std::vector<std::vector<int>> rows_;
  int n_ = 0;
};

/// A column together with its 1-based position.
struct Element {
  int position = 0;
  std::vector<int> entries;
};

Element element(const MultiPermutation& perm, int position);

/// Per-column levels of a permutation under the chosen level function.
struct LevelVector {
  std::vector<int> levels;
  LevelKind kind = LevelKind::MaxEntry;

  int length() const { return static_cast<int>(levels.size()); }
  int min() const;
  int max() const;
};

LevelVector level_vector(const MultiPermutation& perm, LevelKind kind);

/// Entry-wise complement (entry e becomes n-1-e in every row); an involution.
MultiPermutation complement(const MultiPermutation& perm);

/// Columns in reversed order; an involution. Ascents of the result are the
/// descents of the input for either level kind.
MultiPermutation reverse(const MultiPermutation& perm);

/// True iff the first stored row is the identity 0,1,...,n-1.
bool is_canonical(const MultiPermutation& perm);

} // namespace mdperm
