#pragma once

#include <vector>

#include "mdperm/bigint.hpp"
#include "mdperm/core.hpp"

namespace mdperm::formulas {

/// Number of canonical (3,n)-permutations with exactly k repeated MaxEntry
/// levels, from the two-term recurrence with memoized rows. Referentially
/// transparent and safe for concurrent callers.
Int repeats_count(int n, int k);

/// The printed closed forms for columns k = 1, 2, 3 (DomainError otherwise);
/// divisions are checked exact.
Int repeats_closed_form(int n, int k);

/// Count of weakly increasing (3,n)-permutations (the Springer numbers), as
/// the 2^k-weighted row sum of the repeats triangle.
Int weakly_increasing_count(int n);
/// The same number through the Euler-number convolution recurrence.
Int weakly_increasing_count_euler(int n);

/// Count of unimodal (3,n)-permutations; zero at n = 0 by convention.
Int unimodal_count(int n);

/// Count of hoe (d,n)-permutations, closed form (geometric sum of
/// 2^(d-1) - 1); requires n >= 2, d >= 2.
Int hoe_count(int n, int d);
Int hoe_count_recurrence(int n, int d);

/// Extremes of the EntrySum level statistics over all (d,n)-permutations:
/// the least attainable maximum level and the greatest attainable minimum.
struct LevelBounds {
  int min_of_max = 0;  // smallest possible max level
  int max_of_min = 0;  // largest possible min level
};
LevelBounds level_bounds(int d, int n);

/// A (d,n)-permutation whose EntrySum max level meets the lower bound,
/// assembled from the reversal block and, for even d, one three-row block.
MultiPermutation minimal_witness(int d, int n);

/// Rows defined by per-row cyclic shifts: entry (i,j) is last_column[i] +
/// j * shift[i] mod n. Every shift must be coprime to n.
struct ShiftSpec {
  int d = 4;
  int n = 1;
  std::vector<int> shifts;       // one per stored row, each in 1..n-1
  std::vector<int> last_column;  // entries of the final column
};

MultiPermutation shift_form(const ShiftSpec& spec);

/// Decision for 4-dimensional odd-length shift forms normalized to
/// shifts[0] == 1 and last_column[0] == n-1: whether the permutation has
/// minimal EntrySum max level. Covers the two characterized shift classes
/// (second shift 1 or (n-1)/2); others raise OutOfTheoremScope.
bool shift_form_is_minimal(const ShiftSpec& spec);

/// Number of (3,n)-permutations whose levels stay within c of the minimum:
/// c!(c+1)^(n-c) n!, or without the n! factor for the canonical set.
Int c_bounded_count(int n, int c, bool canonical);

/// Number of distinct columns with entry sum `level` available to
/// (d,n)-permutations: [x^level] (1 + x + ... + x^(n-1))^(d-1).
Int elements_on_level(int d, int n, long level);

/// Total number of runs of d-1 equal consecutive MaxEntry levels across all
/// (d,n)-permutations; requires n >= d-1.
Int total_plateaux_max_entry(int d, int n);

/// Total ascents (equivalently descents) across all (3,n)-permutations; the
/// same for both level kinds.
Int total_ascents_dim3(int n);

/// Total number of k-plateaux across all (3,n)-permutations under EntrySum;
/// requires 2 <= k <= n.
Int total_k_plateaux_entry_sum(int n, int k);

} // namespace mdperm::formulas
