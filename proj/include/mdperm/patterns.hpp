#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mdperm/bigint.hpp"
#include "mdperm/core.hpp"

namespace mdperm::patterns {

/// A pattern word over {1..s} in which equal letters demand equal levels,
/// smaller letters strictly smaller levels. Consecutive patterns match only
/// adjacent columns.
struct Pattern {
  std::vector<int> letters;
  bool consecutive = false;

  /// Validating factory: letters non-empty, every value 1..max(letters) used.
  static Pattern of(std::vector<int> letters, bool consecutive = false);

  /// CLI literal syntax: digits 1-9, optional "c:" prefix for consecutive
  /// (e.g. "212", "c:21").
  static Pattern parse(std::string_view text);

  int size() const { return static_cast<int>(letters.size()); }
  std::string to_string() const;
};

/// Counts of the three length-2 consecutive patterns; they partition the
/// n-1 adjacent pairs of a length-n level vector.
struct PatternStats {
  long ascents = 0;
  long descents = 0;
  long plateaux = 0;
};

/// Number of occurrences of the pattern in the level vector: index tuples
/// i1 < ... < ik (adjacent when consecutive) whose level sub-word is
/// order-isomorphic to the pattern, equalities included.
Int count_occurrences(const LevelVector& levels, const Pattern& pattern);

PatternStats stats(const LevelVector& levels);

/// Number of distinct level values occurring at least twice.
int repeated_level_count(const MultiPermutation& perm, LevelKind kind);
int repeated_level_count(const LevelVector& levels);

/// Structural recognizers on the level vector.
struct StructureFlags {
  bool weakly_increasing = false;  // no descent anywhere (avoids 21)
  bool unimodal = false;           // strictly rising run then strictly falling run
  bool hoe = false;                // unimodal with its single descent at the last step
  bool complete_plateau = false;   // all levels equal
};

StructureFlags classify(const MultiPermutation& perm, LevelKind kind);
StructureFlags classify(const LevelVector& levels);

} // namespace mdperm::patterns
