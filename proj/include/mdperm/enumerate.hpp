#pragma once

#include <functional>
#include <map>
#include <vector>

#include "mdperm/bigint.hpp"
#include "mdperm/core.hpp"
#include "mdperm/patterns.hpp"

namespace mdperm::enumeration {

inline Int default_guard() { return Int(100000000); }

/// Which permutations to walk: all of the (d,n) space or only the canonical
/// ones (first stored row fixed to the identity). The guard bounds the state
/// count; exhaustive walks refuse to start beyond it.
struct EnumerationScope {
  int d = 3;
  int n = 1;
  bool canonical_only = false;
  Int max_states = default_guard();
};

/// (n!)^(d-1), or (n!)^(d-2) for canonical scopes.
Int state_count(const EnumerationScope& scope);

/// Throws StateSpaceTooLarge (carrying the exact count) when the guard is
/// exceeded; also rejects d < 2 or n < 1.
void check_guard(const EnumerationScope& scope);

/// Visits every member exactly once, in row-lexicographic order.
void for_each(const EnumerationScope& scope,
              const std::function<void(const MultiPermutation&)>& visit);

/// The walk splits into partitions indexed by the first non-fixed row; each
/// partition can be consumed independently (and concurrently).
unsigned long partition_count(const EnumerationScope& scope);
void for_each_in_partition(const EnumerationScope& scope, unsigned long partition,
                           const std::function<void(const MultiPermutation&)>& visit);

/// Sum of weight() over the scope, partitions processed concurrently and
/// reduced in partition order. weight must be safe to call from any thread.
Int parallel_sum(const EnumerationScope& scope,
                 const std::function<Int(const MultiPermutation&)>& weight,
                 unsigned threads = 0);

enum class NamedPredicate { WeaklyIncreasing, Unimodal, Hoe, CompletePlateau };

/// The closed predicate set exposed at the CLI boundary; the library-level
/// count_if below takes arbitrary callables.
struct Filter {
  enum class Kind { Named, Avoids, Contains };
  Kind kind = Kind::Named;
  NamedPredicate named = NamedPredicate::WeaklyIncreasing;
  patterns::Pattern pattern;

  /// "weakly_increasing" | "unimodal" | "hoe" | "complete_plateau" |
  /// "avoids:<pattern>" | "contains:<pattern>"; throws UnknownPredicate.
  static Filter parse(std::string_view text);
  bool matches(const MultiPermutation& perm, LevelKind kind) const;
  std::string to_string() const;
};

Int count_if(const EnumerationScope& scope,
             const std::function<bool(const MultiPermutation&)>& predicate);

Int oracle_count(const EnumerationScope& scope, const Filter& filter, LevelKind kind);

/// Canonical (3,n)-permutations whose MaxEntry level vector has exactly k
/// repeated values; the brute-force side of the repeats triangle.
Int oracle_repeats(int n, int k, const Int& max_states = default_guard());

/// Sum of pattern occurrence counts over the whole scope.
Int oracle_total_pattern(const EnumerationScope& scope, LevelKind kind,
                         const patterns::Pattern& pattern);

/// Aggregates of the EntrySum level statistics over a scope.
struct LevelSetSummary {
  int m_min_observed = 0;          // min over members of the max level
  int m_max_observed = 0;          // max over members of the min level
  Int minimal_count = 0;           // members attaining max level == m_min_observed
  Int maximal_count = 0;           // members attaining min level == m_max_observed
  Int minimax_count = 0;           // members attaining both
  std::map<int, Int> c_bounded;    // c -> members with max level <= m_min_observed + c
  Int total = 0;
};

LevelSetSummary oracle_level_sets(int d, int n, const std::vector<int>& c_list,
                                  bool canonical = false,
                                  const Int& max_states = default_guard());

/// Ordinary permutations of length n with exactly k peaks (interior entries
/// larger than both neighbours).
Int oracle_peaks(int n, int k, const Int& max_states = default_guard());

/// Tally of every column vector across all (d,n)-permutations.
std::map<std::vector<int>, Int> oracle_element_multiplicity(
    int d, int n, const Int& max_states = default_guard());

} // namespace mdperm::enumeration
