#include "mdperm/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

namespace mdperm::enumeration {

namespace {

int varying_rows(const EnumerationScope& scope) {
  return scope.d - 1 - (scope.canonical_only ? 1 : 0);
}

std::vector<int> identity_row(int n) {
  std::vector<int> row(static_cast<size_t>(n));
  std::iota(row.begin(), row.end(), 0);
  return row;
}

unsigned long long factorial_u64(int n) {
  unsigned long long f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<unsigned long long>(i);
  return f;
}

// Lexicographic unranking via the factorial number system.
std::vector<int> unrank_permutation(int n, unsigned long long rank) {
  std::vector<int> pool = identity_row(n);
  std::vector<int> out;
  out.reserve(static_cast<size_t>(n));
  unsigned long long radix = factorial_u64(n);
  for (int i = 0; i < n; ++i) {
    radix /= static_cast<unsigned long long>(n - i);
    const auto digit = static_cast<size_t>(rank / radix);
    rank %= radix;
    out.push_back(pool[digit]);
    pool.erase(pool.begin() + static_cast<long>(digit));
  }
  return out;
}

// Walks rows [first_free, d-1) as an odometer of next_permutation steps.
void walk(std::vector<std::vector<int>>& rows, size_t first_free,
          const std::function<void(const MultiPermutation&)>& visit) {
  for (size_t r = first_free; r < rows.size(); ++r)
    std::sort(rows[r].begin(), rows[r].end());
  while (true) {
    visit(MultiPermutation::from_rows(rows));
    size_t r = rows.size();
    while (r > first_free) {
      --r;
      if (std::next_permutation(rows[r].begin(), rows[r].end())) break;
      if (r == first_free) return;  // odometer wrapped
    }
    if (rows.size() == first_free) return;  // nothing varies: single member
  }
}

} // namespace

Int state_count(const EnumerationScope& scope) {
  const int rows = varying_rows(scope);
  return int_pow(factorial(static_cast<unsigned long>(scope.n)),
                 static_cast<unsigned long>(std::max(rows, 0)));
}

void check_guard(const EnumerationScope& scope) {
  if (scope.d < 2) throw DomainError("dimension must be at least 2");
  if (scope.n < 1) throw DomainError("length must be at least 1");
  Int states = state_count(scope);
  if (states > scope.max_states)
    throw StateSpaceTooLarge("state space has " + states.get_str() +
                                 " members, guard is " + scope.max_states.get_str(),
                             states);
}

void for_each(const EnumerationScope& scope,
              const std::function<void(const MultiPermutation&)>& visit) {
  check_guard(scope);
  std::vector<std::vector<int>> rows(static_cast<size_t>(scope.d - 1),
                                     identity_row(scope.n));
  walk(rows, scope.canonical_only ? 1 : 0, visit);
}

unsigned long partition_count(const EnumerationScope& scope) {
  check_guard(scope);
  if (varying_rows(scope) == 0) return 1;
  return static_cast<unsigned long>(factorial_u64(scope.n));
}

void for_each_in_partition(const EnumerationScope& scope, unsigned long partition,
                           const std::function<void(const MultiPermutation&)>& visit) {
  check_guard(scope);
  std::vector<std::vector<int>> rows(static_cast<size_t>(scope.d - 1),
                                     identity_row(scope.n));
  const size_t first = scope.canonical_only ? 1 : 0;
  if (varying_rows(scope) == 0) {
    if (partition != 0) throw DomainError("partition index out of range");
    visit(MultiPermutation::from_rows(rows));
    return;
  }
  if (partition >= partition_count(scope)) throw DomainError("partition index out of range");
  rows[first] = unrank_permutation(scope.n, partition);
  walk(rows, first + 1, visit);
}

Int parallel_sum(const EnumerationScope& scope,
                 const std::function<Int(const MultiPermutation&)>& weight,
                 unsigned threads) {
  const unsigned long parts = partition_count(scope);
  unsigned hw = threads ? threads : std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  hw = static_cast<unsigned>(std::min<unsigned long>(hw, parts));
  if (hw <= 1) {
    Int total = 0;
    for_each(scope, [&](const MultiPermutation& p) { total += weight(p); });
    return total;
  }
  std::vector<Int> partial(hw, Int(0));
  std::vector<std::thread> pool;
  pool.reserve(hw);
  for (unsigned t = 0; t < hw; ++t) {
    pool.emplace_back([&, t]() {
      Int local = 0;
      for (unsigned long part = t; part < parts; part += hw)
        for_each_in_partition(scope, part,
                              [&](const MultiPermutation& p) { local += weight(p); });
      partial[t] = std::move(local);
    });
  }
  for (auto& th : pool) th.join();
  Int total = 0;
  for (const auto& p : partial) total += p;
  return total;
}

Filter Filter::parse(std::string_view text) {
  Filter f;
  if (text == "weakly_increasing") {
    f.named = NamedPredicate::WeaklyIncreasing;
  } else if (text == "unimodal") {
    f.named = NamedPredicate::Unimodal;
  } else if (text == "hoe") {
    f.named = NamedPredicate::Hoe;
  } else if (text == "complete_plateau") {
    f.named = NamedPredicate::CompletePlateau;
  } else if (text.substr(0, 7) == "avoids:") {
    f.kind = Kind::Avoids;
    f.pattern = patterns::Pattern::parse(text.substr(7));
  } else if (text.substr(0, 9) == "contains:") {
    f.kind = Kind::Contains;
    f.pattern = patterns::Pattern::parse(text.substr(9));
  } else {
    throw UnknownPredicate("unknown predicate '" + std::string(text) + "'");
  }
  return f;
}

bool Filter::matches(const MultiPermutation& perm, LevelKind kind) const {
  if (this->kind == Kind::Named) {
    const auto flags = patterns::classify(perm, kind);
    switch (named) {
      case NamedPredicate::WeaklyIncreasing: return flags.weakly_increasing;
      case NamedPredicate::Unimodal: return flags.unimodal;
      case NamedPredicate::Hoe: return flags.hoe;
      case NamedPredicate::CompletePlateau: return flags.complete_plateau;
    }
    return false;
  }
  const Int hits = patterns::count_occurrences(level_vector(perm, kind), pattern);
  return this->kind == Kind::Avoids ? hits == 0 : hits > 0;
}

std::string Filter::to_string() const {
  if (kind == Kind::Avoids) return "avoids:" + pattern.to_string();
  if (kind == Kind::Contains) return "contains:" + pattern.to_string();
  switch (named) {
    case NamedPredicate::WeaklyIncreasing: return "weakly_increasing";
    case NamedPredicate::Unimodal: return "unimodal";
    case NamedPredicate::Hoe: return "hoe";
    case NamedPredicate::CompletePlateau: return "complete_plateau";
  }
  return "?";
}

Int count_if(const EnumerationScope& scope,
             const std::function<bool(const MultiPermutation&)>& predicate) {
  Int total = 0;
  for_each(scope, [&](const MultiPermutation& p) {
    if (predicate(p)) ++total;
  });
  return total;
}

Int oracle_count(const EnumerationScope& scope, const Filter& filter, LevelKind kind) {
  return parallel_sum(scope, [&](const MultiPermutation& p) {
    return Int(filter.matches(p, kind) ? 1 : 0);
  });
}

Int oracle_repeats(int n, int k, const Int& max_states) {
  EnumerationScope scope{3, n, true, max_states};
  Int total = 0;
  for_each(scope, [&](const MultiPermutation& p) {
    if (patterns::repeated_level_count(p, LevelKind::MaxEntry) == k) ++total;
  });
  return total;
}

Int oracle_total_pattern(const EnumerationScope& scope, LevelKind kind,
                         const patterns::Pattern& pattern) {
  return parallel_sum(scope, [&](const MultiPermutation& p) {
    return patterns::count_occurrences(level_vector(p, kind), pattern);
  });
}

LevelSetSummary oracle_level_sets(int d, int n, const std::vector<int>& c_list,
                                  bool canonical, const Int& max_states) {
  EnumerationScope scope{d, n, canonical, max_states};
  // Histogram over (min level, max level) pairs; everything else follows.
  std::map<std::pair<int, int>, Int> histogram;
  for_each(scope, [&](const MultiPermutation& p) {
    const auto lv = level_vector(p, LevelKind::EntrySum);
    ++histogram[{lv.min(), lv.max()}];
  });
  LevelSetSummary out;
  bool first = true;
  for (const auto& [key, count] : histogram) {
    out.total += count;
    if (first) {
      out.m_min_observed = key.second;
      out.m_max_observed = key.first;
      first = false;
    } else {
      out.m_min_observed = std::min(out.m_min_observed, key.second);
      out.m_max_observed = std::max(out.m_max_observed, key.first);
    }
  }
  for (const auto& [key, count] : histogram) {
    if (key.second == out.m_min_observed) out.minimal_count += count;
    if (key.first == out.m_max_observed) out.maximal_count += count;
    if (key.second == out.m_min_observed && key.first == out.m_max_observed)
      out.minimax_count += count;
    for (int c : c_list)
      if (key.second <= out.m_min_observed + c) out.c_bounded[c] += count;
  }
  for (int c : c_list) out.c_bounded.try_emplace(c, 0);
  return out;
}

Int oracle_peaks(int n, int k, const Int& max_states) {
  EnumerationScope scope{2, n, false, max_states};
  check_guard(scope);
  std::vector<int> perm = identity_row(n);
  Int total = 0;
  do {
    int peaks = 0;
    for (int i = 1; i + 1 < n; ++i)
      if (perm[static_cast<size_t>(i - 1)] < perm[static_cast<size_t>(i)] &&
          perm[static_cast<size_t>(i + 1)] < perm[static_cast<size_t>(i)])
        ++peaks;
    if (peaks == k) ++total;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

std::map<std::vector<int>, Int> oracle_element_multiplicity(int d, int n,
                                                            const Int& max_states) {
  EnumerationScope scope{d, n, false, max_states};
  std::map<std::vector<int>, Int> tally;
  for_each(scope, [&](const MultiPermutation& p) {
    for (int i = 1; i <= n; ++i) ++tally[p.column(i)];
  });
  return tally;
}

} // namespace mdperm::enumeration
