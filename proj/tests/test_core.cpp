#include "mdperm/core.hpp"

#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "mdperm/enumerate.hpp"

using namespace mdperm;
using test::perm;

TEST_CASE("construction accepts valid rows and derives dimensions") {
  const auto p = perm({"01423", "40132"});
  CHECK(p.dimension() == 3);
  CHECK(p.length() == 5);

  const auto singleton = perm({"0"});
  CHECK(singleton.dimension() == 2);
  CHECK(singleton.length() == 1);
}

TEST_CASE("construction rejects malformed input") {
  CHECK_THROWS_AS(MultiPermutation::from_rows({{0, 1, 1}, {2, 1, 0}}), NotABijection);
  CHECK_THROWS_AS(MultiPermutation::from_rows({{0, 1, 5}}), NotABijection);
  CHECK_THROWS_AS(MultiPermutation::from_rows({{0, 1}, {0}}), RaggedRows);
  CHECK_THROWS_AS(MultiPermutation::from_rows({}), EmptyPermutation);
  CHECK_THROWS_AS(MultiPermutation::from_rows({{}}), EmptyPermutation);
}

TEST_CASE("level vectors under both kinds") {
  const auto p = perm({"01234", "01423", "40132"});
  const auto by_max = level_vector(p, LevelKind::MaxEntry);
  CHECK(by_max.levels == std::vector<int>{4, 1, 4, 3, 4});
  CHECK(by_max.min() == 1);
  CHECK(by_max.max() == 4);

  const auto by_sum = level_vector(p, LevelKind::EntrySum);
  CHECK(by_sum.levels == std::vector<int>{4, 2, 7, 8, 9});
  CHECK(by_sum.min() == 2);
  CHECK(by_sum.max() == 9);

  CHECK(level_vector(perm({"0"}), LevelKind::MaxEntry).levels == std::vector<int>{0});
  CHECK(level_vector(perm({"0"}), LevelKind::EntrySum).levels == std::vector<int>{0});
}

TEST_CASE("columns are 1-based") {
  const auto p = perm({"01423", "40132"});
  CHECK(p.column(1) == std::vector<int>{0, 4});
  CHECK(p.column(3) == std::vector<int>{4, 1});
  CHECK(element(p, 5).position == 5);
  CHECK(element(p, 5).entries == std::vector<int>{3, 2});
}

TEST_CASE("complement flips every entry") {
  const auto p = perm({"1203", "1032", "3120"});
  const auto c = complement(p);
  CHECK(c == perm({"2130", "2301", "0213"}));
  CHECK(complement(c) == p);
  CHECK(complement(perm({"0"})) == perm({"0"}));
}

TEST_CASE("complement negates entry-sum levels against the ceiling") {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 50; ++trial) {
    const auto p = test::random_permutation(3, 6, rng);
    const auto before = level_vector(p, LevelKind::EntrySum);
    const auto after = level_vector(complement(p), LevelKind::EntrySum);
    for (int i = 0; i < 6; ++i)
      CHECK(after.levels[size_t(i)] == 5 * 2 - before.levels[size_t(i)]);
  }
}

TEST_CASE("reverse flips columns and is an involution") {
  CHECK(reverse(perm({"012", "210"})) == perm({"210", "012"}));
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = test::random_permutation(3, 5, rng);
    CHECK(reverse(reverse(p)) == p);
  }
}

TEST_CASE("reverse swaps ascent and descent counts over all of S_4^3") {
  using namespace mdperm::enumeration;
  int checked = 0;
  for_each(EnumerationScope{3, 4, false}, [&](const MultiPermutation& p) {
    for (auto kind : {LevelKind::MaxEntry, LevelKind::EntrySum}) {
      const auto direct = level_vector(p, kind);
      const auto reversed = level_vector(reverse(p), kind);
      long asc = 0, des = 0, rev_asc = 0;
      for (size_t i = 0; i + 1 < direct.levels.size(); ++i) {
        asc += direct.levels[i] < direct.levels[i + 1];
        des += direct.levels[i] > direct.levels[i + 1];
        rev_asc += reversed.levels[i] < reversed.levels[i + 1];
      }
      CHECK(rev_asc == des);
    }
    ++checked;
  });
  CHECK(checked == 576);
}

TEST_CASE("canonical means identity first row") {
  CHECK(is_canonical(perm({"0123456", "1245306"})));
  CHECK_FALSE(is_canonical(perm({"10", "01"})));
}

TEST_CASE("canonical fraction of S_n^3 is 1/n!") {
  using namespace mdperm::enumeration;
  for (int n : {3, 4}) {
    Int canonical = 0, total = 0;
    for_each(EnumerationScope{3, n, false}, [&](const MultiPermutation& p) {
      ++total;
      if (is_canonical(p)) ++canonical;
    });
    CHECK(total == canonical * factorial(unsigned(n)));
  }
}

TEST_CASE("level values respect the documented bounds") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const int d = 2 + trial % 4;
    const int n = 1 + trial % 6;
    const auto p = test::random_permutation(d, n, rng);
    const auto by_max = level_vector(p, LevelKind::MaxEntry);
    const auto by_sum = level_vector(p, LevelKind::EntrySum);
    CHECK(by_max.min() >= 0);
    CHECK(by_max.max() <= n - 1);
    CHECK(by_sum.min() >= 0);
    CHECK(by_sum.max() <= (d - 1) * (n - 1));
    CHECK(by_max.min() <= by_max.max());

    // Row sums are fixed, so entry-sum levels always total n(n-1)(d-1)/2.
    long total = 0;
    for (int v : by_sum.levels) total += v;
    CHECK(total == long(n) * (n - 1) * (d - 1) / 2);
  }
}

TEST_CASE("max-entry level n-1 is always attained") {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 60; ++trial) {
    const int d = 2 + trial % 3;
    const int n = 2 + trial % 5;
    const auto p = test::random_permutation(d, n, rng);
    const auto lv = level_vector(p, LevelKind::MaxEntry);
    int hits = 0;
    for (int v : lv.levels) hits += v == n - 1;
    CHECK(hits >= 1);

    // Exactly one hit iff every row has n-1 in the same column.
    bool same_column = true;
    int column = -1;
    for (const auto& row : p.rows()) {
      int at = 0;
      while (row[size_t(at)] != n - 1) ++at;
      if (column == -1) column = at;
      same_column = same_column && at == column;
    }
    CHECK((hits == 1) == same_column);
  }
}
