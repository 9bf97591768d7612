#include "mdperm/formulas.hpp"

#include <numeric>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "mdperm/enumerate.hpp"

using namespace mdperm;
using namespace mdperm::formulas;
using test::perm;

TEST_CASE("repeats triangle recurrence") {
  CHECK(repeats_count(3, 1) == 5);
  CHECK(repeats_count(5, 2) == 61);
  CHECK(repeats_count(0, 1) == 0);
  CHECK(repeats_count(0, 0) == 1);
  for (int n = 0; n <= 12; ++n) {
    Int sum = 0;
    for (int k = 0; k <= n; ++k) sum += repeats_count(n, k);
    CHECK(sum == factorial(unsigned(n)));
  }
}

TEST_CASE("repeats positivity profile: k up to ceil((n-1)/2)") {
  for (int n = 1; n <= 20; ++n) {
    const int cutoff = n / 2;  // ceil((n-1)/2)
    for (int k = 0; k <= n; ++k)
      CHECK((repeats_count(n, k) > 0) == (k <= cutoff));
  }
}

TEST_CASE("closed-form columns match the recurrence") {
  CHECK(repeats_closed_form(3, 1) == 5);
  CHECK(repeats_closed_form(5, 2) == 61);
  CHECK_THROWS_AS(repeats_closed_form(5, 4), DomainError);
  for (int n = 0; n <= 20; ++n)
    for (int k = 1; k <= 3; ++k) CHECK(repeats_closed_form(n, k) == repeats_count(n, k));
}

TEST_CASE("repeats agree with brute force to n = 6") {
  for (int n = 1; n <= 6; ++n)
    for (int k = 0; k <= n / 2 + 1; ++k)
      CHECK(repeats_count(n, k) == enumeration::oracle_repeats(n, k));
}

TEST_CASE("weakly increasing counts: two formula routes and brute force") {
  const Int expected[] = {1, 1, 3, 11, 57, 361, 2763, 24611, 250737};
  for (int n = 0; n <= 8; ++n) CHECK(weakly_increasing_count(n) == expected[n]);
  for (int n = 0; n <= 20; ++n)
    CHECK(weakly_increasing_count(n) == weakly_increasing_count_euler(n));
  for (int n = 1; n <= 4; ++n) {
    const Int brute = enumeration::oracle_count(
        enumeration::EnumerationScope{3, n, false},
        enumeration::Filter::parse("weakly_increasing"), LevelKind::MaxEntry);
    CHECK(brute == weakly_increasing_count(n));
  }
}

TEST_CASE("unimodal counts") {
  CHECK(unimodal_count(0) == 0);
  CHECK(unimodal_count(1) == 1);
  CHECK(unimodal_count(3) == 6);
  CHECK(unimodal_count(4) == 28);
  for (int n = 1; n <= 4; ++n) {
    const Int brute = enumeration::oracle_count(
        enumeration::EnumerationScope{3, n, false},
        enumeration::Filter::parse("unimodal"), LevelKind::MaxEntry);
    CHECK(brute == unimodal_count(n));
  }
}

TEST_CASE("hoe counts: closed form, recurrence, brute force, 2-dimensional case") {
  CHECK(hoe_count(4, 3) == 13);
  CHECK(hoe_count(3, 4) == 8);
  for (int n = 2; n <= 9; ++n) CHECK(hoe_count(n, 2) == n - 1);
  for (int d = 2; d <= 8; ++d)
    for (int n = 2; n <= 30; ++n) CHECK(hoe_count(n, d) == hoe_count_recurrence(n, d));
  CHECK_THROWS_AS(hoe_count(1, 3), DomainError);

  for (int d = 3; d <= 4; ++d)
    for (int n = 2; n <= 4; ++n) {
      const Int brute = enumeration::oracle_count(
          enumeration::EnumerationScope{d, n, false},
          enumeration::Filter::parse("hoe"), LevelKind::MaxEntry);
      CHECK(brute == hoe_count(n, d));
    }
}

TEST_CASE("level bounds") {
  CHECK(level_bounds(4, 5).min_of_max == 6);
  CHECK(level_bounds(4, 5).max_of_min == 6);
  CHECK(level_bounds(4, 4).min_of_max == 5);
  CHECK(level_bounds(4, 4).max_of_min == 4);
  CHECK(level_bounds(2, 7).min_of_max == 6);
  CHECK(level_bounds(2, 7).max_of_min == 0);
  for (int d = 3; d <= 7; ++d)
    for (int n = 1; n <= 9; ++n) {
      const auto b = level_bounds(d, n);
      CHECK((b.min_of_max == b.max_of_min) == (n % 2 == 1 || d % 2 == 1));
    }
}

TEST_CASE("minimal witnesses reproduce the displayed constructions") {
  CHECK(minimal_witness(3, 4) == perm({"0123", "3210"}));
  CHECK(minimal_witness(4, 5) == perm({"01234", "23401", "42031"}));
  CHECK(minimal_witness(4, 4) == perm({"0123", "1230", "3102"}));

  const auto lv45 = level_vector(minimal_witness(4, 5), LevelKind::EntrySum);
  CHECK(lv45.levels == std::vector<int>{6, 6, 6, 6, 6});
  const auto lv44 = level_vector(minimal_witness(4, 4), LevelKind::EntrySum);
  CHECK(lv44.levels == std::vector<int>{4, 4, 5, 5});
}

TEST_CASE("minimal witnesses hit the lower bound for 3 <= d <= 6, n <= 7") {
  for (int d = 3; d <= 6; ++d)
    for (int n = 1; n <= 7; ++n) {
      const auto witness = minimal_witness(d, n);
      CHECK(witness.dimension() == d);
      CHECK(witness.length() == n);
      CHECK(level_vector(witness, LevelKind::EntrySum).max() ==
            level_bounds(d, n).min_of_max);
    }
}

namespace {

MultiPermutation permute_columns(const MultiPermutation& p, const std::vector<int>& order) {
  std::vector<std::vector<int>> rows = p.rows();
  for (auto& row : rows) {
    std::vector<int> permuted(row.size());
    for (size_t j = 0; j < row.size(); ++j) permuted[j] = row[size_t(order[j])];
    row = std::move(permuted);
  }
  return MultiPermutation::from_rows(std::move(rows));
}

} // namespace

TEST_CASE("witness variants stay minimal") {
  std::mt19937 rng(424242);

  SUBCASE("value swaps in the even-length last row") {
    for (int k : {2, 3}) {
      const int n = 2 * k;
      const auto base = minimal_witness(4, n);
      std::vector<std::pair<int, int>> pairs;
      for (int i = 3; i <= 2 * k - 1; i += 2) pairs.push_back({2 * k - i, 2 * k - i + 1});
      for (unsigned mask = 0; mask < (1u << pairs.size()); ++mask) {
        auto rows = base.rows();
        auto& last = rows.back();
        for (size_t b = 0; b < pairs.size(); ++b)
          if (mask & (1u << b))
            for (int& e : last) {
              if (e == pairs[b].first)
                e = pairs[b].second;
              else if (e == pairs[b].second)
                e = pairs[b].first;
            }
        const auto variant = MultiPermutation::from_rows(rows);
        CHECK(level_vector(variant, LevelKind::EntrySum).max() ==
              level_bounds(4, n).min_of_max);
      }
    }
  }

  SUBCASE("stored-row and column permutations") {
    for (int trial = 0; trial < 20; ++trial) {
      const int d = 3 + trial % 4;
      const int n = 2 + trial % 5;
      auto rows = minimal_witness(d, n).rows();
      std::shuffle(rows.begin(), rows.end(), rng);
      auto shuffled = MultiPermutation::from_rows(rows);
      std::vector<int> order(size_t(n));
      std::iota(order.begin(), order.end(), 0);
      std::shuffle(order.begin(), order.end(), rng);
      const auto variant = permute_columns(shuffled, order);
      CHECK(level_vector(variant, LevelKind::EntrySum).max() ==
            level_bounds(d, n).min_of_max);
    }
  }
}

TEST_CASE("shift forms") {
  CHECK(shift_form({4, 5, {1, 2, 2}, {4, 0, 2}}) ==
        perm({"01234", "24130", "41302"}));
  CHECK(shift_form({3, 3, {1, 1}, {2, 2}}) == perm({"012", "012"}));
  CHECK_THROWS_AS(shift_form({4, 4, {1, 2, 1}, {3, 0, 0}}), NotCoprime);
  CHECK_THROWS_AS(shift_form({4, 5, {1, 2}, {4, 0, 2}}), DomainError);
}

TEST_CASE("shift-form minimality decisions match direct checks") {
  CHECK(shift_form_is_minimal({4, 5, {1, 2, 2}, {4, 0, 2}}));  // pair (0,k)
  CHECK(shift_form_is_minimal({4, 3, {1, 1, 1}, {2, 1, 0}}));  // k=1, pair (k,0)
  CHECK(shift_form_is_minimal({4, 5, {1, 1, 3}, {4, 1, 1}}));  // pair (k-1,1)
  CHECK_FALSE(shift_form_is_minimal({4, 5, {1, 1, 3}, {4, 0, 2}}));
  CHECK_FALSE(shift_form_is_minimal({4, 5, {1, 2, 2}, {4, 1, 1}}));
  CHECK_THROWS_AS(shift_form_is_minimal({4, 5, {1, 3, 2}, {4, 0, 2}}),
                  OutOfTheoremScope);
  CHECK_THROWS_AS(shift_form_is_minimal({4, 4, {1, 1, 1}, {3, 0, 0}}),
                  OutOfTheoremScope);

  for (int n : {3, 5}) {
    const int k = (n - 1) / 2;
    const int target = level_bounds(4, n).min_of_max;
    for (int s3 : {1, k})
      for (int s4 = 1; s4 < n; ++s4) {
        if (std::gcd(s4, n) != 1) continue;
        for (int p3 = 0; p3 < n; ++p3)
          for (int p4 = 0; p4 < n; ++p4) {
            const ShiftSpec spec{4, n, {1, s3, s4}, {n - 1, p3, p4}};
            const bool direct =
                level_vector(shift_form(spec), LevelKind::EntrySum).max() == target;
            CHECK(shift_form_is_minimal(spec) == direct);
          }
      }
  }
}

TEST_CASE("c-bounded counts") {
  CHECK(c_bounded_count(4, 0, false) == 24);
  CHECK(c_bounded_count(3, 1, false) == 24);
  CHECK(c_bounded_count(4, 2, true) == 18);
  CHECK_THROWS_AS(c_bounded_count(3, 3, false), DomainError);

  SUBCASE("against brute force for n <= 4") {
    for (int n = 2; n <= 4; ++n) {
      std::vector<int> caps(size_t(n));
      std::iota(caps.begin(), caps.end(), 0);
      const auto summary = enumeration::oracle_level_sets(3, n, caps);
      for (int c = 0; c < n; ++c)
        CHECK(summary.c_bounded.at(c) == c_bounded_count(n, c, false));
      const auto canonical = enumeration::oracle_level_sets(3, n, caps, true);
      for (int c = 0; c < n; ++c)
        CHECK(canonical.c_bounded.at(c) == c_bounded_count(n, c, true));
    }
  }
}

TEST_CASE("columns available per level") {
  CHECK(elements_on_level(3, 3, 2) == 3);
  CHECK(elements_on_level(5, 4, 0) == 1);
  CHECK(elements_on_level(3, 4, 1) == 2);
  CHECK(elements_on_level(3, 4, 5) == 2);
  CHECK_THROWS_AS(elements_on_level(3, 3, 5), DomainError);

  for (int d = 2; d <= 5; ++d)
    for (int n = 1; n <= 5; ++n) {
      const long top = long(d - 1) * (n - 1);
      for (long level = 0; level <= top; ++level) {
        CHECK(elements_on_level(d, n, level) == elements_on_level(d, n, top - level));
        if (level <= n - 1)
          CHECK(elements_on_level(d, n, level) ==
                binomial(unsigned(level + d - 2), unsigned(d - 2)));
      }
    }
}

TEST_CASE("plateau totals under MaxEntry") {
  CHECK(total_plateaux_max_entry(3, 3) == 20);
  CHECK(total_plateaux_max_entry(3, 2) == 2);
  // Exhaustively confirmed regression value for the (4,4) triple plateaux.
  CHECK(total_plateaux_max_entry(4, 4) == 2688);
  CHECK_THROWS_AS(total_plateaux_max_entry(4, 2), DomainError);

  const auto triple = patterns::Pattern::parse("c:111");
  CHECK(enumeration::oracle_total_pattern(enumeration::EnumerationScope{4, 4, false},
                                          LevelKind::MaxEntry, triple) == 2688);
}

TEST_CASE("ascent totals in dimension 3") {
  CHECK(total_ascents_dim3(2) == 1);
  CHECK(total_ascents_dim3(3) == 26);
  for (int n = 2; n <= 6; ++n) {
    const Int pairs = Int(n - 1) * factorial(unsigned(n)) * factorial(unsigned(n));
    CHECK(2 * total_ascents_dim3(n) + total_plateaux_max_entry(3, n) == pairs);
  }
}

TEST_CASE("k-plateau totals under EntrySum") {
  CHECK(total_k_plateaux_entry_sum(3, 2) == 20);
  CHECK(total_k_plateaux_entry_sum(2, 2) == 2);
  CHECK(total_k_plateaux_entry_sum(3, 3) == 6);
  CHECK(total_k_plateaux_entry_sum(4, 2) == 336);
  CHECK_THROWS_AS(total_k_plateaux_entry_sum(3, 4), DomainError);

  // A full n-plateau forces one shared level, so the count is n!.
  for (int n = 2; n <= 8; ++n)
    CHECK(total_k_plateaux_entry_sum(n, n) == factorial(unsigned(n)));
}
