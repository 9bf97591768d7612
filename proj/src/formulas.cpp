#include "mdperm/formulas.hpp"

#include <mutex>
#include <numeric>

#include "mdperm/series.hpp"

namespace mdperm::formulas {

namespace {

// Memoized repeats triangle, grown row by row under a lock.
class RepeatsTable {
 public:
  Int value(int n, int k) {
    if (n < 0 || k < 0) throw DomainError("repeats triangle indices must be non-negative");
    if (k == 0) return 1;
    std::scoped_lock lock(mutex_);
    grow(n);
    const auto& row = rows_[static_cast<size_t>(n)];
    if (static_cast<size_t>(k) >= row.size()) return 0;
    return row[static_cast<size_t>(k)];
  }

 private:
  void grow(int n) {
    while (rows_.size() <= static_cast<size_t>(n)) {
      const int m = static_cast<int>(rows_.size());
      std::vector<Int> row{Int(1)};
      const auto& prev = rows_[static_cast<size_t>(m - 1)];
      // Row m is positive exactly for k up to ceil((m-1)/2) = floor(m/2).
      for (int k = 1; k <= m / 2; ++k) {
        Int v = 0;
        if (static_cast<size_t>(k) < prev.size()) v += Int(2 * k + 1) * prev[static_cast<size_t>(k)];
        if (static_cast<size_t>(k - 1) < prev.size())
          v += Int(m - 2 * k + 1) * prev[static_cast<size_t>(k - 1)];
        row.push_back(std::move(v));
      }
      rows_.push_back(std::move(row));
    }
  }

  std::mutex mutex_;
  std::vector<std::vector<Int>> rows_{{Int(1)}};  // row 0
};

RepeatsTable& repeats_table() {
  static RepeatsTable table;
  return table;
}

} // namespace

Int repeats_count(int n, int k) { return repeats_table().value(n, k); }

Int repeats_closed_form(int n, int k) {
  if (n < 0) throw DomainError("row index must be non-negative");
  const auto un = static_cast<unsigned long>(n);
  switch (k) {
    case 1:
      return exact_div(int_pow(3, un) - 2 * n - 1, 4);
    case 2:
      return exact_div(int_pow(5, un) - Int(2 * n - 1) * int_pow(3, un) +
                           Int(2) * n * n - 2 * n - 2,
                       16);
    case 3:
      return exact_div(Int(3) * int_pow(7, un) - Int(6 * n - 9) * int_pow(5, un) +
                           (Int(6) * n * n - 18 * n + 3) * int_pow(3, un) -
                           Int(4) * n * n * n + Int(18) * n * n - 8 * n - 15,
                       192);
    default:
      throw DomainError("closed forms cover columns 1..3 only");
  }
}

Int weakly_increasing_count(int n) {
  if (n < 0) throw DomainError("length must be non-negative");
  Int total = 0;
  Int weight = 1;
  for (int k = 0; k <= (n + 1) / 2; ++k) {
    total += weight * repeats_count(n, k);
    weight *= 2;
  }
  return total;
}

Int weakly_increasing_count_euler(int n) {
  if (n < 0) throw DomainError("length must be non-negative");
  const auto egf = series::euler_egf(std::max(n, 1));
  std::vector<Int> euler;
  euler.reserve(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= std::max(n - 1, 0); ++i) euler.push_back(egf.egf_count(i));
  std::vector<Int> wi{Int(1)};  // empty permutation
  for (int m = 1; m <= n; ++m) {
    Int acc = 0;
    Int weight = 1;  // 2^k
    for (int k = 0; k <= m - 1; ++k) {
      acc += binomial(static_cast<unsigned long>(m - 1), static_cast<unsigned long>(k)) *
             weight * euler[static_cast<size_t>(k)] * wi[static_cast<size_t>(m - k - 1)];
      weight *= 2;
    }
    wi.push_back(std::move(acc));
  }
  return wi[static_cast<size_t>(n)];
}

Int unimodal_count(int n) {
  if (n < 0) throw DomainError("length must be non-negative");
  if (n == 0) return 0;
  Int total = 0;
  for (int k = 0; k <= n - 1; ++k) {
    Int r = repeats_count(n - 1, k);
    if (r == 0 && k > 0) break;
    total += int_pow(2, static_cast<unsigned long>(n - k - 1)) * r;
  }
  return total;
}

Int hoe_count(int n, int d) {
  if (n < 2 || d < 2) throw DomainError("hoe counts need n >= 2 and d >= 2");
  const Int base = int_pow(2, static_cast<unsigned long>(d - 1)) - 1;
  Int total = 0;
  Int power = 1;
  for (int k = 0; k <= n - 2; ++k) {
    total += power;
    power *= base;
  }
  return total;
}

Int hoe_count_recurrence(int n, int d) {
  if (n < 2 || d < 2) throw DomainError("hoe counts need n >= 2 and d >= 2");
  const Int base = int_pow(2, static_cast<unsigned long>(d - 1)) - 1;
  Int h = 1;  // length 2
  for (int m = 3; m <= n; ++m) h = 1 + base * h;
  return h;
}

LevelBounds level_bounds(int d, int n) {
  if (d < 2 || n < 1) throw DomainError("level bounds need d >= 2 and n >= 1");
  if (d == 2) return {n - 1, 0};
  const int total = (d - 1) * (n - 1);
  return {(total + 1) / 2, total / 2};
}

namespace {

std::vector<int> identity_row(int n) {
  std::vector<int> row(static_cast<size_t>(n));
  std::iota(row.begin(), row.end(), 0);
  return row;
}

std::vector<int> reversal_row(int n) {
  std::vector<int> row(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) row[static_cast<size_t>(j)] = n - 1 - j;
  return row;
}

// The three-row block whose column sums all hit the lower bound (odd length)
// or alternate between the two middle values (even length).
std::vector<std::vector<int>> four_dim_block(int n) {
  std::vector<std::vector<int>> rows(3, std::vector<int>(static_cast<size_t>(n)));
  rows[0] = identity_row(n);
  if (n % 2 == 1) {
    const int k = (n - 1) / 2;
    for (int j = 1; j <= n; ++j) {
      const int second = (j - 1 + k) % n;
      rows[1][static_cast<size_t>(j - 1)] = second;
      rows[2][static_cast<size_t>(j - 1)] = 3 * k - (j - 1) - second;
    }
  } else {
    const int k = n / 2;
    for (int j = 1; j <= n; ++j)
      rows[1][static_cast<size_t>(j - 1)] = (j - 1 + k - 1) % n;
    for (int j = 1; j <= k; ++j) rows[2][static_cast<size_t>(j - 1)] = 2 * k + 1 - 2 * j;
    rows[2][static_cast<size_t>(k)] = 0;
    for (int j = k + 2; j <= n; ++j) rows[2][static_cast<size_t>(j - 1)] = 2 * (2 * k + 1 - j);
  }
  return rows;
}

} // namespace

MultiPermutation minimal_witness(int d, int n) {
  if (d < 3 || n < 1) throw DomainError("minimal witnesses need d >= 3 and n >= 1");
  std::vector<std::vector<int>> rows;
  rows.reserve(static_cast<size_t>(d - 1));
  int remaining = d - 1;
  if (d % 2 == 0) {
    for (auto& row : four_dim_block(n)) rows.push_back(std::move(row));
    remaining -= 3;
  }
  while (remaining > 0) {
    rows.push_back(identity_row(n));
    rows.push_back(reversal_row(n));
    remaining -= 2;
  }
  return MultiPermutation::from_rows(std::move(rows));
}

namespace {

void validate_shift_spec(const ShiftSpec& spec) {
  if (spec.d < 2 || spec.n < 2) throw DomainError("shift forms need d >= 2 and n >= 2");
  if (spec.shifts.size() != static_cast<size_t>(spec.d - 1) ||
      spec.last_column.size() != static_cast<size_t>(spec.d - 1))
    throw DomainError("shift form needs d-1 shifts and d-1 last-column entries");
  for (int s : spec.shifts) {
    if (s < 1 || s >= spec.n) throw DomainError("shifts must lie in 1..n-1");
    if (std::gcd(s, spec.n) != 1)
      throw NotCoprime("shift " + std::to_string(s) + " shares a factor with n = " +
                       std::to_string(spec.n));
  }
  for (int e : spec.last_column)
    if (e < 0 || e >= spec.n) throw DomainError("last-column entries must lie in 0..n-1");
}

} // namespace

MultiPermutation shift_form(const ShiftSpec& spec) {
  validate_shift_spec(spec);
  std::vector<std::vector<int>> rows(static_cast<size_t>(spec.d - 1),
                                     std::vector<int>(static_cast<size_t>(spec.n)));
  for (int r = 0; r < spec.d - 1; ++r)
    for (int j = 1; j <= spec.n; ++j)
      rows[static_cast<size_t>(r)][static_cast<size_t>(j - 1)] =
          (spec.last_column[static_cast<size_t>(r)] + j * spec.shifts[static_cast<size_t>(r)]) %
          spec.n;
  return MultiPermutation::from_rows(std::move(rows));
}

bool shift_form_is_minimal(const ShiftSpec& spec) {
  validate_shift_spec(spec);
  if (spec.d != 4 || spec.n % 2 == 0 || spec.n < 3)
    throw OutOfTheoremScope("the decision covers 4-dimensional odd lengths");
  if (spec.shifts[0] != 1 || spec.last_column[0] != spec.n - 1)
    throw OutOfTheoremScope("normalize to first shift 1 and first last-column entry n-1");
  const int n = spec.n;
  const int k = (n - 1) / 2;
  const int s3 = spec.shifts[1], s4 = spec.shifts[2];
  const int p3 = spec.last_column[1], p4 = spec.last_column[2];
  if (s3 != 1 && s3 != k) throw OutOfTheoremScope("second shift must be 1 or (n-1)/2");
  bool minimal = false;
  if (s3 == 1)
    minimal = minimal ||
              (s4 == n - 2 && ((p3 == k - 1 && p4 == 1) || (p3 == k && p4 == 0)));
  if (s3 == k)
    minimal = minimal || (s4 == k && ((p3 == 0 && p4 == k) || (p3 == k && p4 == 0)));
  return minimal;
}

Int c_bounded_count(int n, int c, bool canonical) {
  if (n < 1) throw DomainError("length must be positive");
  if (c < 0 || c >= n) throw DomainError("the cap must satisfy 0 <= c <= n-1");
  Int out = factorial(static_cast<unsigned long>(c)) *
            int_pow(c + 1, static_cast<unsigned long>(n - c));
  if (!canonical) out *= factorial(static_cast<unsigned long>(n));
  return out;
}

Int elements_on_level(int d, int n, long level) {
  if (d < 2 || n < 1) throw DomainError("need d >= 2 and n >= 1");
  const long top = static_cast<long>(d - 1) * (n - 1);
  if (level < 0 || level > top)
    throw DomainError("level must lie in 0..(d-1)(n-1)");
  // Coefficient extraction from (1 + x + ... + x^(n-1))^(d-1).
  std::vector<Int> power{Int(1)};
  for (int rep = 0; rep < d - 1; ++rep) {
    std::vector<Int> next(power.size() + static_cast<size_t>(n) - 1, Int(0));
    for (size_t i = 0; i < power.size(); ++i)
      for (int j = 0; j < n; ++j) next[i + static_cast<size_t>(j)] += power[i];
    power = std::move(next);
  }
  return power[static_cast<size_t>(level)];
}

Int total_plateaux_max_entry(int d, int n) {
  if (d < 2 || n < d - 1) throw DomainError("need d >= 2 and n >= d-1");
  Int sum = 0;
  for (int level = 0; level <= n - 1; ++level)
    sum += int_pow(arrangement(level, d - 2), static_cast<unsigned long>(d - 1));
  return Int(n - d + 2) * factorial(static_cast<unsigned long>(d - 1)) *
         int_pow(factorial(static_cast<unsigned long>(n - d + 1)),
                 static_cast<unsigned long>(d - 1)) *
         sum;
}

Int total_ascents_dim3(int n) {
  if (n < 2) throw DomainError("ascent totals need n >= 2");
  const Int numerator = (Int(3) * n * n - 5 * n + 1) *
                        factorial(static_cast<unsigned long>(n)) *
                        factorial(static_cast<unsigned long>(n - 1));
  return exact_div(numerator, 6);
}

Int total_k_plateaux_entry_sum(int n, int k) {
  if (n < 2 || k < 2 || k > n) throw DomainError("need n >= 2 and 2 <= k <= n");
  Int inner = arrangement(n, k);
  for (int level = k - 1; level <= n - 2; ++level)
    inner += 2 * arrangement(level + 1, k);
  return factorial(static_cast<unsigned long>(n - k + 1)) *
         factorial(static_cast<unsigned long>(n - k)) * inner;
}

} // namespace mdperm::formulas
