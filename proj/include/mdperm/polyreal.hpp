#pragma once

#include <vector>

#include "mdperm/bigint.hpp"
#include "mdperm/errors.hpp"

namespace mdperm::polyreal {

/// Polynomial with exact rational coefficients, stored ascending by degree.
/// The zero polynomial has no coefficients and degree -1.
class RatPolynomial {
 public:
  RatPolynomial() = default;
  explicit RatPolynomial(std::vector<Rat> ascending_coeffs);
  static RatPolynomial constant(Rat value);
  static RatPolynomial variable();  // the monomial y

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of y^k (zero beyond the degree).
  const Rat& coeff(int k) const;
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  const Rat& leading() const;

  RatPolynomial operator+(const RatPolynomial& rhs) const;
  RatPolynomial operator-(const RatPolynomial& rhs) const;
  RatPolynomial operator-() const;
  RatPolynomial operator*(const RatPolynomial& rhs) const;
  RatPolynomial operator*(const Rat& scalar) const;
  bool operator==(const RatPolynomial& rhs) const = default;

  RatPolynomial derivative() const;
  Rat operator()(const Rat& point) const;
  double eval_double(double point) const;

  /// Quotient and remainder of exact polynomial division.
  static std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& num,
                                                        const RatPolynomial& den);
  /// Monic greatest common divisor (1 for coprime inputs).
  static RatPolynomial gcd(const RatPolynomial& a, const RatPolynomial& b);

  RatPolynomial monic() const;
  /// p / gcd(p, p'): same distinct roots, all simple.
  RatPolynomial squarefree_part() const;
  bool is_squarefree() const;

 private:
  void normalize();
  std::vector<Rat> coeffs_;
};

/// Strict upper bound on the absolute value of every root (Cauchy bound).
Rat root_bound(const RatPolynomial& p);

/// Number of distinct real roots in (a, b], by Sturm sign variations.
/// Requires a < b and p(a) != 0 != p(b).
int sturm_count(const RatPolynomial& p, const Rat& a, const Rat& b);

/// Distinct real roots over the whole line.
int real_root_count(const RatPolynomial& p);

/// True iff every complex root is real (multiplicities via the squarefree
/// part); decided exactly, no floating point.
bool is_real_rooted(const RatPolynomial& p);

/// A closed interval known to contain exactly one real root; lo == hi marks
/// an exact rational root.
struct RootInterval {
  Rat lo, hi;
  bool exact() const { return lo == hi; }
};

struct RootIsolation {
  std::vector<RootInterval> intervals;  // sorted, pairwise disjoint
};

/// Isolates all real roots of a squarefree polynomial into disjoint intervals
/// of width at most `tolerance`.
RootIsolation isolate_roots(const RatPolynomial& p, const Rat& tolerance = Rat(1, 1024));

/// Whether the root sequences of g and f alternate (g interlaces f).
/// Requires both real-rooted and deg f in {deg g, deg g + 1}. Shared roots
/// are divided out first; constants interlace anything of degree at most 1.
bool interlaces(const RatPolynomial& g, const RatPolynomial& f);

/// Generating polynomial of the repeats triangle row n (coefficient k counts
/// canonical (3,n)-permutations with exactly k repeated levels), built from
/// the row-to-row polynomial recurrence.
RatPolynomial repeats_row_polynomial(int n);

} // namespace mdperm::polyreal
