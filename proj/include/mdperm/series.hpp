#pragma once

#include <vector>

#include "mdperm/bigint.hpp"
#include "mdperm/errors.hpp"
#include "mdperm/polyreal.hpp"

namespace mdperm::series {

inline constexpr int kDefaultOrder = 32;

/// Univariate power series over the rationals, truncated at a fixed order.
/// Ordinary coefficients are stored; exponential-generating-function counts
/// are recovered as n! * c_n at extraction time.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Rat& coeff(int n) const;
  void set_coeff(int n, Rat value);

  TruncatedSeries operator+(const TruncatedSeries& rhs) const;
  TruncatedSeries operator-(const TruncatedSeries& rhs) const;
  TruncatedSeries operator*(const TruncatedSeries& rhs) const;
  TruncatedSeries operator*(const Rat& scalar) const;
  bool operator==(const TruncatedSeries& rhs) const = default;

  /// Multiplicative inverse to the same order; needs a nonzero constant term.
  TruncatedSeries reciprocal() const;
  TruncatedSeries derivative() const;      // order drops by one
  TruncatedSeries antiderivative(const Rat& constant_term) const;  // order grows by one
  /// Substitution x -> a*x.
  TruncatedSeries scale_argument(const Rat& a) const;
  TruncatedSeries truncated(int order) const;

  /// n! * c_n, checked to be an integer.
  Int egf_count(int n) const;
  double eval_double(double x) const;

 private:
  std::vector<Rat> c_;  // c_[n] is the coefficient of x^n
};

/// Power series in x whose coefficients are exact polynomials in y; only x is
/// truncated (the y-degrees stay finite by themselves).
class BivariateSeries {
 public:
  explicit BivariateSeries(int order);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const polyreal::RatPolynomial& coeff(int n) const;
  void set_coeff(int n, polyreal::RatPolynomial value);

  BivariateSeries operator+(const BivariateSeries& rhs) const;
  BivariateSeries operator-(const BivariateSeries& rhs) const;
  BivariateSeries operator*(const BivariateSeries& rhs) const;
  bool operator==(const BivariateSeries& rhs) const = default;

  /// Needs the x^0 coefficient to be a nonzero constant.
  BivariateSeries reciprocal() const;
  BivariateSeries derivative_x() const;
  BivariateSeries antiderivative_x() const;  // constant term zero
  BivariateSeries derivative_y() const;
  BivariateSeries multiply_y() const;  // by the monomial y
  BivariateSeries multiply_x() const;
  BivariateSeries truncated(int order) const;

  TruncatedSeries specialize_y(const Rat& y) const;
  /// Slice of fixed y-power: series of [y^k] coefficients.
  TruncatedSeries y_slice(int k) const;
  bool is_zero() const;

  /// n! * [x^n y^k], checked to be an integer.
  Int egf_count(int n, int k) const;

 private:
  std::vector<polyreal::RatPolynomial> c_;
};

TruncatedSeries cosine(int order);
TruncatedSeries sine(int order);

/// EGF of weakly increasing 3-dimensional permutation counts (the Springer
/// numbers): 1/(cos x - sin x).
TruncatedSeries weakly_increasing_egf(int order);

/// EGF of the Euler numbers: sec x + tan x.
TruncatedSeries euler_egf(int order);

/// EGF of unimodal 3-dimensional permutation counts, built by substituting
/// and integrating the repeats series.
TruncatedSeries unimodal_egf(int order);

/// Bivariate EGF whose n! * [x^n y^k] counts canonical (3,n)-permutations
/// with k repeated levels. The surd that appears in the closed form cancels:
/// with u = y-1, the even/odd trig expansions C = sum (-1)^m x^(2m) u^m/(2m)!
/// and S = sum (-1)^m x^(2m+1) u^m/(2m+1)! are plain rational series and the
/// whole EGF is 1/(C - S).
BivariateSeries repeats_egf(int order);

/// Bivariate EGF of peak counts of ordinary permutations, as C/(C - S) with
/// the same rationalization.
BivariateSeries peaks_egf(int order);

/// Left-hand side of the defining differential equation applied to a series:
/// F - 2(y-1)y dF/dy + (xy-1) dF/dx, truncated to `order`. Identically zero
/// exactly for the repeats EGF. The input must extend at least one order
/// beyond `order`.
BivariateSeries pde_residual(const BivariateSeries& series, int order);

} // namespace mdperm::series
