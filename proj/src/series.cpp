#include "mdperm/series.hpp"

#include <algorithm>

namespace mdperm::series {

using polyreal::RatPolynomial;

// ---------------------------------------------------------------- univariate

TruncatedSeries::TruncatedSeries(int order) {
  if (order < 0) throw DomainError("series order must be non-negative");
  c_.assign(static_cast<size_t>(order) + 1, Rat(0));
}

const Rat& TruncatedSeries::coeff(int n) const {
  static const Rat zero(0);
  if (n < 0 || static_cast<size_t>(n) >= c_.size()) return zero;
  return c_[static_cast<size_t>(n)];
}

void TruncatedSeries::set_coeff(int n, Rat value) {
  c_.at(static_cast<size_t>(n)) = std::move(value);
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& rhs) const {
  TruncatedSeries out(std::min(order(), rhs.order()));
  for (int n = 0; n <= out.order(); ++n) out.c_[static_cast<size_t>(n)] = coeff(n) + rhs.coeff(n);
  return out;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& rhs) const {
  TruncatedSeries out(std::min(order(), rhs.order()));
  for (int n = 0; n <= out.order(); ++n) out.c_[static_cast<size_t>(n)] = coeff(n) - rhs.coeff(n);
  return out;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& rhs) const {
  TruncatedSeries out(std::min(order(), rhs.order()));
  for (int n = 0; n <= out.order(); ++n) {
    Rat acc(0);
    for (int i = 0; i <= n; ++i) acc += coeff(i) * rhs.coeff(n - i);
    out.c_[static_cast<size_t>(n)] = std::move(acc);
  }
  return out;
}

TruncatedSeries TruncatedSeries::operator*(const Rat& scalar) const {
  TruncatedSeries out = *this;
  for (auto& c : out.c_) c *= scalar;
  return out;
}

TruncatedSeries TruncatedSeries::reciprocal() const {
  if (coeff(0) == 0) throw ZeroConstantTerm("series has no multiplicative inverse");
  TruncatedSeries out(order());
  const Rat inv0 = Rat(1) / coeff(0);
  out.c_[0] = inv0;
  for (int n = 1; n <= order(); ++n) {
    Rat acc(0);
    for (int i = 1; i <= n; ++i) acc += coeff(i) * out.c_[static_cast<size_t>(n - i)];
    out.c_[static_cast<size_t>(n)] = -acc * inv0;
  }
  return out;
}

TruncatedSeries TruncatedSeries::derivative() const {
  if (order() == 0) throw InsufficientOrder("cannot differentiate an order-0 series");
  TruncatedSeries out(order() - 1);
  for (int n = 1; n <= order(); ++n) out.c_[static_cast<size_t>(n - 1)] = coeff(n) * Rat(n);
  return out;
}

TruncatedSeries TruncatedSeries::antiderivative(const Rat& constant_term) const {
  TruncatedSeries out(order() + 1);
  out.c_[0] = constant_term;
  for (int n = 0; n <= order(); ++n) out.c_[static_cast<size_t>(n + 1)] = coeff(n) / Rat(n + 1);
  return out;
}

TruncatedSeries TruncatedSeries::scale_argument(const Rat& a) const {
  TruncatedSeries out(order());
  Rat power(1);
  for (int n = 0; n <= order(); ++n) {
    out.c_[static_cast<size_t>(n)] = coeff(n) * power;
    power *= a;
  }
  return out;
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
  TruncatedSeries out(order);
  for (int n = 0; n <= std::min(order, this->order()); ++n)
    out.c_[static_cast<size_t>(n)] = coeff(n);
  return out;
}

Int TruncatedSeries::egf_count(int n) const {
  if (n < 0 || n > order()) throw InsufficientOrder("coefficient beyond truncation order");
  Rat value = coeff(n) * Rat(factorial(static_cast<unsigned long>(n)));
  value.canonicalize();
  if (value.get_den() != 1)
    throw Error("EGF count at index " + std::to_string(n) + " is not an integer: " +
                value.get_str());
  return value.get_num();
}

double TruncatedSeries::eval_double(double x) const {
  double acc = 0;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i].get_d();
  return acc;
}

// ----------------------------------------------------------------- bivariate

BivariateSeries::BivariateSeries(int order) {
  if (order < 0) throw DomainError("series order must be non-negative");
  c_.assign(static_cast<size_t>(order) + 1, RatPolynomial());
}

const RatPolynomial& BivariateSeries::coeff(int n) const {
  static const RatPolynomial zero;
  if (n < 0 || static_cast<size_t>(n) >= c_.size()) return zero;
  return c_[static_cast<size_t>(n)];
}

void BivariateSeries::set_coeff(int n, RatPolynomial value) {
  c_.at(static_cast<size_t>(n)) = std::move(value);
}

BivariateSeries BivariateSeries::operator+(const BivariateSeries& rhs) const {
  BivariateSeries out(std::min(order(), rhs.order()));
  for (int n = 0; n <= out.order(); ++n) out.c_[static_cast<size_t>(n)] = coeff(n) + rhs.coeff(n);
  return out;
}

BivariateSeries BivariateSeries::operator-(const BivariateSeries& rhs) const {
  BivariateSeries out(std::min(order(), rhs.order()));
  for (int n = 0; n <= out.order(); ++n) out.c_[static_cast<size_t>(n)] = coeff(n) - rhs.coeff(n);
  return out;
}

BivariateSeries BivariateSeries::operator*(const BivariateSeries& rhs) const {
  BivariateSeries out(std::min(order(), rhs.order()));
  for (int n = 0; n <= out.order(); ++n) {
    RatPolynomial acc;
    for (int i = 0; i <= n; ++i) acc = acc + coeff(i) * rhs.coeff(n - i);
    out.c_[static_cast<size_t>(n)] = std::move(acc);
  }
  return out;
}

BivariateSeries BivariateSeries::reciprocal() const {
  const RatPolynomial& head = coeff(0);
  if (head.is_zero() || head.degree() != 0)
    throw ZeroConstantTerm("bivariate reciprocal needs a nonzero constant leading coefficient");
  BivariateSeries out(order());
  const Rat inv0 = Rat(1) / head.coeff(0);
  out.c_[0] = RatPolynomial::constant(inv0);
  for (int n = 1; n <= order(); ++n) {
    RatPolynomial acc;
    for (int i = 1; i <= n; ++i) acc = acc + coeff(i) * out.c_[static_cast<size_t>(n - i)];
    out.c_[static_cast<size_t>(n)] = (-acc) * inv0;
  }
  return out;
}

BivariateSeries BivariateSeries::derivative_x() const {
  if (order() == 0) throw InsufficientOrder("cannot differentiate an order-0 series");
  BivariateSeries out(order() - 1);
  for (int n = 1; n <= order(); ++n)
    out.c_[static_cast<size_t>(n - 1)] = coeff(n) * Rat(n);
  return out;
}

BivariateSeries BivariateSeries::antiderivative_x() const {
  BivariateSeries out(order() + 1);
  for (int n = 0; n <= order(); ++n)
    out.c_[static_cast<size_t>(n + 1)] = coeff(n) * (Rat(1) / Rat(n + 1));
  return out;
}

BivariateSeries BivariateSeries::derivative_y() const {
  BivariateSeries out(order());
  for (int n = 0; n <= order(); ++n) out.c_[static_cast<size_t>(n)] = coeff(n).derivative();
  return out;
}

BivariateSeries BivariateSeries::multiply_y() const {
  BivariateSeries out(order());
  for (int n = 0; n <= order(); ++n)
    out.c_[static_cast<size_t>(n)] = coeff(n) * RatPolynomial::variable();
  return out;
}

BivariateSeries BivariateSeries::multiply_x() const {
  BivariateSeries out(order());
  for (int n = out.order(); n >= 1; --n) out.c_[static_cast<size_t>(n)] = coeff(n - 1);
  out.c_[0] = RatPolynomial();
  return out;
}

BivariateSeries BivariateSeries::truncated(int order) const {
  BivariateSeries out(order);
  for (int n = 0; n <= std::min(order, this->order()); ++n)
    out.c_[static_cast<size_t>(n)] = coeff(n);
  return out;
}

TruncatedSeries BivariateSeries::specialize_y(const Rat& y) const {
  TruncatedSeries out(order());
  for (int n = 0; n <= order(); ++n) out.set_coeff(n, coeff(n)(y));
  return out;
}

TruncatedSeries BivariateSeries::y_slice(int k) const {
  TruncatedSeries out(order());
  for (int n = 0; n <= order(); ++n) out.set_coeff(n, coeff(n).coeff(k));
  return out;
}

bool BivariateSeries::is_zero() const {
  return std::all_of(c_.begin(), c_.end(),
                     [](const RatPolynomial& p) { return p.is_zero(); });
}

Int BivariateSeries::egf_count(int n, int k) const {
  if (n < 0 || n > order()) throw InsufficientOrder("coefficient beyond truncation order");
  Rat value = coeff(n).coeff(k) * Rat(factorial(static_cast<unsigned long>(n)));
  value.canonicalize();
  if (value.get_den() != 1)
    throw Error("EGF count at (" + std::to_string(n) + "," + std::to_string(k) +
                ") is not an integer: " + value.get_str());
  return value.get_num();
}

// ------------------------------------------------------------------ builders

TruncatedSeries cosine(int order) {
  TruncatedSeries out(order);
  Rat term(1);
  for (int m = 0; 2 * m <= order; ++m) {
    if (m > 0) term /= Rat((2 * m - 1) * 2 * m);
    out.set_coeff(2 * m, (m % 2 == 0) ? term : -term);
  }
  return out;
}

TruncatedSeries sine(int order) {
  TruncatedSeries out(order);
  Rat term(1);
  for (int m = 0; 2 * m + 1 <= order; ++m) {
    if (m > 0) term /= Rat(2 * m * (2 * m + 1));
    out.set_coeff(2 * m + 1, (m % 2 == 0) ? term : -term);
  }
  return out;
}

TruncatedSeries weakly_increasing_egf(int order) {
  return (cosine(order) - sine(order)).reciprocal();
}

TruncatedSeries euler_egf(int order) {
  // sec + tan = (1 + sin)/cos
  TruncatedSeries one(order);
  one.set_coeff(0, Rat(1));
  return (one + sine(order)) * cosine(order).reciprocal();
}

namespace {

// Even rationalized expansion: sum_m (-1)^m x^(2m) (y-1)^m / (2m)!.
BivariateSeries even_trig(int order) {
  BivariateSeries out(order);
  const RatPolynomial u =
      RatPolynomial::variable() - RatPolynomial::constant(Rat(1));  // y - 1
  RatPolynomial u_power = RatPolynomial::constant(Rat(1));
  Rat inv_factorial(1);
  for (int m = 0; 2 * m <= order; ++m) {
    if (m > 0) {
      u_power = u_power * u;
      inv_factorial /= Rat((2 * m - 1) * 2 * m);
    }
    out.set_coeff(2 * m, u_power * ((m % 2 == 0) ? inv_factorial : -inv_factorial));
  }
  return out;
}

// Odd rationalized expansion: sum_m (-1)^m x^(2m+1) (y-1)^m / (2m+1)!.
BivariateSeries odd_trig(int order) {
  BivariateSeries out(order);
  const RatPolynomial u =
      RatPolynomial::variable() - RatPolynomial::constant(Rat(1));
  RatPolynomial u_power = RatPolynomial::constant(Rat(1));
  Rat inv_factorial(1);
  for (int m = 0; 2 * m + 1 <= order; ++m) {
    if (m > 0) {
      u_power = u_power * u;
      inv_factorial /= Rat(2 * m * (2 * m + 1));
    }
    out.set_coeff(2 * m + 1, u_power * ((m % 2 == 0) ? inv_factorial : -inv_factorial));
  }
  return out;
}

} // namespace

BivariateSeries repeats_egf(int order) {
  return (even_trig(order) - odd_trig(order)).reciprocal();
}

BivariateSeries peaks_egf(int order) {
  const BivariateSeries c = even_trig(order);
  return c * (c - odd_trig(order)).reciprocal();
}

TruncatedSeries unimodal_egf(int order) {
  if (order < 1) throw DomainError("the unimodal EGF needs order at least 1");
  // Specialize y to 1/2, rescale the argument by 2, then integrate from 0.
  TruncatedSeries inner =
      repeats_egf(order - 1).specialize_y(Rat(1, 2)).scale_argument(Rat(2));
  return inner.antiderivative(Rat(0));
}

BivariateSeries pde_residual(const BivariateSeries& series, int order) {
  if (series.order() < order + 1)
    throw InsufficientOrder("residual to order " + std::to_string(order) +
                            " needs input order " + std::to_string(order + 1));
  const RatPolynomial y = RatPolynomial::variable();
  const RatPolynomial one = RatPolynomial::constant(Rat(1));
  BivariateSeries dy = series.derivative_y();
  BivariateSeries dx = series.derivative_x();

  // series - 2(y-1)y dF/dy + (xy - 1) dF/dx
  BivariateSeries scaled_dy(dy.order());
  const RatPolynomial two_y_ym1 = (y - one) * y * Rat(2);
  for (int n = 0; n <= dy.order(); ++n) scaled_dy.set_coeff(n, dy.coeff(n) * two_y_ym1);

  BivariateSeries xy_dx = dx.multiply_x().multiply_y();
  return (series.truncated(order) - scaled_dy.truncated(order)) +
         (xy_dx.truncated(order) - dx.truncated(order));
}

} // namespace mdperm::series
