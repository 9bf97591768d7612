#include "mdperm/polyreal.hpp"

#include <algorithm>
#include <utility>

namespace mdperm::polyreal {

namespace {
const Rat kZero(0);
}

RatPolynomial::RatPolynomial(std::vector<Rat> ascending_coeffs)
    : coeffs_(std::move(ascending_coeffs)) {
  normalize();
}

void RatPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RatPolynomial RatPolynomial::constant(Rat value) {
  return RatPolynomial(std::vector<Rat>{std::move(value)});
}

RatPolynomial RatPolynomial::variable() {
  return RatPolynomial(std::vector<Rat>{Rat(0), Rat(1)});
}

const Rat& RatPolynomial::coeff(int k) const {
  if (k < 0 || static_cast<size_t>(k) >= coeffs_.size()) return kZero;
  return coeffs_[static_cast<size_t>(k)];
}

const Rat& RatPolynomial::leading() const {
  if (is_zero()) throw ZeroPolynomial("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

RatPolynomial RatPolynomial::operator+(const RatPolynomial& rhs) const {
  std::vector<Rat> out(std::max(coeffs_.size(), rhs.coeffs_.size()), Rat(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] += rhs.coeffs_[i];
  return RatPolynomial(std::move(out));
}

RatPolynomial RatPolynomial::operator-(const RatPolynomial& rhs) const {
  return *this + (-rhs);
}

RatPolynomial RatPolynomial::operator-() const {
  std::vector<Rat> out = coeffs_;
  for (auto& c : out) c = -c;
  return RatPolynomial(std::move(out));
}

RatPolynomial RatPolynomial::operator*(const RatPolynomial& rhs) const {
  if (is_zero() || rhs.is_zero()) return RatPolynomial();
  std::vector<Rat> out(coeffs_.size() + rhs.coeffs_.size() - 1, Rat(0));
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  return RatPolynomial(std::move(out));
}

RatPolynomial RatPolynomial::operator*(const Rat& scalar) const {
  std::vector<Rat> out = coeffs_;
  for (auto& c : out) c *= scalar;
  return RatPolynomial(std::move(out));
}

RatPolynomial RatPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return RatPolynomial();
  std::vector<Rat> out(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * Rat(static_cast<long>(i));
  return RatPolynomial(std::move(out));
}

Rat RatPolynomial::operator()(const Rat& point) const {
  Rat acc(0);
  for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * point + coeffs_[i];
  return acc;
}

double RatPolynomial::eval_double(double point) const {
  double acc = 0;
  for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * point + coeffs_[i].get_d();
  return acc;
}

std::pair<RatPolynomial, RatPolynomial> RatPolynomial::divmod(const RatPolynomial& num,
                                                              const RatPolynomial& den) {
  if (den.is_zero()) throw ZeroPolynomial("division by the zero polynomial");
  std::vector<Rat> rem = num.coeffs_;
  const int dd = den.degree();
  if (num.degree() < dd) return {RatPolynomial(), num};
  std::vector<Rat> quot(static_cast<size_t>(num.degree() - dd) + 1, Rat(0));
  for (int k = num.degree() - dd; k >= 0; --k) {
    Rat factor = rem[static_cast<size_t>(k + dd)] / den.coeffs_.back();
    quot[static_cast<size_t>(k)] = factor;
    if (factor == 0) continue;
    for (int j = 0; j <= dd; ++j)
      rem[static_cast<size_t>(k + j)] -= factor * den.coeffs_[static_cast<size_t>(j)];
  }
  rem.resize(static_cast<size_t>(std::max(dd, 0)));
  return {RatPolynomial(std::move(quot)), RatPolynomial(std::move(rem))};
}

RatPolynomial RatPolynomial::gcd(const RatPolynomial& a, const RatPolynomial& b) {
  RatPolynomial x = a, y = b;
  while (!y.is_zero()) {
    auto [q, r] = divmod(x, y);
    x = std::move(y);
    y = std::move(r);
    if (!y.is_zero()) y = y.monic();  // keeps coefficient growth in check
  }
  if (x.is_zero()) return x;
  return x.monic();
}

RatPolynomial RatPolynomial::monic() const {
  if (is_zero()) return *this;
  return *this * (Rat(1) / coeffs_.back());
}

RatPolynomial RatPolynomial::squarefree_part() const {
  if (is_zero()) throw ZeroPolynomial("zero polynomial has no squarefree part");
  if (degree() == 0) return monic();
  RatPolynomial g = gcd(*this, derivative());
  if (g.degree() == 0) return monic();
  return divmod(*this, g).first.monic();
}

bool RatPolynomial::is_squarefree() const {
  if (is_zero()) return false;
  if (degree() <= 1) return true;
  return gcd(*this, derivative()).degree() == 0;
}

Rat root_bound(const RatPolynomial& p) {
  if (p.is_zero()) throw ZeroPolynomial("no root bound for the zero polynomial");
  Rat best(0);
  for (int k = 0; k < p.degree(); ++k) {
    Rat ratio = abs(p.coeff(k) / p.leading());
    if (ratio > best) best = ratio;
  }
  return best + 1;
}

namespace {

// Sturm chain: f, f', then negated remainders down to a constant.
std::vector<RatPolynomial> sturm_chain(const RatPolynomial& p) {
  std::vector<RatPolynomial> chain;
  chain.push_back(p);
  RatPolynomial d = p.derivative();
  if (!d.is_zero()) chain.push_back(d);
  while (chain.back().degree() > 0) {
    auto [q, r] = RatPolynomial::divmod(chain[chain.size() - 2], chain.back());
    if (r.is_zero()) break;
    RatPolynomial next = -r;
    // Positive rescaling keeps sign variations intact and coefficients small.
    chain.push_back(next * (Rat(1) / abs(next.leading())));
  }
  return chain;
}

int sign_at(const RatPolynomial& p, const Rat& x) { return sgn(p(x)); }

int variations(const std::vector<RatPolynomial>& chain, const Rat& x) {
  int count = 0, last = 0;
  for (const auto& p : chain) {
    const int s = sign_at(p, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

} // namespace

int sturm_count(const RatPolynomial& p, const Rat& a, const Rat& b) {
  if (p.is_zero()) throw ZeroPolynomial("Sturm count needs a nonzero polynomial");
  if (!(a < b)) throw DomainError("Sturm interval needs a < b");
  if (p(a) == 0) throw EndpointIsRoot("left endpoint is a root");
  if (p(b) == 0) throw EndpointIsRoot("right endpoint is a root");
  const auto chain = sturm_chain(p);
  return variations(chain, a) - variations(chain, b);
}

int real_root_count(const RatPolynomial& p) {
  if (p.is_zero()) throw ZeroPolynomial("root count needs a nonzero polynomial");
  if (p.degree() == 0) return 0;
  const Rat bound = root_bound(p);
  return sturm_count(p, -bound, bound);
}

bool is_real_rooted(const RatPolynomial& p) {
  if (p.is_zero()) throw ZeroPolynomial("real-rootedness needs a nonzero polynomial");
  if (p.degree() == 0) return true;
  const RatPolynomial radical = p.squarefree_part();
  return real_root_count(p) == radical.degree();
}

namespace {

// Split point inside (lo, hi) that is not a root; tries the midpoint first,
// then nearby fractions (a polynomial has finitely many roots).
Rat non_root_split(const RatPolynomial& p, const Rat& lo, const Rat& hi) {
  for (long den = 2;; ++den) {
    for (long numer = 1; numer < den; ++numer) {
      Rat frac(numer, den);
      frac.canonicalize();
      Rat point = lo + (hi - lo) * frac;
      if (p(point) != 0) return point;
    }
  }
}

void isolate_into(const RatPolynomial& p, const std::vector<RatPolynomial>& chain,
                  Rat lo, Rat hi, int roots, const Rat& tolerance,
                  std::vector<RootInterval>& out) {
  if (roots == 0) return;
  if (roots == 1 && hi - lo <= tolerance) {
    out.push_back({lo, hi});
    return;
  }
  Rat mid = lo + (hi - lo) / 2;
  mid.canonicalize();
  if (p(mid) == 0) {
    // mid is an exact root: carve out a punctured neighbourhood holding only
    // this root, with non-root endpoints, then recurse on the flanks.
    Rat width = (hi - lo) / 4;
    Rat lo2, hi2;
    while (true) {
      lo2 = mid - width;
      hi2 = mid + width;
      if (lo < lo2 && hi2 < hi && p(lo2) != 0 && p(hi2) != 0 &&
          variations(chain, lo2) - variations(chain, hi2) == 1)
        break;
      width /= 2;
    }
    out.push_back({mid, mid});
    isolate_into(p, chain, lo, lo2, variations(chain, lo) - variations(chain, lo2),
                 tolerance, out);
    isolate_into(p, chain, hi2, hi, variations(chain, hi2) - variations(chain, hi),
                 tolerance, out);
    return;
  }
  const int left = variations(chain, lo) - variations(chain, mid);
  isolate_into(p, chain, lo, mid, left, tolerance, out);
  isolate_into(p, chain, mid, hi, roots - left, tolerance, out);
}

} // namespace

RootIsolation isolate_roots(const RatPolynomial& p, const Rat& tolerance) {
  if (p.is_zero()) throw ZeroPolynomial("cannot isolate roots of the zero polynomial");
  if (!p.is_squarefree()) throw NotSquareFree("root isolation needs a squarefree polynomial");
  RootIsolation out;
  if (p.degree() == 0) return out;
  const Rat bound = root_bound(p);
  const auto chain = sturm_chain(p);
  const int total = variations(chain, -bound) - variations(chain, bound);
  isolate_into(p, chain, -bound, bound, total, tolerance, out.intervals);
  std::sort(out.intervals.begin(), out.intervals.end(),
            [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
  return out;
}

namespace {

// Bisects an isolating interval once, keeping the root inside.
RootInterval shrink(const RatPolynomial& p, const RootInterval& iv) {
  if (iv.exact()) return iv;
  Rat mid = non_root_split(p, iv.lo, iv.hi);
  if (sgn(p(iv.lo)) * sgn(p(mid)) < 0) return {iv.lo, mid};
  return {mid, iv.hi};
}

bool overlaps(const RootInterval& a, const RootInterval& b) {
  return !(a.hi < b.lo || b.hi < a.lo);
}

} // namespace

bool interlaces(const RatPolynomial& g, const RatPolynomial& f) {
  // Zero-polynomial convention: anything real-rooted interlaces with 0.
  if (f.is_zero() || g.is_zero()) {
    const RatPolynomial& other = f.is_zero() ? g : f;
    if (!other.is_zero() && !is_real_rooted(other))
      throw NotRealRooted("interlacing needs real-rooted polynomials");
    return true;
  }
  const int gap = f.degree() - g.degree();
  if (gap != 0 && gap != 1)
    throw DegreeGapTooLarge("deg f must be deg g or deg g + 1 (got gap " +
                            std::to_string(gap) + ")");
  if (!is_real_rooted(f) || !is_real_rooted(g))
    throw NotRealRooted("interlacing needs real-rooted polynomials");

  // Shared roots are divided out; the inequalities are non-strict.
  const RatPolynomial common = RatPolynomial::gcd(f, g);
  RatPolynomial fr = f, gr = g;
  if (common.degree() > 0) {
    fr = RatPolynomial::divmod(f, common).first;
    gr = RatPolynomial::divmod(g, common).first;
  }
  if (gr.degree() == 0) return true;  // constants interlace degree <= 1
  // A repeated root in one part would need the (coprime) other part to hit
  // it exactly; impossible, so alternation fails.
  if (!fr.is_squarefree() || !gr.is_squarefree()) return false;

  auto fiso = isolate_roots(fr).intervals;
  auto giso = isolate_roots(gr).intervals;
  // Refine until the two families are pairwise disjoint (no shared roots, so
  // this terminates).
  for (bool dirty = true; dirty;) {
    dirty = false;
    for (auto& fi : fiso)
      for (auto& gi : giso)
        if (overlaps(fi, gi)) {
          fi = shrink(fr, fi);
          gi = shrink(gr, gi);
          dirty = true;
        }
  }

  struct Tagged {
    Rat lo;
    bool from_f;
  };
  std::vector<Tagged> merged;
  for (const auto& iv : fiso) merged.push_back({iv.lo, true});
  for (const auto& iv : giso) merged.push_back({iv.lo, false});
  std::sort(merged.begin(), merged.end(),
            [](const Tagged& a, const Tagged& b) { return a.lo < b.lo; });

  // Ascending alternation: gap 1 wants f g f g ... f, gap 0 wants g f ... g f.
  bool expect_f = gap == 1;
  for (const auto& item : merged) {
    if (item.from_f != expect_f) return false;
    expect_f = !expect_f;
  }
  return true;
}

RatPolynomial repeats_row_polynomial(int n) {
  if (n < 0) throw DomainError("row index must be non-negative");
  RatPolynomial row = RatPolynomial::constant(Rat(1));  // rows 0 and 1
  const RatPolynomial y = RatPolynomial::variable();
  // 2y(y-1)
  const RatPolynomial two_y_ym1 = y * (y - RatPolynomial::constant(Rat(1))) * Rat(2);
  for (int m = 2; m <= n; ++m) {
    RatPolynomial scale = y * Rat(m - 1) + RatPolynomial::constant(Rat(1));
    row = scale * row - two_y_ym1 * row.derivative();
  }
  return row;
}

} // namespace mdperm::polyreal
