#pragma once

// Directed-interval arithmetic. Every operation rounds to nearest and then
// steps one ulp outward on each side, so the result contains the exact image
// of the operands.

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "hyperratio/error.hpp"

namespace hyperratio {

template <class T>
inline T step_down(T v, int ulps = 1) {
  for (int i = 0; i < ulps; ++i) v = std::nextafter(v, -std::numeric_limits<T>::infinity());
  return v;
}

template <class T>
inline T step_up(T v, int ulps = 1) {
  for (int i = 0; i < ulps; ++i) v = std::nextafter(v, std::numeric_limits<T>::infinity());
  return v;
}

template <class T>
class BasicEnclosure {
 public:
  using value_type = T;

  constexpr BasicEnclosure() = default;
  constexpr explicit BasicEnclosure(T point) : lo_(point), hi_(point) {}
  BasicEnclosure(T lo, T hi) : lo_(lo), hi_(hi) {
    require(!(lo > hi), ErrorCode::Domain, "enclosure requires lo <= hi");
  }

  // Encloses a value known only up to `ulps` units in the last place, e.g. the
  // output of a libm routine.
  static BasicEnclosure around(T value, int ulps) {
    return BasicEnclosure(step_down(value, ulps), step_up(value, ulps));
  }

  // Smallest enclosure of both arguments.
  static BasicEnclosure hull(T a, T b) { return BasicEnclosure(std::min(a, b), std::max(a, b)); }

  T lo() const { return lo_; }
  T hi() const { return hi_; }
  T mid() const { return lo_ + (hi_ - lo_) / 2; }
  T width() const { return hi_ - lo_; }

  // (hi - lo) / max(|lo|, |hi|); infinite when the enclosure touches zero.
  T rel_width() const {
    if (contains_zero()) return std::numeric_limits<T>::infinity();
    return width() / std::max(std::fabs(lo_), std::fabs(hi_));
  }

  bool contains(T v) const { return lo_ <= v && v <= hi_; }
  bool contains_zero() const { return lo_ <= 0 && 0 <= hi_; }
  bool subset_of(const BasicEnclosure& o) const { return o.lo_ <= lo_ && hi_ <= o.hi_; }
  bool overlaps(const BasicEnclosure& o) const { return lo_ <= o.hi_ && o.lo_ <= hi_; }
  bool is_finite() const { return std::isfinite(lo_) && std::isfinite(hi_); }

  template <class U>
  BasicEnclosure<U> convert() const {
    U lo = static_cast<U>(lo_);
    U hi = static_cast<U>(hi_);
    if (static_cast<T>(lo) > lo_) lo = step_down(lo);
    if (static_cast<T>(hi) < hi_) hi = step_up(hi);
    return BasicEnclosure<U>(lo, hi);
  }

  friend BasicEnclosure operator+(const BasicEnclosure& a, const BasicEnclosure& b) {
    return outward(a.lo_ + b.lo_, a.hi_ + b.hi_);
  }
  friend BasicEnclosure operator-(const BasicEnclosure& a, const BasicEnclosure& b) {
    return outward(a.lo_ - b.hi_, a.hi_ - b.lo_);
  }
  friend BasicEnclosure operator-(const BasicEnclosure& a) { return BasicEnclosure(-a.hi_, -a.lo_); }
  friend BasicEnclosure operator*(const BasicEnclosure& a, const BasicEnclosure& b) {
    const T p1 = a.lo_ * b.lo_, p2 = a.lo_ * b.hi_, p3 = a.hi_ * b.lo_, p4 = a.hi_ * b.hi_;
    return outward(std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4}));
  }
  friend BasicEnclosure operator/(const BasicEnclosure& a, const BasicEnclosure& b) {
    if (b.contains_zero()) fail(ErrorCode::DivisionContainsZero, "divisor enclosure contains 0");
    const T q1 = a.lo_ / b.lo_, q2 = a.lo_ / b.hi_, q3 = a.hi_ / b.lo_, q4 = a.hi_ / b.hi_;
    return outward(std::min({q1, q2, q3, q4}), std::max({q1, q2, q3, q4}));
  }

  friend BasicEnclosure operator+(const BasicEnclosure& a, T s) { return a + BasicEnclosure(s); }
  friend BasicEnclosure operator+(T s, const BasicEnclosure& a) { return BasicEnclosure(s) + a; }
  friend BasicEnclosure operator-(const BasicEnclosure& a, T s) { return a - BasicEnclosure(s); }
  friend BasicEnclosure operator-(T s, const BasicEnclosure& a) { return BasicEnclosure(s) - a; }
  friend BasicEnclosure operator*(const BasicEnclosure& a, T s) { return a * BasicEnclosure(s); }
  friend BasicEnclosure operator*(T s, const BasicEnclosure& a) { return BasicEnclosure(s) * a; }
  friend BasicEnclosure operator/(const BasicEnclosure& a, T s) { return a / BasicEnclosure(s); }
  friend BasicEnclosure operator/(T s, const BasicEnclosure& a) { return BasicEnclosure(s) / a; }

  friend bool operator==(const BasicEnclosure&, const BasicEnclosure&) = default;

  friend std::ostream& operator<<(std::ostream& os, const BasicEnclosure& e) {
    return os << '[' << e.lo_ << ", " << e.hi_ << ']';
  }

 private:
  static BasicEnclosure outward(T lo, T hi) { return BasicEnclosure(step_down(lo), step_up(hi)); }

  T lo_{};
  T hi_{};
};

using Enclosure = BasicEnclosure<double>;
// Working precision of the oracles; results are handed out as Enclosure.
using WideEnclosure = BasicEnclosure<long double>;

template <class T>
BasicEnclosure<T> sqrt(const BasicEnclosure<T>& e) {
  if (e.lo() < 0) fail(ErrorCode::NegativeSqrt, "sqrt of enclosure with negative lower end");
  const T lo = step_down(std::sqrt(e.lo()));
  return BasicEnclosure<T>(std::max(lo, T(0)), step_up(std::sqrt(e.hi())));
}

template <class T>
BasicEnclosure<T> reciprocal(const BasicEnclosure<T>& e) {
  return T(1) / e;
}

template <class T>
BasicEnclosure<T> square(const BasicEnclosure<T>& e) {
  if (e.lo() >= 0 || e.hi() <= 0) {
    const BasicEnclosure<T> p = e * e;
    return BasicEnclosure<T>(std::max(p.lo(), T(0)), p.hi());
  }
  const T m = std::max(-e.lo(), e.hi());
  return BasicEnclosure<T>(0, step_up(m * m));
}

// Intersection of two enclosures of the same quantity.
template <class T>
BasicEnclosure<T> intersect(const BasicEnclosure<T>& a, const BasicEnclosure<T>& b) {
  if (!a.overlaps(b)) fail(ErrorCode::Domain, "intersecting disjoint enclosures");
  return BasicEnclosure<T>(std::max(a.lo(), b.lo()), std::min(a.hi(), b.hi()));
}

Enclosure enclosure_add(const Enclosure& a, const Enclosure& b);
Enclosure enclosure_sub(const Enclosure& a, const Enclosure& b);
Enclosure enclosure_mul(const Enclosure& a, const Enclosure& b);
Enclosure enclosure_div(const Enclosure& a, const Enclosure& b);
Enclosure enclosure_sqrt(const Enclosure& a);

}  // namespace hyperratio
