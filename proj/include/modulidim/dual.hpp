#pragma once

#include <cmath>
#include <utility>

namespace modulidim {

/// Forward-mode dual number a + b*eps, eps^2 = 0.  Nests with itself for
/// second derivatives.
template <class T>
struct Dual {
  T re{};
  T du{};

  Dual() = default;
  Dual(T r) : re(std::move(r)) {}
  Dual(T r, T d) : re(std::move(r)), du(std::move(d)) {}

  Dual operator-() const { return {-re, -du}; }

  friend Dual operator+(const Dual& a, const Dual& b) { return {a.re + b.re, a.du + b.du}; }
  friend Dual operator-(const Dual& a, const Dual& b) { return {a.re - b.re, a.du - b.du}; }
  friend Dual operator*(const Dual& a, const Dual& b) {
    return {a.re * b.re, a.re * b.du + a.du * b.re};
  }
  friend Dual operator/(const Dual& a, const Dual& b) {
    return {a.re / b.re, (a.du * b.re - a.re * b.du) / (b.re * b.re)};
  }

  Dual& operator+=(const Dual& o) { return *this = *this + o; }
  Dual& operator-=(const Dual& o) { return *this = *this - o; }
  Dual& operator*=(const Dual& o) { return *this = *this * o; }
  Dual& operator/=(const Dual& o) { return *this = *this / o; }
};

using std::sqrt;

template <class T>
Dual<T> sqrt(const Dual<T>& x) {
  T r = sqrt(x.re);
  return {r, x.du / (T(2) * r)};
}

template <class T>
T value_of(const Dual<T>& x) {
  return x.re;
}
inline double value_of(double x) { return x; }

/// d/dx f at x, via one dual evaluation.  Nesting T = Dual<U> yields the
/// derivative as a dual carrying the second derivative.
template <class F, class T>
T derivative(F&& f, const T& x) {
  Dual<T> r = std::forward<F>(f)(Dual<T>{x, T(1)});
  return r.du;
}

} // namespace modulidim
