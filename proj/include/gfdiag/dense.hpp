#pragma once

// Dense coefficient-vector algorithms shared by the polynomial types.
// Index = degree; a zero polynomial is the empty vector. The coefficient
// type must provide is_zero() (found by ADL or declared in gfdiag) and the
// field operations.

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "gfdiag/error.hpp"
#include "gfdiag/rational.hpp"

namespace gfdiag::dense {

template <class T>
void trim(std::vector<T>& c) {
  while (!c.empty() && is_zero(c.back())) c.pop_back();
}

template <class T>
int degree(const std::vector<T>& c) {
  return static_cast<int>(c.size()) - 1;
}

template <class T>
std::vector<T> add(const std::vector<T>& a, const std::vector<T>& b) {
  std::vector<T> r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = r[i] + b[i];
  trim(r);
  return r;
}

template <class T>
std::vector<T> sub(const std::vector<T>& a, const std::vector<T>& b) {
  std::vector<T> r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = r[i] - b[i];
  trim(r);
  return r;
}

template <class T>
std::vector<T> mul(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<T> r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  }
  trim(r);
  return r;
}

template <class T>
std::vector<T> scale(const std::vector<T>& a, const T& s) {
  if (is_zero(s)) return {};
  std::vector<T> r(a);
  for (auto& c : r) c = c * s;
  trim(r);
  return r;
}

/// Euclidean division over a field: a = q*b + r, deg r < deg b.
template <class T>
std::pair<std::vector<T>, std::vector<T>> divrem(const std::vector<T>& a, const std::vector<T>& b) {
  if (b.empty()) throw DomainError("polynomial division by zero");
  std::vector<T> r(a);
  trim(r);
  if (r.size() < b.size()) return {{}, r};
  std::vector<T> q(r.size() - b.size() + 1);
  const T inv_lead = T(1) / b.back();
  for (std::size_t k = q.size(); k-- > 0;) {
    const T& top = r[k + b.size() - 1];
    if (is_zero(top)) continue;
    T f = top * inv_lead;
    for (std::size_t j = 0; j < b.size(); ++j) r[k + j] = r[k + j] - f * b[j];
    q[k] = f;
  }
  r.resize(b.size() - 1);
  trim(r);
  trim(q);
  return {q, r};
}

template <class T>
std::vector<T> make_monic(const std::vector<T>& a) {
  if (a.empty()) return a;
  return scale(a, T(T(1) / a.back()));
}

/// Monic gcd over a field.
template <class T>
std::vector<T> gcd(std::vector<T> a, std::vector<T> b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = divrem(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

/// Returns (g, s) with s*a = g (mod m), g = gcd(a, m) monic.
template <class T>
std::pair<std::vector<T>, std::vector<T>> half_xgcd(std::vector<T> a, std::vector<T> m) {
  trim(a);
  trim(m);
  std::vector<T> s0{T(1)}, s1{};
  std::vector<T> r0 = a, r1 = m;
  while (!r1.empty()) {
    auto [q, r] = divrem(r0, r1);
    auto s = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.empty()) return {{}, {}};
  T inv = T(1) / r0.back();
  return {scale(r0, inv), scale(s0, inv)};
}

template <class T>
std::vector<T> derivative(const std::vector<T>& a) {
  std::vector<T> r;
  if (a.size() <= 1) return r;
  r.resize(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * T(static_cast<long>(i));
  trim(r);
  return r;
}

}  // namespace gfdiag::dense
