#ifndef NULLCONE_INTERPOLATION_HPP
#define NULLCONE_INTERPOLATION_HPP

// Exact univariate interpolation in the monomial basis.

#include "nullcone/rational.hpp"

#include <span>
#include <stdexcept>
#include <vector>

namespace nullcone {

/// Monomial coefficients a_0..a_d of the unique degree <= d polynomial taking
/// values[k] at nodes[k] (d + 1 = nodes.size()).
///
/// V only needs +=, -= and multiplication by a Rational, so the same routine
/// serves scalar values and matrix values.
template <class V>
std::vector<V> interpolate(std::span<const Rational> nodes, std::vector<V> values) {
  const std::size_t n = nodes.size();
  if (n == 0 || values.size() != n) throw std::invalid_argument("interpolate: size mismatch");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (nodes[i] == nodes[j]) throw std::invalid_argument("interpolate: repeated node");

  // Newton divided differences, in place.
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t k = n - 1; k >= level; --k) {
      V diff = values[k];
      diff -= values[k - 1];
      values[k] = diff * (Rational(1) / (nodes[k] - nodes[k - level]));
      if (k == level) break;
    }

  // Horner expansion of the Newton form into monomial coefficients.
  V zero = values[0];
  zero -= values[0];
  std::vector<V> coeffs(n, zero);
  coeffs[0] = values[n - 1];
  std::size_t deg = 0;
  for (std::size_t k = n - 1; k-- > 0;) {
    // coeffs <- coeffs * (t - nodes[k]) + values[k]
    std::vector<V> next(n, zero);
    for (std::size_t j = 0; j <= deg; ++j) {
      next[j + 1] += coeffs[j];
      V scaled = coeffs[j] * nodes[k];
      next[j] -= scaled;
    }
    next[0] += values[k];
    coeffs = std::move(next);
    ++deg;
  }
  return coeffs;
}

template <class V>
V evaluate_polynomial(std::span<const V> coeffs, const Rational& t) {
  V acc = coeffs.back();
  for (std::size_t k = coeffs.size() - 1; k-- > 0;) {
    acc = acc * t;
    acc += coeffs[k];
  }
  return acc;
}

/// Nodes 0, 1, ..., count-1.
inline std::vector<Rational> integer_nodes(std::size_t count) {
  std::vector<Rational> t(count);
  for (std::size_t k = 0; k < count; ++k) t[k] = static_cast<long>(k);
  return t;
}

/// Drops trailing zero coefficients; the zero polynomial becomes empty.
inline std::vector<Rational> trim_polynomial(std::vector<Rational> p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

/// Remainder of a by b (b nonzero), coefficients in ascending order.
inline std::vector<Rational> polynomial_remainder(std::vector<Rational> a, const std::vector<Rational>& b_in) {
  const std::vector<Rational> b = trim_polynomial(b_in);
  if (b.empty()) throw std::domain_error("polynomial_remainder: division by zero");
  a = trim_polynomial(std::move(a));
  while (a.size() >= b.size()) {
    const Rational q = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= q * b[k];
    a = trim_polynomial(std::move(a));
  }
  return a;
}

/// Monic gcd; gcd(0, 0) is the zero polynomial.
inline std::vector<Rational> polynomial_gcd(std::vector<Rational> a, std::vector<Rational> b) {
  a = trim_polynomial(std::move(a));
  b = trim_polynomial(std::move(b));
  while (!b.empty()) {
    auto r = polynomial_remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

}  // namespace nullcone

#endif  // NULLCONE_INTERPOLATION_HPP
