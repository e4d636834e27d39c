#ifndef NULLCONE_MODULAR_HPP
#define NULLCONE_MODULAR_HPP

// Dense linear algebra and polynomials over Z/p for p = 2^61 - 1.

#include "nullcone/linalg.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace nullcone::modp {

inline constexpr std::uint64_t kPrime = (1ull << 61) - 1;

inline std::uint64_t add(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t s = a + b;
  return s >= kPrime ? s - kPrime : s;
}
inline std::uint64_t sub(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kPrime - b; }
inline std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  std::uint64_t s = static_cast<std::uint64_t>(p & kPrime) + static_cast<std::uint64_t>(p >> 61);
  if (s >= kPrime) s -= kPrime;
  return s >= kPrime ? s - kPrime : s;
}
inline std::uint64_t power(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  for (; e; e >>= 1, a = mul(a, a))
    if (e & 1) r = mul(r, a);
  return r;
}
inline std::uint64_t inv(std::uint64_t a) { return power(a, kPrime - 2); }

/// Image of q, or nothing when p divides the denominator.
inline std::optional<std::uint64_t> reduce(const Rational& q) {
  const mpz_class P = static_cast<unsigned long>(kPrime);
  mpz_class n = q.get_num() % P, d = q.get_den() % P;
  if (n < 0) n += P;
  if (d == 0) return std::nullopt;
  return mul(static_cast<std::uint64_t>(n.get_ui()), inv(static_cast<std::uint64_t>(d.get_ui())));
}

struct Mat {
  std::size_t n = 0, m = 0;
  std::vector<std::uint64_t> a;
  Mat(std::size_t r, std::size_t c) : n(r), m(c), a(r * c, 0) {}
  std::uint64_t& operator()(std::size_t i, std::size_t j) { return a[i * m + j]; }
  std::uint64_t operator()(std::size_t i, std::size_t j) const { return a[i * m + j]; }
};

inline std::optional<Mat> reduce(const Matrix& x) {
  Mat r(x.rows(), x.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) {
      const auto v = reduce(x(i, j));
      if (!v) return std::nullopt;
      r(i, j) = *v;
    }
  return r;
}

inline Mat operator*(const Mat& x, const Mat& y) {
  Mat r(x.n, y.m);
  for (std::size_t i = 0; i < x.n; ++i)
    for (std::size_t k = 0; k < x.m; ++k) {
      const std::uint64_t v = x(i, k);
      if (!v) continue;
      for (std::size_t j = 0; j < y.m; ++j) r(i, j) = add(r(i, j), mul(v, y(k, j)));
    }
  return r;
}

/// Inverse of a square matrix, or nothing when it is singular.
inline std::optional<Mat> inverse(Mat x) {
  const std::size_t n = x.n;
  Mat r(n, n);
  for (std::size_t i = 0; i < n; ++i) r(i, i) = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && x(p, c) == 0) ++p;
    if (p == n) return std::nullopt;
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(x(p, j), x(c, j));
      std::swap(r(p, j), r(c, j));
    }
    const std::uint64_t iv = inv(x(c, c));
    for (std::size_t j = 0; j < n; ++j) {
      x(c, j) = mul(x(c, j), iv);
      r(c, j) = mul(r(c, j), iv);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || x(i, c) == 0) continue;
      const std::uint64_t f = x(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        x(i, j) = sub(x(i, j), mul(f, x(c, j)));
        r(i, j) = sub(r(i, j), mul(f, r(c, j)));
      }
    }
  }
  return r;
}

/// det(tI - x), ascending coefficients, via Hessenberg reduction.
inline std::vector<std::uint64_t> charpoly(Mat h) {
  const std::size_t n = h.n;
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t piv = j + 1;
    while (piv < n && h(piv, j) == 0) ++piv;
    if (piv == n) continue;
    if (piv != j + 1) {
      for (std::size_t k = 0; k < n; ++k) std::swap(h(piv, k), h(j + 1, k));
      for (std::size_t k = 0; k < n; ++k) std::swap(h(k, piv), h(k, j + 1));
    }
    const std::uint64_t iv = inv(h(j + 1, j));
    for (std::size_t i = j + 2; i < n; ++i) {
      if (h(i, j) == 0) continue;
      const std::uint64_t u = mul(h(i, j), iv);
      for (std::size_t k = 0; k < n; ++k) h(i, k) = sub(h(i, k), mul(u, h(j + 1, k)));
      for (std::size_t k = 0; k < n; ++k) h(k, j + 1) = add(h(k, j + 1), mul(u, h(k, i)));
    }
  }
  std::vector<std::vector<std::uint64_t>> p(n + 1);
  p[0] = {1};
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::uint64_t> next(k + 1, 0);
    for (std::size_t d = 0; d < k; ++d) {
      next[d + 1] = add(next[d + 1], p[k - 1][d]);
      next[d] = sub(next[d], mul(h(k - 1, k - 1), p[k - 1][d]));
    }
    std::uint64_t prod = 1;
    for (std::size_t i = k - 1; i-- > 0;) {
      prod = mul(prod, h(i + 1, i));
      if (prod == 0) break;
      const std::uint64_t coef = mul(h(i, k - 1), prod);
      for (std::size_t d = 0; d < p[i].size(); ++d) next[d] = sub(next[d], mul(coef, p[i][d]));
    }
    p[k] = std::move(next);
  }
  return p[n];
}

inline void trim(std::vector<std::uint64_t>& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline std::vector<std::uint64_t> gcd(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    const std::uint64_t il = inv(b.back());
    while (a.size() >= b.size()) {
      const std::uint64_t q = mul(a.back(), il);
      const std::size_t s = a.size() - b.size();
      for (std::size_t k = 0; k < b.size(); ++k) a[s + k] = sub(a[s + k], mul(q, b[k]));
      trim(a);
    }
    std::swap(a, b);
  }
  return a;
}

}  // namespace nullcone::modp

#endif  // NULLCONE_MODULAR_HPP
