#pragma once

// Test-only reference for c(m): phi_{0,1} = 4 sum_{i=2,3,4} (theta_i(z)/theta_i(0))^2
// expanded in Q = q^(1/8) and half-integral powers of y = e^(2 pi i z). The
// coefficient of q^n y^r depends only on D = 4n - r^2, and c(D) is twice it.

#include <map>
#include <utility>

#include "k3nl/arith.hpp"

namespace oracle {

using k3nl::Integer;
using k3nl::Rational;
using Series = std::map<std::pair<long, long>, Rational>;  // (Q exponent, 2 * y exponent)

inline Series multiply(const Series& a, const Series& b, long cap) {
  Series r;
  for (const auto& [ka, ca] : a) {
    for (const auto& [kb, cb] : b) {
      if (ka.first + kb.first > cap) continue;
      r[{ka.first + kb.first, ka.second + kb.second}] += ca * cb;
    }
  }
  for (auto it = r.begin(); it != r.end();) it = it->second == 0 ? r.erase(it) : std::next(it);
  return r;
}

inline Series theta(int which, bool with_z, long cap) {
  Series r;
  for (long n = -40; n <= 40; ++n) {
    long e, y;
    int sign = 1;
    if (which == 2) {
      e = (2 * n + 1) * (2 * n + 1);
      y = 2 * n + 1;
    } else {
      e = 4 * n * n;
      y = 2 * n;
      if (which == 4 && n % 2 != 0) sign = -1;
    }
    if (e <= cap) r[{e, with_z ? y : 0}] += sign;
  }
  return r;
}

// 1 / s for a series in Q alone, shifted so its leading exponent becomes 0.
inline std::pair<Series, long> invert(const Series& s, long cap) {
  const long e0 = s.begin()->first.first;
  const Rational c0 = s.begin()->second;
  std::vector<Rational> b(cap + 1), inv(cap + 1);
  for (const auto& [k, c] : s) {
    if (k.first - e0 <= cap) b[k.first - e0] = c / c0;
  }
  inv[0] = 1;
  for (long n = 1; n <= cap; ++n) {
    for (long j = 1; j <= n; ++j) inv[n] -= b[j] * inv[n - j];
  }
  Series r;
  for (long n = 0; n <= cap; ++n) {
    if (inv[n] != 0) r[{n, 0}] = inv[n] / c0;
  }
  return {r, e0};
}

/// c(D) for -1 <= D <= d_max.
inline std::map<long, Integer> weight_minus_half_coefficients(long d_max) {
  const long n_max = (d_max + 1) / 4 + 1;
  const long cap = 8 * n_max;
  Series total;
  for (int i : {2, 3, 4}) {
    auto [inv, e0] = invert(theta(i, false, cap + 8), cap + 8);
    Series ratio = multiply(theta(i, true, cap + 8), inv, cap + 8);
    Series shifted;
    for (const auto& [k, c] : ratio) {
      if (k.first - e0 <= cap) shifted[{k.first - e0, k.second}] = c;
    }
    for (const auto& [k, c] : multiply(shifted, shifted, cap)) total[k] += 4 * c;
  }
  std::map<long, Integer> out;
  for (const auto& [k, c] : total) {
    // y is stored doubled and squared ratios only have integral powers
    if (k.first % 8 != 0 || k.second % 2 != 0) continue;
    const long n = k.first / 8, r = k.second / 2;
    const long d = 4 * n - r * r;
    if (d < -1 || d > d_max) continue;
    out[d] = 2 * k3nl::to_integer(c, "phi coefficient");
  }
  return out;
}

}  // namespace oracle

namespace oracle {

/// Coefficients of phi_{10,1} = eta^18 theta_1^2
///   = q (y - 2 + 1/y) prod_n (1 - q^n)^20 (1 - q^n y)^2 (1 - q^n / y)^2
/// keyed by (n, r), for n <= n_max.
inline std::map<std::pair<long, long>, Integer> phi10_coefficients(long n_max) {
  using Poly = std::map<std::pair<long, long>, Integer>;
  auto mul = [&](const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ka, ca] : a) {
      for (const auto& [kb, cb] : b) {
        if (ka.first + kb.first <= n_max) r[{ka.first + kb.first, ka.second + kb.second}] += ca * cb;
      }
    }
    return r;
  };
  Poly acc{{{1, 1}, 1}, {{1, 0}, -2}, {{1, -1}, 1}};
  for (long n = 1; n < n_max; ++n) {
    for (int rep = 0; rep < 20; ++rep) acc = mul(acc, Poly{{{0, 0}, 1}, {{n, 0}, -1}});
    for (int rep = 0; rep < 2; ++rep) {
      acc = mul(acc, Poly{{{0, 0}, 1}, {{n, 1}, -1}});
      acc = mul(acc, Poly{{{0, 0}, 1}, {{n, -1}, -1}});
    }
  }
  return acc;
}

/// Maass lift: A(k, l, m) = sum over d | gcd(k, l, m) of d^9 c(km/d^2, l/d).
inline Integer maass_chi10(long k, long l, long m, const std::map<std::pair<long, long>, Integer>& phi) {
  Integer total = 0;
  for (long d = 1; d <= std::max(k, m); ++d) {
    if (k % d || m % d || l % d) continue;
    auto it = phi.find({k * m / (d * d), l / d});
    if (it == phi.end()) continue;
    Integer p = 1;
    for (int i = 0; i < 9; ++i) p *= d;
    total += p * it->second;
  }
  return total;
}

}  // namespace oracle
