#pragma once

// Small exact polynomial toolkit: univariate arithmetic over a field and
// tensor-grid interpolation for degree checks of multivariate functions.

#include "tk/error.hpp"
#include "tk/rational.hpp"

#include <algorithm>
#include <functional>
#include <vector>

namespace tk {

/// Coefficients from the constant term up; the zero polynomial is empty.
template <typename Scalar>
using Poly = std::vector<Scalar>;

template <typename Scalar>
Poly<Scalar> poly_trim(Poly<Scalar> p) {
  while (!p.empty() && p.back() == Scalar(0)) p.pop_back();
  return p;
}

/// -1 for the zero polynomial.
template <typename Scalar>
long poly_degree(const Poly<Scalar>& p) {
  return static_cast<long>(poly_trim(p).size()) - 1;
}

template <typename Scalar>
Scalar poly_eval(const Poly<Scalar>& p, const Scalar& t) {
  Scalar r(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * t + *it;
  return r;
}

/// Remainder of a divided by nonzero b.
template <typename Scalar>
Poly<Scalar> poly_mod(Poly<Scalar> a, Poly<Scalar> b) {
  a = poly_trim(std::move(a));
  b = poly_trim(std::move(b));
  if (b.empty()) throw PreconditionError("polynomial division by zero");
  while (a.size() >= b.size()) {
    const Scalar f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a = poly_trim(std::move(a));
  }
  return a;
}

/// Monic gcd; the gcd of two zero polynomials is zero.
template <typename Scalar>
Poly<Scalar> poly_gcd(Poly<Scalar> a, Poly<Scalar> b) {
  a = poly_trim(std::move(a));
  b = poly_trim(std::move(b));
  while (!b.empty()) {
    Poly<Scalar> r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Scalar lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

template <typename Scalar>
Poly<Scalar> poly_derivative(const Poly<Scalar>& p) {
  Poly<Scalar> d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Scalar(static_cast<long>(i)));
  return poly_trim(std::move(d));
}

/// The polynomial of degree <= values.size() - 1 through (k, values[k]).
template <typename Scalar>
Poly<Scalar> poly_interpolate(const std::vector<Scalar>& values) {
  const std::size_t n = values.size();
  Poly<Scalar> out(n, Scalar(0));
  for (std::size_t k = 0; k < n; ++k) {
    // basis polynomial prod_{m != k} (t - m) / (k - m)
    Poly<Scalar> basis{Scalar(1)};
    Scalar denom(1);
    for (std::size_t m = 0; m < n; ++m) {
      if (m == k) continue;
      Poly<Scalar> next(basis.size() + 1, Scalar(0));
      for (std::size_t i = 0; i < basis.size(); ++i) {
        next[i + 1] += basis[i];
        next[i] -= basis[i] * Scalar(static_cast<long>(m));
      }
      basis = std::move(next);
      denom *= Scalar(static_cast<long>(k) - static_cast<long>(m));
    }
    for (std::size_t i = 0; i < n; ++i) out[i] += values[k] * basis[i] / denom;
  }
  return poly_trim(std::move(out));
}

/// Coefficients of the unique polynomial of degree <= deg in each of nvars
/// variables agreeing with f on {0..deg}^nvars. Entry index is
/// sum_v e_v (deg+1)^v for the monomial prod z_v^e_v.
template <typename Scalar>
std::vector<Scalar> tensor_interpolate(const std::function<Scalar(const std::vector<Scalar>&)>& f, std::size_t nvars,
                                       std::size_t deg) {
  const std::size_t base = deg + 1;
  std::size_t total = 1;
  for (std::size_t v = 0; v < nvars; ++v) total *= base;
  std::vector<Scalar> grid(total);
  std::vector<Scalar> point(nvars);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t r = idx;
    for (std::size_t v = 0; v < nvars; ++v) {
      point[v] = Scalar(static_cast<long>(r % base));
      r /= base;
    }
    grid[idx] = f(point);
  }
  // Interpolate one variable at a time along its axis.
  std::size_t stride = 1;
  for (std::size_t v = 0; v < nvars; ++v) {
    for (std::size_t idx = 0; idx < total; ++idx) {
      if ((idx / stride) % base != 0) continue;
      std::vector<Scalar> line(base);
      for (std::size_t k = 0; k < base; ++k) line[k] = grid[idx + k * stride];
      Poly<Scalar> c = poly_interpolate(line);
      c.resize(base, Scalar(0));
      for (std::size_t k = 0; k < base; ++k) grid[idx + k * stride] = c[k];
    }
    stride *= base;
  }
  return grid;
}

/// Largest exponent sum among nonzero coefficients; -1 for zero.
template <typename Scalar>
long tensor_total_degree(const std::vector<Scalar>& coeffs, std::size_t nvars, std::size_t deg) {
  const std::size_t base = deg + 1;
  long best = -1;
  for (std::size_t idx = 0; idx < coeffs.size(); ++idx) {
    if (coeffs[idx] == Scalar(0)) continue;
    long sum = 0;
    std::size_t r = idx;
    for (std::size_t v = 0; v < nvars; ++v) {
      sum += static_cast<long>(r % base);
      r /= base;
    }
    best = std::max(best, sum);
  }
  return best;
}

/// Evaluates a tensor-coefficient polynomial.
template <typename Scalar>
Scalar tensor_eval(const std::vector<Scalar>& coeffs, std::size_t nvars, std::size_t deg, const std::vector<Scalar>& z) {
  const std::size_t base = deg + 1;
  Scalar out(0);
  for (std::size_t idx = 0; idx < coeffs.size(); ++idx) {
    if (coeffs[idx] == Scalar(0)) continue;
    Scalar term = coeffs[idx];
    std::size_t r = idx;
    for (std::size_t v = 0; v < nvars; ++v) {
      for (std::size_t e = r % base; e > 0; --e) term *= z[v];
      r /= base;
    }
    out += term;
  }
  return out;
}

}  // namespace tk
