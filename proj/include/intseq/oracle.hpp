#pragma once

// Floating-point reference root finder. Test and benchmark use only; the
// integer pipeline never calls into this header.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <vector>

#include "intseq/error.hpp"
#include "intseq/polynomial.hpp"

namespace intseq::oracle {

using Complex = std::complex<double>;

struct ComplexRootSet {
  std::vector<Complex> roots;
  std::vector<double> residuals;  // |p(z)| relative to sum |c_k| |z|^(m-k)
  bool converged = false;
  int iterations = 0;
};

inline std::vector<double> to_doubles(const MonicIntPolynomial& p) {
  std::vector<double> c;
  for (const BigInt& x : p.full_coefficients()) c.push_back(x.convert_to<double>());
  return c;
}

inline Complex horner(const std::vector<double>& c, Complex z) {
  Complex acc = 0;
  for (double x : c) acc = acc * z + x;
  return acc;
}

inline double relative_residual(const std::vector<double>& c, Complex z) {
  double scale = 0;
  const double az = std::abs(z);
  for (double x : c) scale = scale * az + std::abs(x);
  return std::abs(horner(c, z)) / scale;
}

namespace detail {

inline bool durand_kerner_pass(const std::vector<double>& c, double radius, double phase, double tol, int max_iter,
                               ComplexRootSet& out) {
  const std::size_t m = c.size() - 1;
  std::vector<Complex> z(m);
  for (std::size_t k = 0; k < m; ++k) {
    z[k] = std::polar(radius, phase + 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(m));
  }
  out.iterations = 0;
  for (int it = 0; it < max_iter; ++it) {
    double largest_step = 0;
    for (std::size_t i = 0; i < m; ++i) {
      Complex denom = 1;
      for (std::size_t j = 0; j < m; ++j) {
        if (j != i) denom *= z[i] - z[j];
      }
      const Complex step = horner(c, z[i]) / denom;
      z[i] -= step;
      largest_step = std::max(largest_step, std::abs(step) / std::max(1.0, std::abs(z[i])));
    }
    out.iterations = it + 1;
    for (const Complex& x : z) {
      if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) return false;
    }
    if (largest_step < 1e-15) break;
  }
  out.roots = z;
  out.residuals.clear();
  for (const Complex& x : z) out.residuals.push_back(relative_residual(c, x));
  out.converged = *std::max_element(out.residuals.begin(), out.residuals.end()) < tol;
  return true;
}

}  // namespace detail

/// Durand-Kerner (Weierstrass) iteration from a circle of radius 1 + max|a_k|
/// at non-real angles. A non-finite intermediate triggers one restart with a
/// perturbed phase; a second one throws.
inline ComplexRootSet durand_kerner(const MonicIntPolynomial& p, double tol = 1e-12, int max_iter = 2000) {
  const std::vector<double> c = to_doubles(p);
  ComplexRootSet out;
  if (p.degree() == 1) {
    out.roots = {Complex(-c[1], 0)};
    out.residuals = {0.0};
    out.converged = true;
    return out;
  }
  const double radius = cauchy_bound(p).convert_to<double>();
  if (detail::durand_kerner_pass(c, radius, 0.4, tol, max_iter, out)) return out;
  if (detail::durand_kerner_pass(c, radius, 1.1, tol, max_iter, out)) return out;
  throw Error(ErrorCode::NonFiniteIntermediate, "Durand-Kerner diverged twice for " + p.to_string());
}

/// |r1| / |r2| for the two largest-modulus roots; +inf for degree 1.
inline double dominance_gap(const ComplexRootSet& rs) {
  if (rs.roots.size() < 2) return std::numeric_limits<double>::infinity();
  std::vector<double> mod;
  for (const Complex& z : rs.roots) mod.push_back(std::abs(z));
  std::sort(mod.begin(), mod.end(), std::greater<>());
  return mod[1] == 0 ? std::numeric_limits<double>::infinity() : mod[0] / mod[1];
}

inline Complex dominant(const ComplexRootSet& rs) {
  return *std::max_element(rs.roots.begin(), rs.roots.end(),
                           [](const Complex& l, const Complex& r) { return std::abs(l) < std::abs(r); });
}

/// Real parts of roots whose imaginary part is below imag_tol * max(1, |z|), ascending.
inline std::vector<double> real_roots(const ComplexRootSet& rs, double imag_tol = 1e-7) {
  std::vector<double> out;
  for (const Complex& z : rs.roots) {
    if (std::abs(z.imag()) < imag_tol * std::max(1.0, std::abs(z))) out.push_back(z.real());
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Newton polish of a real root in double precision until the step drops
/// below 10^-digits relative (floored at machine precision).
inline double newton_polish(const MonicIntPolynomial& p, double x, int digits, int* iterations = nullptr,
                            int max_iter = 100) {
  const std::vector<double> c = to_doubles(p);
  const double tol = std::max(std::pow(10.0, -digits), 4 * std::numeric_limits<double>::epsilon());
  int it = 0;
  for (; it < max_iter; ++it) {
    double value = 0;
    double slope = 0;
    for (double a : c) {
      slope = slope * x + value;
      value = value * x + a;
    }
    if (slope == 0) break;
    const double step = value / slope;
    x -= step;
    if (std::abs(step) <= tol * std::max(1.0, std::abs(x))) {
      ++it;
      break;
    }
  }
  if (iterations) *iterations = it;
  return x;
}

}  // namespace intseq::oracle
