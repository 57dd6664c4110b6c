#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "intseq/error.hpp"
#include "intseq/numeric.hpp"

namespace intseq {

inline constexpr std::size_t kDefaultDegreeCap = 64;

/// Spectral map r -> a + b*r. At the matrix level this is aI + bR; at the
/// polynomial level it is q(x) = b^m p((x - a) / b).
struct AffineShift {
  BigInt a{0};
  BigInt b{1};

  AffineShift() = default;
  AffineShift(BigInt a_, BigInt b_) : a(std::move(a_)), b(std::move(b_)) {
    if (b == 0) throw Error(ErrorCode::InvalidShift, "scale b must be nonzero");
  }

  static AffineShift identity() { return {}; }
  bool is_identity() const { return a == 0 && b == 1; }

  template <class T>
  T apply(const T& r) const { return T(a) + T(b) * r; }

  friend bool operator==(const AffineShift&, const AffineShift&) = default;
};

/// p(x) = x^m + a_1 x^(m-1) + ... + a_m. The leading 1 is implicit.
class MonicIntPolynomial {
 public:
  explicit MonicIntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw Error(ErrorCode::EmptyInput, "monic polynomial needs degree >= 1");
  }

  std::size_t degree() const { return coeffs_.size(); }

  /// a_k for k in 1..m; k = 0 yields the implicit leading 1.
  BigInt coeff(std::size_t k) const {
    if (k > degree()) throw Error(ErrorCode::OutOfRange, "coefficient index " + std::to_string(k));
    return k == 0 ? BigInt(1) : coeffs_[k - 1];
  }

  std::span<const BigInt> coeffs() const { return coeffs_; }
  const BigInt& constant_term() const { return coeffs_.back(); }

  /// [1, a_1, ..., a_m], highest power first.
  std::vector<BigInt> full_coefficients() const {
    std::vector<BigInt> out;
    out.reserve(degree() + 1);
    out.emplace_back(1);
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return out;
  }

  std::string to_string() const {
    std::ostringstream os;
    const std::size_t m = degree();
    auto power = [](std::size_t e) -> std::string {
      if (e == 0) return "";
      if (e == 1) return "x";
      return "x^" + std::to_string(e);
    };
    os << power(m);
    for (std::size_t k = 1; k <= m; ++k) {
      const BigInt& c = coeffs_[k - 1];
      if (c == 0) continue;
      const BigInt mag = boost::multiprecision::abs(c);
      os << (c < 0 ? " - " : " + ");
      if (mag != 1 || k == m) os << mag;
      os << power(m - k);
    }
    return os.str();
  }

  friend bool operator==(const MonicIntPolynomial&, const MonicIntPolynomial&) = default;

 private:
  std::vector<BigInt> coeffs_;
};

/// Builds a polynomial from a coefficient list, highest power first. With
/// `includes_leading` the first entry must be exactly 1 and is stripped.
inline MonicIntPolynomial make_polynomial(std::span<const BigInt> coeffs, bool includes_leading,
                                          std::size_t max_degree = kDefaultDegreeCap) {
  std::vector<BigInt> stored;
  if (includes_leading) {
    if (coeffs.empty()) throw Error(ErrorCode::EmptyInput, "no coefficients given");
    if (coeffs.front() != 1) {
      throw Error(ErrorCode::NotMonic, "leading coefficient is " + coeffs.front().str() + ", expected 1");
    }
    stored.assign(coeffs.begin() + 1, coeffs.end());
  } else {
    stored.assign(coeffs.begin(), coeffs.end());
  }
  if (stored.empty()) throw Error(ErrorCode::EmptyInput, "degree would be 0");
  if (stored.size() > max_degree) {
    throw Error(ErrorCode::DegreeTooLarge,
                "degree " + std::to_string(stored.size()) + " exceeds cap " + std::to_string(max_degree));
  }
  return MonicIntPolynomial(std::move(stored));
}

inline MonicIntPolynomial make_polynomial(std::initializer_list<long long> coeffs, bool includes_leading = true) {
  std::vector<BigInt> big(coeffs.begin(), coeffs.end());
  return make_polynomial(big, includes_leading);
}

/// Exact Horner evaluation.
inline Rational evaluate(const MonicIntPolynomial& p, const Rational& x) {
  Rational acc(1);
  for (const BigInt& c : p.coeffs()) {
    acc *= x;
    acc += c;
  }
  return acc;
}

namespace detail {

// In-place Taylor shift: coefficients (highest first) of f(x) become those of f(x + t).
inline void taylor_shift(std::vector<BigInt>& c, const BigInt& t) {
  if (t == 0) return;
  const std::size_t m = c.size() - 1;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 1; j <= m - i; ++j) c[j] += t * c[j - 1];
  }
}

}  // namespace detail

/// q(x) = b^m p((x - a) / b): monic, integer, roots {a + b r_i}.
inline MonicIntPolynomial shift_scale(const MonicIntPolynomial& p, const AffineShift& s) {
  std::vector<BigInt> c = p.full_coefficients();
  BigInt scale = 1;
  for (std::size_t k = 1; k < c.size(); ++k) {
    scale *= s.b;
    c[k] *= scale;
  }
  detail::taylor_shift(c, -s.a);
  c.erase(c.begin());
  return MonicIntPolynomial(std::move(c));
}

/// p(x) / x for p with a zero constant term.
inline MonicIntPolynomial deflate_zero_root(const MonicIntPolynomial& p) {
  if (p.degree() < 2) throw Error(ErrorCode::DegreeTooSmall, "cannot deflate a degree-1 polynomial");
  if (p.constant_term() != 0) throw Error(ErrorCode::NoZeroRoot, "constant term is nonzero");
  std::vector<BigInt> c(p.coeffs().begin(), p.coeffs().end() - 1);
  return MonicIntPolynomial(std::move(c));
}

namespace detail {

using RationalPoly = std::vector<Rational>;  // highest power first, leading entry nonzero

inline void trim(RationalPoly& a) {
  const auto first = std::find_if(a.begin(), a.end(), [](const Rational& x) { return x != 0; });
  a.erase(a.begin(), first);
}

// Remainder of a by b (b nonempty), and the quotient when `quotient` is given.
inline RationalPoly poly_divmod(RationalPoly a, const RationalPoly& b, RationalPoly* quotient = nullptr) {
  RationalPoly q;
  while (a.size() >= b.size()) {
    const Rational f = a.front() / b.front();
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= f * b[i];
    q.push_back(f);
    a.erase(a.begin());
  }
  if (quotient) *quotient = std::move(q);
  trim(a);
  return a;
}

}  // namespace detail

/// p divided by gcd(p, p'): the same roots, each simple. Monic divisors of a
/// monic integer polynomial have integer coefficients, so this stays exact.
inline MonicIntPolynomial squarefree_part(const MonicIntPolynomial& p) {
  const std::size_t m = p.degree();
  detail::RationalPoly a;
  for (const BigInt& c : p.full_coefficients()) a.emplace_back(c);
  detail::RationalPoly b;
  for (std::size_t k = 0; k < m; ++k) b.push_back(a[k] * Rational(m - k));
  while (!b.empty()) {
    detail::RationalPoly r = detail::poly_divmod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.size() == 1) return p;
  detail::RationalPoly full;
  for (const BigInt& c : p.full_coefficients()) full.emplace_back(c);
  detail::RationalPoly q;
  detail::poly_divmod(std::move(full), a, &q);
  std::vector<BigInt> coeffs;
  for (std::size_t k = 1; k < q.size(); ++k) coeffs.push_back(boost::multiprecision::numerator(Rational(q[k] / q[0])));
  return MonicIntPolynomial(std::move(coeffs));
}

/// 1 + max |a_k|; every root has modulus strictly below it.
inline BigInt cauchy_bound(const MonicIntPolynomial& p) {
  BigInt best = 0;
  for (const BigInt& c : p.coeffs()) best = std::max(best, BigInt(boost::multiprecision::abs(c)));
  return best + 1;
}

/// Shift-and-invert transform about a rational center u/v. `poly` is monic
/// with integer coefficients and roots c / (v (r - u/v)) for each root r of
/// the source, so its dominant root comes from the source root nearest the
/// center.
struct InvertedPolynomial {
  MonicIntPolynomial poly;
  Rational center;
  BigInt c;  // v^m p(u/v)
  BigInt v;

  Rational to_source(const Rational& rho) const { return center + Rational(c) / (Rational(v) * rho); }
};

inline InvertedPolynomial invert_about(const MonicIntPolynomial& p, const Rational& center) {
  const BigInt u = boost::multiprecision::numerator(center);
  const BigInt v = boost::multiprecision::denominator(center);
  // g has roots v*r - u.
  const MonicIntPolynomial g = shift_scale(p, AffineShift(-u, v));
  const BigInt c = g.constant_term();
  if (c == 0) throw Error(ErrorCode::CenterIsRoot, "center " + center.str() + " is a root");
  // Reversal has leading coefficient c; c^(m-1) h(y / c) makes it monic.
  const std::vector<BigInt> full = g.full_coefficients();
  const std::size_t m = g.degree();
  std::vector<BigInt> k(m);
  BigInt cpow = 1;
  for (std::size_t i = 1; i <= m; ++i) {
    k[i - 1] = full[m - i] * cpow;
    cpow *= c;
  }
  return InvertedPolynomial{MonicIntPolynomial(std::move(k)), center, c, v};
}

}  // namespace intseq
