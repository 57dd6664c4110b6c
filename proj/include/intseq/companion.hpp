#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "intseq/error.hpp"
#include "intseq/numeric.hpp"
#include "intseq/polynomial.hpp"

namespace intseq {

/// Column vector S_j of the sequence family; component i (0-based here) is
/// the j-th term of sequence S^(i+1).
class StateVector {
 public:
  StateVector() = default;
  explicit StateVector(std::vector<BigInt> components) : c_(std::move(components)) {}
  StateVector(std::initializer_list<long long> components) : c_(components.begin(), components.end()) {}

  static StateVector basis(std::size_t dim, std::size_t index = 0) {
    std::vector<BigInt> c(dim, BigInt(0));
    c.at(index) = 1;
    return StateVector(std::move(c));
  }
  static StateVector ones(std::size_t dim) { return StateVector(std::vector<BigInt>(dim, BigInt(1))); }

  std::size_t dim() const { return c_.size(); }
  const BigInt& operator[](std::size_t i) const { return c_[i]; }
  BigInt& operator[](std::size_t i) { return c_[i]; }
  const std::vector<BigInt>& components() const { return c_; }

  bool is_zero() const {
    for (const BigInt& x : c_) {
      if (x != 0) return false;
    }
    return true;
  }

  /// gcd of absolute values, 0 for the zero vector.
  BigInt content() const {
    BigInt g = 0;
    for (const BigInt& x : c_) {
      g = boost::multiprecision::gcd(g, x);
      if (g == 1) break;
    }
    return boost::multiprecision::abs(g);
  }

  std::size_t max_bits() const {
    std::size_t bits = 0;
    for (const BigInt& x : c_) bits = std::max(bits, bit_length(x));
    return bits;
  }

  friend bool operator==(const StateVector&, const StateVector&) = default;

 private:
  std::vector<BigInt> c_;
};

/// Dense square integer matrix. Holds both the companion matrix R and its
/// affine image aI + bR, which is no longer in companion form.
class IntMatrix {
 public:
  explicit IntMatrix(std::size_t dim) : dim_(dim), e_(dim * dim, BigInt(0)) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) : dim_(rows.size()) {
    e_.reserve(dim_ * dim_);
    for (const auto& row : rows) {
      if (row.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "matrix literal is not square");
      for (long long x : row) e_.emplace_back(x);
    }
  }

  static IntMatrix identity(std::size_t dim) {
    IntMatrix out(dim);
    for (std::size_t i = 0; i < dim; ++i) out(i, i) = 1;
    return out;
  }

  std::size_t dim() const { return dim_; }
  const BigInt& operator()(std::size_t row, std::size_t col) const { return e_[row * dim_ + col]; }
  BigInt& operator()(std::size_t row, std::size_t col) { return e_[row * dim_ + col]; }

  bool is_zero() const {
    for (const BigInt& x : e_) {
      if (x != 0) return false;
    }
    return true;
  }

  friend IntMatrix operator*(const IntMatrix& lhs, const IntMatrix& rhs) {
    if (lhs.dim_ != rhs.dim_) throw Error(ErrorCode::DimensionMismatch, "matrix product");
    IntMatrix out(lhs.dim_);
    for (std::size_t i = 0; i < lhs.dim_; ++i) {
      for (std::size_t k = 0; k < lhs.dim_; ++k) {
        const BigInt& l = lhs(i, k);
        if (l == 0) continue;
        for (std::size_t j = 0; j < lhs.dim_; ++j) out(i, j) += l * rhs(k, j);
      }
    }
    return out;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t dim_;
  std::vector<BigInt> e_;
};

/// Row 0 holds -a_1..-a_m, the subdiagonal holds ones.
inline IntMatrix companion_of(const MonicIntPolynomial& p) {
  const std::size_t m = p.degree();
  IntMatrix r(m);
  for (std::size_t k = 0; k < m; ++k) r(0, k) = -p.coeffs()[k];
  for (std::size_t i = 1; i < m; ++i) r(i, i - 1) = 1;
  return r;
}

/// aI + bC. Eigenvalues map as lambda -> a + b*lambda; eigenvectors are unchanged.
inline IntMatrix affine(const IntMatrix& c, const AffineShift& s) {
  IntMatrix out(c.dim());
  for (std::size_t i = 0; i < c.dim(); ++i) {
    for (std::size_t j = 0; j < c.dim(); ++j) {
      out(i, j) = s.b * c(i, j);
      if (i == j) out(i, j) += s.a;
    }
  }
  return out;
}

inline StateVector mat_vec(const IntMatrix& c, const StateVector& v) {
  if (c.dim() != v.dim()) {
    throw Error(ErrorCode::DimensionMismatch,
                "matrix is " + std::to_string(c.dim()) + "x" + std::to_string(c.dim()) + ", vector has " +
                    std::to_string(v.dim()) + " components");
  }
  std::vector<BigInt> out(v.dim(), BigInt(0));
  for (std::size_t i = 0; i < c.dim(); ++i) {
    for (std::size_t j = 0; j < c.dim(); ++j) {
      const BigInt& x = c(i, j);
      if (x != 0) out[i] += x * v[j];
    }
  }
  return StateVector(std::move(out));
}

/// p(C) by Horner in exact matrix arithmetic; zero whenever p is the
/// characteristic polynomial of C.
inline IntMatrix cayley_hamilton_residual(const MonicIntPolynomial& p, const IntMatrix& c) {
  if (p.degree() != c.dim()) throw Error(ErrorCode::DimensionMismatch, "polynomial degree vs matrix dimension");
  IntMatrix acc = IntMatrix::identity(c.dim());
  for (const BigInt& a : p.coeffs()) {
    acc = acc * c;
    for (std::size_t i = 0; i < c.dim(); ++i) acc(i, i) += a;
  }
  return acc;
}

}  // namespace intseq
