#pragma once

#include <cstddef>
#include <deque>
#include <string>
#include <utility>
#include <vector>

#include "intseq/companion.hpp"
#include "intseq/error.hpp"
#include "intseq/numeric.hpp"
#include "intseq/polynomial.hpp"

namespace intseq {

/// An exact ratio sample taken from a sequence family, kept in lowest terms.
class Convergent {
 public:
  explicit Convergent(Rational value) : value_(std::move(value)) {}
  Convergent(const BigInt& num, const BigInt& den) : value_(checked(num, den)) {}

  const Rational& value() const { return value_; }
  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const { return boost::multiprecision::denominator(value_); }
  double approx() const { return to_double(value_); }

  std::string fixed(int places) const { return to_fixed(value_, places); }
  std::string significant(int digits) const { return to_significant(value_, digits); }

  friend bool operator==(const Convergent&, const Convergent&) = default;

 private:
  static Rational checked(const BigInt& num, const BigInt& den) {
    if (den == 0) throw Error(ErrorCode::ZeroDenominator, "convergent with zero denominator");
    return Rational(num, den);
  }

  Rational value_;
};

struct FamilyOptions {
  AffineShift shift{};
  bool normalized = false;
  bool keep_history = false;
};

/// The m integer sequences S^(1..m) generated from a seed S_0.
///
/// The first m vectors are S_j = G^j S_0 with G = aI + bR (R the companion
/// matrix of the base polynomial). Later vectors follow the m-term
/// recurrence whose characteristic polynomial is shift_scale(base, shift).
/// Normalized mode instead advances by G and divides each new vector by the
/// gcd of its components, which preserves all same-index cross ratios while
/// slowing integer growth.
///
/// Only the last m vectors are retained unless keep_history is set.
class SequenceFamily {
 public:
  SequenceFamily(const MonicIntPolynomial& base, StateVector seed, FamilyOptions opts = {})
      : base_(base),
        recurrence_(shift_scale(base, opts.shift)),
        generator_(affine(companion_of(base), opts.shift)),
        opts_(std::move(opts)) {
    const std::size_t m = base_.degree();
    if (seed.dim() != m) {
      throw Error(ErrorCode::DimensionMismatch,
                  "seed has " + std::to_string(seed.dim()) + " components, degree is " + std::to_string(m));
    }
    if (seed.is_zero()) throw Error(ErrorCode::ZeroSeed, "seed vector is zero");
    push(std::move(seed));
    while (window_.size() < m) {
      StateVector next = mat_vec(generator_, window_.back());
      if (opts_.normalized) divide_content(next);
      push(std::move(next));
    }
  }

  std::size_t dimension() const { return base_.degree(); }
  std::size_t index() const { return index_; }
  bool normalized() const { return opts_.normalized; }
  const AffineShift& shift() const { return opts_.shift; }
  const MonicIntPolynomial& base() const { return base_; }
  const MonicIntPolynomial& recurrence() const { return recurrence_; }
  const IntMatrix& generator() const { return generator_; }
  const StateVector& current() const { return window_.back(); }
  bool collapsed() const { return current().is_zero(); }

  /// Largest component bit length seen so far.
  std::size_t peak_bits() const { return peak_bits_; }

  void step() {
    const std::size_t m = dimension();
    if (opts_.normalized) {
      StateVector next = mat_vec(generator_, current());
      divide_content(next);
      push(std::move(next));
      return;
    }
    // S_{j+1}^(i) = -sum_k a_k S_{j+1-k}^(i)
    std::vector<BigInt> next(m, BigInt(0));
    const auto coeffs = recurrence_.coeffs();
    for (std::size_t k = 1; k <= m; ++k) {
      const BigInt& a = coeffs[k - 1];
      if (a == 0) continue;
      const StateVector& prev = window_[window_.size() - k];
      for (std::size_t i = 0; i < m; ++i) next[i] -= a * prev[i];
    }
    push(StateVector(std::move(next)));
  }

  void advance(std::size_t steps) {
    for (std::size_t s = 0; s < steps; ++s) step();
  }

  /// S_j as stored (divided by its accumulated content in normalized mode).
  const StateVector& at(std::size_t j) const {
    if (j > index_) throw Error(ErrorCode::OutOfRange, "step " + std::to_string(j) + " not reached yet");
    if (opts_.keep_history) return history_[j];
    const std::size_t first = index_ + 1 - window_.size();
    if (j < first) throw Error(ErrorCode::OutOfRange, "step " + std::to_string(j) + " left the window");
    return window_[j - first];
  }

  /// S_j^(i), i is 1-based.
  const BigInt& term(std::size_t i, std::size_t j) const {
    if (i < 1 || i > dimension()) throw Error(ErrorCode::OutOfRange, "sequence index " + std::to_string(i));
    return at(j)[i - 1];
  }

  /// S_j^(i) / S_j^(i+1). Its limit is the source root whose shifted image
  /// dominates, since the eigenvectors [r^(m-1), ..., r, 1] survive the shift.
  Convergent cross_ratio(std::size_t i, std::size_t j) const {
    if (i < 1 || i >= dimension()) throw Error(ErrorCode::OutOfRange, "cross ratio index " + std::to_string(i));
    const BigInt& den = term(i + 1, j);
    if (den == 0) throw Error(ErrorCode::ZeroDenominator, "S_" + std::to_string(j) + "^(" + std::to_string(i + 1) + ") = 0");
    return Convergent(term(i, j), den);
  }

  /// S_j^(i) / S_{j-1}^(i). Tends to the dominant eigenvalue a + b*r.
  Convergent successive_ratio(std::size_t i, std::size_t j) const {
    if (opts_.normalized) {
      throw Error(ErrorCode::NormalizedModeUnsupported, "successive ratios need exact mode");
    }
    if (j < 1) throw Error(ErrorCode::OutOfRange, "successive ratio needs j >= 1");
    const BigInt& den = term(i, j - 1);
    if (den == 0) throw Error(ErrorCode::ZeroDenominator, "S_" + std::to_string(j - 1) + "^(" + std::to_string(i) + ") = 0");
    return Convergent(term(i, j), den);
  }

 private:
  static void divide_content(StateVector& v) {
    const BigInt g = v.content();
    if (g <= 1) return;
    for (std::size_t i = 0; i < v.dim(); ++i) v[i] /= g;
  }

  void push(StateVector v) {
    if (!window_.empty()) ++index_;
    peak_bits_ = std::max(peak_bits_, v.max_bits());
    if (opts_.keep_history) history_.push_back(v);
    window_.push_back(std::move(v));
    if (window_.size() > dimension()) window_.pop_front();
  }

  MonicIntPolynomial base_;
  MonicIntPolynomial recurrence_;
  IntMatrix generator_;
  FamilyOptions opts_;
  std::deque<StateVector> window_;
  std::vector<StateVector> history_;
  std::size_t index_ = 0;
  std::size_t peak_bits_ = 0;
};

inline SequenceFamily init_family(const MonicIntPolynomial& poly, StateVector seed, bool normalized = false) {
  return SequenceFamily(poly, std::move(seed), FamilyOptions{AffineShift::identity(), normalized, false});
}

}  // namespace intseq
