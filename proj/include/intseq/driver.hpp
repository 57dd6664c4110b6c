#pragma once

// Root extraction from ratio sequences: convergence and tie detection,
// shift-targeted extraction, and enumeration of all real roots.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <deque>
#include <future>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "intseq/companion.hpp"
#include "intseq/error.hpp"
#include "intseq/numeric.hpp"
#include "intseq/polynomial.hpp"
#include "intseq/sequence.hpp"

namespace intseq {

enum class RootStatus { Converged, TieDetected, MaxItersExceeded, DegenerateSeed, EstimatorMismatch };

constexpr std::string_view to_string(RootStatus s) {
  switch (s) {
    case RootStatus::Converged: return "converged";
    case RootStatus::TieDetected: return "tie-detected";
    case RootStatus::MaxItersExceeded: return "max-iters-exceeded";
    case RootStatus::DegenerateSeed: return "degenerate-seed";
    case RootStatus::EstimatorMismatch: return "estimator-mismatch";
  }
  return "unknown";
}

enum class Estimator { CrossRatio, SuccessiveRatio };

constexpr std::string_view to_string(Estimator e) {
  return e == Estimator::CrossRatio ? "cross-ratio" : "successive-ratio";
}

struct RootEstimate {
  Rational value{0};
  int decimal_digits = 0;
  std::size_t iterations = 0;
  RootStatus status = RootStatus::MaxItersExceeded;
  AffineShift shift_used{};
  Estimator estimator = Estimator::CrossRatio;
  /// Set when the estimate came from a shift-and-invert probe.
  std::optional<Rational> inversion_center;
  std::size_t peak_bits = 0;

  bool converged() const { return status == RootStatus::Converged; }
  double approx() const { return to_double(value); }
};

struct DriverOptions {
  int target_digits = 12;
  int window = 3;
  std::size_t max_iters = 10000;
  /// gcd-normalized stepping. Off by default: the per-step gcd costs more
  /// than the integer growth it removes on typical inputs.
  bool normalized = false;

  void validate() const {
    if (target_digits <= 0 || window <= 0 || max_iters == 0) {
      throw Error(ErrorCode::InvalidOptions, "target_digits, window and max_iters must be positive");
    }
  }
};

namespace detail {

/// Flags equal-modulus dominance: the step-to-step spread of the ratio
/// samples does not shrink. At n = 200, 400, 800, ... differences the median
/// difference of the last third is compared with that of the first third
/// (medians ignore the isolated spikes a rotating complex pair produces when
/// a denominator passes near zero). Two consecutive non-contracting
/// checkpoints make a tie.
class TieMonitor {
 public:
  bool push(double x) {
    if (have_prev_) {
      const bool inf = std::isinf(x) || std::isinf(prev_);
      diffs_.push_back(inf ? std::numeric_limits<double>::infinity() : std::abs(x - prev_));
    }
    prev_ = x;
    have_prev_ = true;
    if (diffs_.size() != next_check_) return false;
    next_check_ *= 2;
    const long third = static_cast<long>(diffs_.size() / 3);
    const double early = median(diffs_.begin(), diffs_.begin() + third);
    const double late = median(diffs_.end() - third, diffs_.end());
    const bool stalled = std::isinf(late) || late >= 0.5 * early;
    const bool tie = stalled && last_stalled_;
    last_stalled_ = stalled;
    return tie;
  }

 private:
  static double median(std::vector<double>::const_iterator first, std::vector<double>::const_iterator last) {
    std::vector<double> xs(first, last);
    auto mid = xs.begin() + static_cast<long>(xs.size() / 2);
    std::nth_element(xs.begin(), mid, xs.end());
    return *mid;
  }

  std::vector<double> diffs_;
  double prev_ = 0.0;
  bool have_prev_ = false;
  bool last_stalled_ = false;
  std::size_t next_check_ = 200;
};

struct RunResult {
  RootStatus status = RootStatus::MaxItersExceeded;
  Rational cross{0};   // last accepted S_j^(1)/S_j^(2) (degree >= 2)
  Rational eigen{0};   // dominant eigenvalue estimate of the generator
  int digits = 0;
  std::size_t iterations = 0;
  std::size_t peak_bits = 0;
};

// Ratio of the next vector to the current one at the first nonzero component;
// exact in both modes because it is computed with the generator directly.
inline Rational eigen_ratio(const SequenceFamily& fam) {
  const StateVector& v = fam.current();
  const StateVector next = mat_vec(fam.generator(), v);
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (v[i] != 0) return Rational(next[i], v[i]);
  }
  return Rational(0);
}

inline int stabilized_digits(const std::deque<std::pair<BigInt, BigInt>>& recent, int target) {
  if (recent.size() < 2) return 0;
  for (int k = target; k >= 1; --k) {
    const std::string first = to_significant(recent.front().first, recent.front().second, k);
    bool all = true;
    for (const auto& [n, d] : recent) {
      if (to_significant(n, d, k) != first) {
        all = false;
        break;
      }
    }
    if (all) return k;
  }
  return 0;
}

inline bool renderings_agree(const std::deque<std::pair<BigInt, BigInt>>& recent, int digits) {
  if (recent.empty()) return false;
  const std::string first = to_significant(recent.front().first, recent.front().second, digits);
  for (std::size_t i = 1; i < recent.size(); ++i) {
    if (to_significant(recent[i].first, recent[i].second, digits) != first) return false;
  }
  return true;
}

inline RunResult run_family(const MonicIntPolynomial& p, const AffineShift& shift, const DriverOptions& opts) {
  const std::size_t m = p.degree();
  const FamilyOptions fam_opts{shift, opts.normalized, false};
  const bool fast_reject = opts.target_digits <= 14;
  const double agree_tol = std::pow(10.0, 1 - opts.target_digits);

  if (m == 1) {
    SequenceFamily fam(p, StateVector::basis(1), fam_opts);
    fam.step();
    RunResult out;
    out.status = RootStatus::Converged;
    out.eigen = Rational(fam.generator()(0, 0));
    out.digits = opts.target_digits;
    out.iterations = 1;
    out.peak_bits = fam.peak_bits();
    return out;
  }

  for (const StateVector& seed : {StateVector::basis(m), StateVector::ones(m)}) {
    SequenceFamily fam(p, seed, fam_opts);
    TieMonitor ties;
    std::deque<std::pair<BigInt, BigInt>> recent;
    double prev_sample = std::numeric_limits<double>::infinity();
    int streak = 0;
    bool collapsed = false;
    RunResult out;

    for (;;) {
      const StateVector& v = fam.current();
      if (v.is_zero()) {
        collapsed = true;
        break;
      }
      double sample = std::numeric_limits<double>::infinity();
      if (v[1] == 0 || v[0] == 0) {
        // A zero numerator cannot be a limit (roots are nonzero), so it
        // breaks agreement just like a zero denominator.
        streak = 0;
        recent.clear();
        if (v[1] != 0) sample = 0.0;
      } else {
        sample = ratio_to_double(v[0], v[1]);
        // Renderings at D significant digits can only agree when samples are
        // within |x| 10^(1-D); doubles decide that cheaply for D <= 14.
        const bool near = !std::isinf(prev_sample) &&
                          (!fast_reject || std::abs(sample - prev_sample) <= 2 * agree_tol * std::abs(sample));
        streak = near ? streak + 1 : 1;
        recent.emplace_back(v[0], v[1]);
        if (recent.size() > static_cast<std::size_t>(opts.window)) recent.pop_front();
      }
      prev_sample = sample;
      out.iterations = fam.index();
      out.peak_bits = fam.peak_bits();
      if (streak >= opts.window && renderings_agree(recent, opts.target_digits)) {
        out.status = RootStatus::Converged;
        out.digits = opts.target_digits;
        out.cross = Rational(v[0], v[1]);
        out.eigen = eigen_ratio(fam);
        return out;
      }
      if (ties.push(sample)) {
        out.status = RootStatus::TieDetected;
        break;
      }
      if (fam.index() >= opts.max_iters) {
        out.status = RootStatus::MaxItersExceeded;
        break;
      }
      fam.step();
    }
    if (collapsed) continue;
    out.digits = stabilized_digits(recent, opts.target_digits);
    if (!recent.empty()) out.cross = Rational(recent.back().first, recent.back().second);
    out.eigen = eigen_ratio(fam);
    return out;
  }

  RunResult out;
  out.status = RootStatus::DegenerateSeed;
  return out;
}

inline RootEstimate run_estimate(const MonicIntPolynomial& p, const AffineShift& s, const DriverOptions& opts,
                                 bool cross_check) {
  opts.validate();
  if (p.constant_term() == 0) throw Error(ErrorCode::ZeroRootPresent, "deflate zero roots first");
  const RunResult run = run_family(p, s, opts);

  RootEstimate est;
  est.status = run.status;
  est.decimal_digits = run.digits;
  est.iterations = run.iterations;
  est.shift_used = s;
  est.peak_bits = run.peak_bits;
  if (p.degree() == 1) {
    est.estimator = Estimator::SuccessiveRatio;
    est.value = (run.eigen - Rational(s.a)) / Rational(s.b);
    return est;
  }
  est.estimator = Estimator::CrossRatio;
  est.value = run.cross;
  if (cross_check && est.converged()) {
    // successive ratio must agree with a + b * (cross ratio)
    const Rational predicted = s.apply(run.cross);
    const Rational gap = boost::multiprecision::abs(run.eigen - predicted);
    const Rational scale = std::max(Rational(1), Rational(boost::multiprecision::abs(run.eigen)));
    if (gap * Rational(pow10(std::max(0, opts.target_digits - 2))) > scale) {
      est.status = RootStatus::EstimatorMismatch;
    }
  }
  return est;
}

}  // namespace detail

/// Largest-modulus root of p from the unshifted family's cross ratio.
/// Requires a nonzero constant term.
inline RootEstimate dominant_root(const MonicIntPolynomial& p, const DriverOptions& opts = {}) {
  return detail::run_estimate(p, AffineShift::identity(), opts, false);
}

/// The root r of p whose image a + b*r is dominant, read off the family
/// generated by aI + bR. Reports EstimatorMismatch when the successive ratio
/// disagrees with a + b*r by more than 10^(2 - target_digits).
inline RootEstimate root_via_shift(const MonicIntPolynomial& p, const AffineShift& s, const DriverOptions& opts = {}) {
  return detail::run_estimate(p, s, opts, true);
}

/// Root of p nearest the rational `center`, via the shift-and-invert
/// polynomial. An exact hit on the center is returned as a converged root.
inline RootEstimate root_near(const MonicIntPolynomial& p, const Rational& center, const DriverOptions& opts = {}) {
  opts.validate();
  if (evaluate(p, center) == 0) {
    RootEstimate est;
    est.value = center;
    est.decimal_digits = opts.target_digits;
    est.status = RootStatus::Converged;
    est.inversion_center = center;
    return est;
  }
  const InvertedPolynomial inv = invert_about(p, center);
  RootEstimate est = detail::run_estimate(inv.poly, AffineShift::identity(), opts, false);
  est.inversion_center = center;
  if (est.value != 0) est.value = inv.to_source(est.value);
  return est;
}

/// Relative residual below 10^(-digits/2), plus a sign change of p across
/// every bracket r +- 10^-k max(1,|r|) for k from digits/2 to digits-3.
inline bool verify_root(const MonicIntPolynomial& p, const Rational& candidate, int digits) {
  const Rational x = round_significant(candidate, digits + 4);
  const Rational ax = boost::multiprecision::abs(x);
  Rational scale(0);
  Rational power(1);
  const std::vector<BigInt> full = p.full_coefficients();
  for (std::size_t k = full.size(); k-- > 0;) {
    scale += Rational(boost::multiprecision::abs(full[k])) * power;
    power *= ax;
  }
  const Rational residual = boost::multiprecision::abs(evaluate(p, x));
  if (residual * Rational(pow10(digits / 2)) >= scale) return false;

  const int k_lo = std::max(1, digits / 2);
  const int k_hi = std::max(k_lo, digits - 3);
  const Rational unit = std::max(Rational(1), ax);
  for (int k = k_lo; k <= k_hi; ++k) {
    const Rational delta = unit / Rational(pow10(k));
    const Rational left = evaluate(p, x - delta);
    const Rational right = evaluate(p, x + delta);
    if (!((left < 0 && right > 0) || (left > 0 && right < 0))) return false;
  }
  return true;
}

namespace detail {

inline bool same_root(const Rational& x, const Rational& y, int digits) {
  const Rational unit = std::max(Rational(1), Rational(boost::multiprecision::abs(x)));
  return boost::multiprecision::abs(x - y) * Rational(pow10(std::max(0, digits - 2))) <= unit;
}

class RootCollector {
 public:
  explicit RootCollector(int digits) : digits_(digits) {}

  // Returns false for duplicates.
  bool add(RootEstimate est) {
    for (const RootEstimate& r : roots_) {
      if (same_root(r.value, est.value, digits_)) return false;
    }
    roots_.push_back(std::move(est));
    return true;
  }

  const std::vector<RootEstimate>& roots() const { return roots_; }

  std::vector<RootEstimate> sorted() && {
    std::sort(roots_.begin(), roots_.end(), [](const RootEstimate& l, const RootEstimate& r) { return l.value < r.value; });
    return std::move(roots_);
  }

 private:
  int digits_;
  std::vector<RootEstimate> roots_;
};

// Dyadic rational u / 2^k inside (lo, hi) close to lo + 0.4142 (hi - lo),
// with 2^-k below a sixteenth of the width.
inline Rational probe_center(double lo, double hi) {
  const double width = hi - lo;
  const int k = std::max(0, static_cast<int>(std::ceil(std::log2(16.0 / width))));
  const double target = lo + 0.41421356 * width;
  return Rational(BigInt(std::round(std::ldexp(target, k))), BigInt(1) << k);
}

}  // namespace detail

/// All real roots of p (zero included), ascending, each verified by residual
/// and sign change and deduplicated at target_digits. Repeated roots are
/// reported once.
///
/// Affine shifts (a, 1) for a in {-2M, -M, 0, M, 2M} (M the Cauchy bound)
/// pick out the extreme real roots; the gaps between found roots are then
/// scanned with shift-and-invert probes. A converged probe at center c
/// finding root r proves (c - |r - c|, c + |r - c|) free of other roots; an
/// inconclusive probe bisects its interval.
inline std::vector<RootEstimate> enumerate_real_roots(const MonicIntPolynomial& p, const DriverOptions& opts = {}) {
  opts.validate();
  detail::RootCollector found(opts.target_digits);

  std::optional<MonicIntPolynomial> q = p;
  bool zero_root = false;
  while (q && q->constant_term() == 0) {
    zero_root = true;
    q = q->degree() == 1 ? std::nullopt : std::optional<MonicIntPolynomial>(deflate_zero_root(*q));
  }
  if (zero_root) {
    RootEstimate zero;
    zero.status = RootStatus::Converged;
    zero.decimal_digits = opts.target_digits;
    found.add(zero);
  }
  if (!q) return std::move(found).sorted();
  // Repeated roots converge only like 1/j; on the square-free part every
  // root is simple.
  const MonicIntPolynomial poly = squarefree_part(*q);

  if (poly.degree() == 1) {
    found.add(root_via_shift(poly, AffineShift::identity(), opts));
    return std::move(found).sorted();
  }

  const BigInt bound = cauchy_bound(poly);
  const std::vector<BigInt> grid{-2 * bound, -bound, BigInt(0), bound, 2 * bound};
  std::vector<std::future<RootEstimate>> runs;
  for (const BigInt& a : grid) {
    runs.push_back(std::async(std::launch::async, [&poly, &opts, a] {
      return root_via_shift(poly, AffineShift(a, 1), opts);
    }));
  }
  bool leftmost_known = false;
  bool rightmost_known = false;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    RootEstimate est = runs[i].get();
    if (!est.converged() || !verify_root(poly, est.value, opts.target_digits)) continue;
    // For a != 0 every real root maps to the same side of zero, so the
    // dominant image is the extreme real root on that side.
    if (grid[i] < 0) leftmost_known = true;
    if (grid[i] > 0) rightmost_known = true;
    found.add(std::move(est));
  }

  const double m_bound = bound.convert_to<double>();
  std::vector<double> edges{-m_bound};
  for (const RootEstimate& r : found.roots()) {
    if (r.value != 0 || !zero_root) edges.push_back(r.approx());
  }
  std::sort(edges.begin() + 1, edges.end());
  edges.push_back(m_bound);

  struct Interval {
    double lo;
    double hi;
    int depth;
  };
  const double min_width = std::pow(10.0, -(opts.target_digits / 2));
  constexpr int kMaxDepth = 30;
  const std::size_t max_probes = 16 + 8 * poly.degree();

  std::deque<Interval> pending;
  const bool any_found = edges.size() > 2;
  for (std::size_t i = edges.size() - 1; i-- > 0;) {
    if (i == 0 && leftmost_known && any_found) continue;
    if (i + 2 == edges.size() && rightmost_known && any_found) continue;
    pending.push_back({edges[i], edges[i + 1], 0});
  }

  std::size_t probes = 0;
  while (!pending.empty() && probes < max_probes) {
    const Interval iv = pending.front();
    pending.pop_front();
    if (iv.hi - iv.lo <= min_width) continue;
    const Rational center = detail::probe_center(iv.lo, iv.hi);
    const double c = to_double(center);
    ++probes;
    RootEstimate est = root_near(poly, center, opts);
    if (est.converged() && verify_root(poly, est.value, opts.target_digits)) {
      const double radius = std::abs(est.approx() - c);
      found.add(std::move(est));
      if (c - radius - iv.lo > min_width) pending.push_back({iv.lo, c - radius, iv.depth + 1});
      if (iv.hi - (c + radius) > min_width) pending.push_back({c + radius, iv.hi, iv.depth + 1});
    } else if (iv.depth < kMaxDepth) {
      pending.push_back({iv.lo, c, iv.depth + 1});
      pending.push_back({c, iv.hi, iv.depth + 1});
    }
  }

  // Digit agreement bounds the step, not the error, so each root is polished
  // by a probe centered on itself, where convergence is nearly immediate.
  // The polished value may move by up to the verification tolerance.
  std::vector<RootEstimate> roots = std::move(found).sorted();
  for (RootEstimate& r : roots) {
    if (r.value == 0 && zero_root) continue;
    const Rational center = round_significant(r.value, opts.target_digits + 2);
    RootEstimate polished = root_near(poly, center, opts);
    if (polished.converged() && detail::same_root(polished.value, r.value, opts.target_digits / 2 + 2) &&
        verify_root(poly, polished.value, opts.target_digits)) {
      r = std::move(polished);
    }
  }
  // Two slow runs on one root can differ by more than the dedupe tolerance.
  detail::RootCollector unique(opts.target_digits);
  for (RootEstimate& r : roots) unique.add(std::move(r));
  return std::move(unique).sorted();
}

}  // namespace intseq
