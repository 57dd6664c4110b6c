#pragma once

// Oracle-equivalence sweeps shared by the unit suite and the acceptance run.

#include <cmath>
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "intseq/driver.hpp"
#include "intseq/oracle.hpp"
#include "support/corpus.hpp"

namespace intseq::testing {

struct SweepResult {
  std::size_t sampled = 0;
  std::size_t eligible = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

inline bool close(double x, double y, double tol) { return std::abs(x - y) <= tol * std::max(1.0, std::abs(y)); }

/// dominant_root against the oracle's largest-modulus root on polynomials
/// with a dominance gap of at least 1.05.
inline SweepResult dominant_sweep(std::uint64_t seed, std::size_t count, double tol = 1e-8) {
  Corpus corpus(seed, 2, 4, 9);
  SweepResult out;
  DriverOptions opts;
  opts.max_iters = 10000;
  while (out.eligible < count) {
    const MonicIntPolynomial p = corpus.polynomial();
    ++out.sampled;
    const oracle::ComplexRootSet rs = oracle::durand_kerner(p);
    if (!rs.converged || oracle::dominance_gap(rs) < 1.05) continue;
    ++out.eligible;
    const double expected = oracle::dominant(rs).real();
    const RootEstimate est = dominant_root(p, opts);
    if (!est.converged() || !close(est.approx(), expected, tol)) {
      std::ostringstream msg;
      msg << p.to_string() << ": status " << to_string(est.status) << ", got " << est.approx() << ", oracle " << expected;
      out.failures.push_back(msg.str());
    }
  }
  return out;
}

/// enumerate_real_roots against the oracle's real roots on polynomials whose
/// roots are simple and separated by at least 1e-3.
inline SweepResult enumeration_sweep(std::uint64_t seed, std::size_t sampled, double tol = 1e-6) {
  Corpus corpus(seed, 2, 4, 9);
  SweepResult out;
  for (; out.sampled < sampled; ++out.sampled) {
    const MonicIntPolynomial p = corpus.polynomial();
    const oracle::ComplexRootSet rs = oracle::durand_kerner(p);
    if (!well_separated(rs, 1e-3)) continue;
    ++out.eligible;
    const std::vector<double> expected = oracle::real_roots(rs);
    const std::vector<RootEstimate> found = enumerate_real_roots(p);
    bool match = found.size() == expected.size();
    for (std::size_t i = 0; match && i < found.size(); ++i) match = close(found[i].approx(), expected[i], tol);
    if (!match) {
      std::ostringstream msg;
      msg << p.to_string() << ": found {";
      for (const RootEstimate& r : found) msg << ' ' << r.approx();
      msg << " } oracle {";
      for (double x : expected) msg << ' ' << x;
      msg << " }";
      out.failures.push_back(msg.str());
    }
  }
  return out;
}

}  // namespace intseq::testing
