#ifndef HGSPARSE_VERIFY_HPP_
#define HGSPARSE_VERIFY_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "hgsparse/core.hpp"
#include "hgsparse/random.hpp"
#include "hgsparse/spanner.hpp"

namespace hgsparse {

/// Absolute slack for ratio comparisons.
inline constexpr double kRatioSlack = 1e-12;

enum class ProbeKind { gaussian, boolean };

struct ProbeResult {
  double max_over = 0.0;   // max(Q~/Q - 1), clamped at 0
  double max_under = 0.0;  // max(1 - Q~/Q), clamped at 0
  std::size_t used = 0;
  std::size_t skipped = 0;    // Q_H(x) == 0
  std::vector<double> ratios;  // Q~/Q per probe, NaN when skipped

  double max_error() const { return max_over > max_under ? max_over : max_under; }
};

/// Probe p draws x from an engine seeded by derive_seed(seed, p), so the
/// first k probes of a run with more samples are the same k vectors.
std::vector<double> probe_vector(std::size_t n, std::uint64_t seed,
                                 std::size_t p, ProbeKind kind);

/// Estimates sup |Q_H~(x)/Q_H(x) - 1| over random x. Throws when the vertex
/// counts differ, num_samples is 0 or every probe is degenerate.
template <class Hypergraph>
ProbeResult spectral_probe(const Hypergraph& h, const Hypergraph& h_tilde,
                           std::size_t num_samples, std::uint64_t seed,
                           ProbeKind kind = ProbeKind::gaussian) {
  if (h.num_vertices() != h_tilde.num_vertices()) {
    throw std::invalid_argument("spectral_probe: vertex counts differ");
  }
  if (num_samples == 0) throw std::invalid_argument("spectral_probe: no samples");
  ProbeResult r;
  r.ratios.reserve(num_samples);
  for (std::size_t p = 0; p < num_samples; ++p) {
    const auto x = probe_vector(h.num_vertices(), seed, p, kind);
    const double q = energy(h, x);
    if (!(q > 0.0)) {
      ++r.skipped;
      r.ratios.push_back(std::numeric_limits<double>::quiet_NaN());
      continue;
    }
    const double ratio = energy(h_tilde, x) / q;
    ++r.used;
    r.ratios.push_back(ratio);
    r.max_over = std::max(r.max_over, ratio - 1.0);
    r.max_under = std::max(r.max_under, 1.0 - ratio);
  }
  if (r.used == 0) throw std::invalid_argument("spectral_probe: every probe is degenerate");
  return r;
}

/// Default vertex cap for exhaustive_cut_check.
inline constexpr std::size_t kExhaustiveCap = 16;

struct CutCheckResult {
  bool pass = true;
  double worst_error = 0.0;        // max |Q~/Q - 1|; +inf if Q = 0 < Q~
  std::uint64_t worst_set = 0;     // bitmask of the worst x
  bool has_failure = false;
  std::uint64_t first_failure = 0; // first failing bitmask in scan order
  std::size_t cuts = 0;            // 2^n

  std::vector<VertexId> worst_vertices() const;
};

namespace detail {
std::vector<double> mask_vector(std::size_t n, std::uint64_t mask);
}

/// Scans all x in {0,1}^V. Passes iff (1-eps) Q_H(x) <= Q_H~(x) <= (1+eps) Q_H(x)
/// for every x, with kRatioSlack * Q_H(x) absolute slack.
template <class Hypergraph>
CutCheckResult exhaustive_cut_check(const Hypergraph& h, const Hypergraph& h_tilde,
                                    double eps, std::size_t cap = kExhaustiveCap) {
  const std::size_t n = h.num_vertices();
  if (h_tilde.num_vertices() != n) {
    throw std::invalid_argument("exhaustive_cut_check: vertex counts differ");
  }
  if (n > cap || n > 62) {
    throw std::invalid_argument("exhaustive_cut_check: n exceeds the cap");
  }
  if (!(eps >= 0.0)) throw std::invalid_argument("exhaustive_cut_check: eps < 0");
  CutCheckResult r;
  r.cuts = std::size_t{1} << n;
  for (std::uint64_t mask = 0; mask < r.cuts; ++mask) {
    const auto x = detail::mask_vector(n, mask);
    const double q = energy(h, x);
    const double qt = energy(h_tilde, x);
    const double slack = kRatioSlack * q;
    const bool ok = qt >= (1.0 - eps) * q - slack && qt <= (1.0 + eps) * q + slack;
    double err = 0.0;
    if (q > 0.0) {
      err = std::abs(qt / q - 1.0);
    } else if (qt > 0.0) {
      err = std::numeric_limits<double>::infinity();
    }
    if (err > r.worst_error) {
      r.worst_error = err;
      r.worst_set = mask;
    }
    if (!ok) {
      r.pass = false;
      if (!r.has_failure) {
        r.has_failure = true;
        r.first_failure = mask;
      }
    }
  }
  return r;
}

struct StretchResult {
  bool pass = true;
  std::size_t checked = 0;
  std::size_t worst = 0;      // edge (or hyperedge) index with the largest ratio
  double worst_ratio = 0.0;   // dist * w / 1; +inf when disconnected
  VertexId worst_u = 0, worst_v = 0;
};

/// For every edge e of g: dist_S(u, v) <= k / w_e, distances by Dijkstra over
/// lengths 1/w on the spanner edges.
StretchResult stretch_check(const WeightedMultigraph& g,
                            std::span<const std::size_t> spanner_edges, double k);

/// For every hyperedge f of h and pair {u, v} in C(f): the shortest u-v
/// hyperpath through `spanner_edges` has length at most k / z_f.
StretchResult hyper_stretch_check(const UndirectedHypergraph& h,
                                  std::span<const ArcIndex> spanner_edges,
                                  double k);

struct Summary {
  std::size_t count = 0;
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation
  double min = 0.0, max = 0.0;
  double std_error() const { return count > 0 ? stddev / std::sqrt(double(count)) : 0.0; }
};
Summary summarize(std::span<const double> values);

}  // namespace hgsparse

#endif  // HGSPARSE_VERIFY_HPP_
