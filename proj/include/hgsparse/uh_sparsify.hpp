#ifndef HGSPARSE_UH_SPARSIFY_HPP_
#define HGSPARSE_UH_SPARSIFY_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hgsparse/core.hpp"
#include "hgsparse/random.hpp"
#include "hgsparse/schedule.hpp"
#include "hgsparse/spanner.hpp"

namespace hgsparse {

struct UhConfig {
  double c_spanner_size = 2.0;  // C_3: spanner size per vertex
  double c_sampling = 1.0;      // C_2 in lambda_i = ceil(8 C_2 r^3 log^2 m_i / eps_i^2)
  double cc = 4.0;              // loop runs while m_i >= cc m*
  Mode mode = Mode::theory;
  std::optional<std::uint64_t> lambda_override;  // practical mode only
  double stretch = 0.0;  // basis-graph stretch; 0 selects default_stretch(n)
  std::size_t fault_k = 0;  // extra bundle layers per round
  SpannerBasis basis = SpannerBasis::star;
  bool check_soundness = false;  // fill IterationRecord::max_sampling_ratio
  std::uint64_t seed = 0;

  void validate() const;
  double stretch_for(std::size_t n) const {
    return stretch > 0.0 ? stretch : default_stretch(n);
  }
};

/// m* = (n r^3 / eps^2) log2^2 n, or C_3 * lambda_override * n (the bundle
/// capacity at that lambda) in practical mode with an override.
double uh_target_size(std::size_t n, std::size_t r, double eps,
                      const UhConfig& config);

/// lambda_i = ceil(8 C_2 r^3 log2^2(m_i) / eps_i^2), or the override.
std::uint64_t uh_round_lambda(std::size_t m_i, std::size_t r, double eps_i,
                              const UhConfig& config);

struct UndirectedOnestepResult {
  UndirectedHypergraph graph;
  std::vector<ArcIndex> source;
  std::vector<char> doubled;
  SpannerBundle bundle;
  std::size_t eligible = 0;
  std::size_t sampled = 0;
};

/// Keeps a bundle of `layers` disjoint hyperspanners at original weight and
/// samples every other hyperedge with probability 1/2 at doubled weight.
UndirectedOnestepResult uh_onestep(const UndirectedHypergraph& h,
                                   std::uint64_t layers, const UhConfig& config,
                                   const CoinStream& coins,
                                   std::span<const std::uint64_t> ids = {});

struct UndirectedSparsifyResult {
  UndirectedHypergraph graph;
  std::vector<ArcIndex> origin;
  std::vector<std::uint32_t> doublings;
  SparsifyReport report;
};

/// Iterative sparsifier for hyperedges with |f| in (r/2, r]. Each round's
/// bundle has lambda_i + config.fault_k layers. Throws std::invalid_argument
/// on a size-band violation or eps outside (0, 1).
UndirectedSparsifyResult uh_sparsify(const UndirectedHypergraph& h,
                                     std::size_t r, double eps,
                                     const UhConfig& config);

/// uh_sparsify with k extra bundle layers per round (weak k-fault tolerance).
UndirectedSparsifyResult ft_uh_sparsify(const UndirectedHypergraph& h,
                                        std::size_t r, double eps,
                                        std::size_t k, UhConfig config);

/// Size bucket of a hyperedge: i with |f| in (2^{i-1}, 2^i]; singletons
/// land in bucket 0.
std::size_t size_bucket(std::size_t edge_size);

struct BucketRun {
  std::size_t index = 0;     // i
  double eps = 0.0;          // eps * sqrt(2^{i-1} / r)
  std::vector<ArcIndex> edges;  // input hyperedges in the bucket
  UndirectedSparsifyResult result;
};

struct BucketSparsifyResult {
  UndirectedHypergraph graph;  // union of bucket outputs
  std::vector<ArcIndex> origin;
  std::vector<std::uint32_t> doublings;
  std::vector<BucketRun> buckets;
};

/// Splits h by size_bucket, sparsifies bucket i at eps sqrt(2^{i-1}/r) with
/// band (2^{i-1}, 2^i], and unions the outputs. Bucket 0 (singletons, zero
/// energy) passes through unchanged. Throws if rank(h) > r.
BucketSparsifyResult rank_bucket_sparsify(const UndirectedHypergraph& h,
                                          std::size_t r, double eps,
                                          const UhConfig& config);

/// Largest (C_2 r^4 log2 n / eps^2) z_f R_G(u,v) over f outside the bundle
/// and {u,v} in C(f), with G the associated graph of h. 0 if every
/// hyperedge is in the bundle.
double max_sampling_ratio(const UndirectedHypergraph& h,
                          std::span<const ArcIndex> bundle, std::size_t r,
                          double eps, double c_sampling);

}  // namespace hgsparse

#endif  // HGSPARSE_UH_SPARSIFY_HPP_
