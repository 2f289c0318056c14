#ifndef HGSPARSE_SPANNER_HPP_
#define HGSPARSE_SPANNER_HPP_

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "hgsparse/core.hpp"

namespace hgsparse {

inline constexpr std::size_t kNoOrigin = std::numeric_limits<std::size_t>::max();

struct WeightedEdge {
  VertexId u = 0;
  VertexId v = 0;
  double weight = 1.0;
  std::size_t origin = kNoOrigin;  // hyperedge f_e, if any
};

/// Undirected weighted multigraph. Edge length is 1/weight.
class WeightedMultigraph {
 public:
  WeightedMultigraph() = default;
  explicit WeightedMultigraph(std::size_t num_vertices) : n_(num_vertices) {}

  /// Throws std::invalid_argument on a self-loop, an out-of-range endpoint or
  /// a weight that is not positive and finite.
  std::size_t add_edge(VertexId u, VertexId v, double weight,
                       std::size_t origin = kNoOrigin);

  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  const WeightedEdge& edge(std::size_t i) const { return edges_[i]; }
  std::span<const WeightedEdge> edges() const { return edges_; }

  WeightedMultigraph subgraph(std::span<const std::size_t> edges) const;

 private:
  std::size_t n_ = 0;
  std::vector<WeightedEdge> edges_;
};

/// Clique expansion: one edge per clique pair per hyperedge, weight z_f.
WeightedMultigraph associated_graph(const UndirectedHypergraph& h);

/// Star expansion: |f|-1 edges from the lowest-index vertex of f.
WeightedMultigraph star_graph(const UndirectedHypergraph& h);

/// max(2, ceil(log2 n)).
double default_stretch(std::size_t n);

/// Greedy k-spanner: edges in increasing length (ties by index), each added
/// iff the current spanner distance between its endpoints exceeds k/w_e.
/// Returns sorted edge indices. Throws if k < 1.
std::vector<std::size_t> greedy_spanner(const WeightedMultigraph& g, double k);

enum class SpannerBasis {
  star,    // guarantees stretch 2k on the hypergraph
  clique,  // guarantees stretch k
};

/// Hyperedges {f_e} behind a greedy k-spanner of the basis graph. Sorted.
std::vector<ArcIndex> hyperspanner(const UndirectedHypergraph& h, double k,
                                   SpannerBasis basis = SpannerBasis::star);

struct SpannerBundle {
  std::vector<std::vector<ArcIndex>> layers;  // each sorted
  double stretch = 1.0;  // guaranteed hyperspanner stretch of every layer

  std::vector<ArcIndex> all() const;  // union, sorted
};

/// lambda disjoint hyperspanners, each of h minus the earlier layers. Stops
/// early once no hyperedge remains.
SpannerBundle spanner_bundle(const UndirectedHypergraph& h, std::size_t lambda,
                             double k, SpannerBasis basis = SpannerBasis::star);

/// R_G(u, v) by a grounded Laplacian solve on u's component; +infinity when
/// disconnected, 0 when u == v.
double effective_resistance(const WeightedMultigraph& g, VertexId u, VertexId v);

/// All-pairs effective resistance from one dense factorization per connected
/// component. For repeated queries on a fixed graph.
class ResistanceOracle {
 public:
  explicit ResistanceOracle(const WeightedMultigraph& g);

  double operator()(VertexId u, VertexId v) const;
  std::size_t num_components() const { return num_components_; }

 private:
  std::vector<int> component_;
  std::vector<int> local_;                 // index inside its component
  std::vector<Eigen::MatrixXd> pinv_;      // pseudo-inverse per component
  std::size_t num_components_ = 0;
};

/// Dense Laplacian L_G.
Eigen::MatrixXd laplacian(const WeightedMultigraph& g);

/// x^T L_G x.
double quadratic_form(const WeightedMultigraph& g, std::span<const double> x);

}  // namespace hgsparse

#endif  // HGSPARSE_SPANNER_HPP_
