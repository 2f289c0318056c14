#ifndef HGSPARSE_CORE_HPP_
#define HGSPARSE_CORE_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace hgsparse {

using VertexId = std::uint32_t;
using ArcIndex = std::size_t;

/// Ordered vertex pair (u, v). Ordering is lexicographic, which is also the
/// canonical tie-breaking order for argmax over pairs.
struct VertexPair {
  VertexId u = 0;
  VertexId v = 0;
  friend auto operator<=>(const VertexPair&, const VertexPair&) = default;
};

/// Owning hyperarc, used to build a DirectedHypergraph.
struct DirectedHyperarc {
  std::vector<VertexId> tail;
  std::vector<VertexId> head;
  double weight = 1.0;
};

/// Non-owning view of a stored hyperarc. Tail and head are sorted and unique.
struct ArcRef {
  std::span<const VertexId> tail;
  std::span<const VertexId> head;
  double weight = 0.0;
};

struct UndirectedHyperedge {
  std::vector<VertexId> vertices;
  double weight = 1.0;
};

struct EdgeRef {
  std::span<const VertexId> vertices;
  double weight = 0.0;
};

/// Weighted directed hypergraph H = (V, F, z) in flat storage. Arc order is
/// the total order used for every tie-break.
class DirectedHypergraph {
 public:
  DirectedHypergraph() = default;
  explicit DirectedHypergraph(std::size_t num_vertices);
  DirectedHypergraph(std::size_t num_vertices,
                     std::span<const DirectedHyperarc> arcs);

  /// Appends an arc. Vertex sets are sorted and deduplicated; throws
  /// std::invalid_argument on an empty side, an out-of-range vertex or a
  /// weight that is not positive and finite.
  ArcIndex add_arc(std::span<const VertexId> tail,
                   std::span<const VertexId> head, double weight);
  ArcIndex add_arc(const DirectedHyperarc& arc) {
    return add_arc(arc.tail, arc.head, arc.weight);
  }

  std::size_t num_vertices() const { return n_; }
  std::size_t num_arcs() const { return weights_.size(); }
  bool empty() const { return weights_.empty(); }

  ArcRef arc(ArcIndex i) const {
    const std::size_t* o = &offsets_[2 * i];
    return {{vertices_.data() + o[0], o[1] - o[0]},
            {vertices_.data() + o[1], o[2] - o[1]},
            weights_[i]};
  }
  double weight(ArcIndex i) const { return weights_[i]; }
  std::span<const double> weights() const { return weights_; }

  /// Sub-hypergraph on the given arcs (in the given order), original weights.
  DirectedHypergraph subgraph(std::span<const ArcIndex> arcs) const;
  /// Same, with replacement weights (one per selected arc).
  DirectedHypergraph subgraph(std::span<const ArcIndex> arcs,
                              std::span<const double> weights) const;

  friend bool operator==(const DirectedHypergraph&,
                         const DirectedHypergraph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<VertexId> vertices_;
  std::vector<std::size_t> offsets_{0};
  std::vector<double> weights_;
};

/// Weighted undirected hypergraph in flat storage.
class UndirectedHypergraph {
 public:
  UndirectedHypergraph() = default;
  explicit UndirectedHypergraph(std::size_t num_vertices);
  UndirectedHypergraph(std::size_t num_vertices,
                       std::span<const UndirectedHyperedge> edges);

  ArcIndex add_edge(std::span<const VertexId> vertices, double weight);
  ArcIndex add_edge(const UndirectedHyperedge& e) {
    return add_edge(e.vertices, e.weight);
  }

  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return weights_.size(); }
  bool empty() const { return weights_.empty(); }

  EdgeRef edge(ArcIndex i) const {
    return {{vertices_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]},
            weights_[i]};
  }
  std::size_t edge_size(ArcIndex i) const {
    return offsets_[i + 1] - offsets_[i];
  }
  double weight(ArcIndex i) const { return weights_[i]; }
  std::span<const double> weights() const { return weights_; }

  UndirectedHypergraph subgraph(std::span<const ArcIndex> edges) const;
  UndirectedHypergraph subgraph(std::span<const ArcIndex> edges,
                                std::span<const double> weights) const;

  friend bool operator==(const UndirectedHypergraph&,
                         const UndirectedHypergraph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<VertexId> vertices_;
  std::vector<std::size_t> offsets_{0};
  std::vector<double> weights_;
};

// Energies. All throw std::invalid_argument when x is too short for a vertex
// referenced (single arc) or x.size() != n (whole hypergraph).

/// z_f * max_{u in t(f), v in h(f)} (x_u - x_v)_+^2.
double arc_energy(const ArcRef& f, std::span<const double> x);
double arc_energy(const DirectedHyperarc& f, std::span<const double> x);

/// x^T L_H(x), the sum of arc energies.
double directed_energy(const DirectedHypergraph& h, std::span<const double> x);
/// Energy restricted to a subset of arc indices.
double directed_energy(const DirectedHypergraph& h, std::span<const double> x,
                       std::span<const ArcIndex> arcs);

/// z_f * max_{u,v in f} (x_u - x_v)^2.
double edge_energy(const EdgeRef& f, std::span<const double> x);
double undirected_energy(const UndirectedHypergraph& h,
                         std::span<const double> x);
double undirected_energy(const UndirectedHypergraph& h,
                         std::span<const double> x,
                         std::span<const ArcIndex> edges);

inline double energy(const DirectedHypergraph& h, std::span<const double> x) {
  return directed_energy(h, x);
}
inline double energy(const UndirectedHypergraph& h,
                     std::span<const double> x) {
  return undirected_energy(h, x);
}

/// Indicator vector 1_X of a vertex set.
std::vector<double> indicator(std::size_t n, std::span<const VertexId> set);

/// Cut function kappa_H(X): directed_energy at the indicator of X.
double cut_value(const DirectedHypergraph& h, std::span<const VertexId> set);

/// C(f) in lexicographic order, diagonal pairs (u,u) included.
std::vector<VertexPair> biclique(const ArcRef& f);
std::vector<VertexPair> biclique(const DirectedHyperarc& f);
/// C(F') for a set of arcs, sorted and unique.
std::vector<VertexPair> biclique(const DirectedHypergraph& h,
                                 std::span<const ArcIndex> arcs);

/// Clique pairs {u < v} of an undirected hyperedge, lexicographic.
std::vector<VertexPair> clique(const EdgeRef& f);

std::size_t rank(const DirectedHypergraph& h);
std::size_t rank(const UndirectedHypergraph& h);

double total_weight(const DirectedHypergraph& h);
double total_weight(const UndirectedHypergraph& h);

}  // namespace hgsparse

#endif  // HGSPARSE_CORE_HPP_
