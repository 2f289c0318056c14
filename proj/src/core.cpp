#include "hgsparse/core.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hgsparse {

namespace {

void check_weight(double w) {
  if (!(w > 0.0) || !std::isfinite(w)) {
    throw std::invalid_argument("weight must be positive and finite, got " +
                                std::to_string(w));
  }
}

// Appends the sorted, deduplicated copy of `set` and returns its size.
std::size_t append_canonical(std::vector<VertexId>& out,
                             std::span<const VertexId> set, std::size_t n) {
  if (set.empty()) throw std::invalid_argument("empty vertex set");
  for (VertexId v : set) {
    if (v >= n) {
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " out of range for n = " + std::to_string(n));
    }
  }
  const auto begin = static_cast<std::ptrdiff_t>(out.size());
  out.insert(out.end(), set.begin(), set.end());
  std::sort(out.begin() + begin, out.end());
  out.erase(std::unique(out.begin() + begin, out.end()), out.end());
  return out.size() - static_cast<std::size_t>(begin);
}

void check_dimension(std::size_t expected, std::size_t got) {
  if (expected != got) {
    throw std::invalid_argument("vector length " + std::to_string(got) +
                                " does not match n = " +
                                std::to_string(expected));
  }
}

void check_covers(std::span<const VertexId> set, std::size_t len) {
  // Sets are sorted, so the last entry is the largest.
  if (!set.empty() && set.back() >= len) {
    throw std::invalid_argument("vector of length " + std::to_string(len) +
                                " too short for vertex " +
                                std::to_string(set.back()));
  }
}

// Fast energy kernels; callers have validated the dimension.
inline double arc_energy_unchecked(const ArcRef& f, const double* x) {
  double hi = x[f.tail[0]];
  for (VertexId u : f.tail.subspan(1)) hi = std::max(hi, x[u]);
  double lo = x[f.head[0]];
  for (VertexId v : f.head.subspan(1)) lo = std::min(lo, x[v]);
  // fl(a - b) is monotone in both arguments, so this equals the maximum of
  // the rounded pairwise differences exactly.
  const double d = hi - lo;
  return d > 0.0 ? f.weight * (d * d) : 0.0;
}

inline double edge_energy_unchecked(const EdgeRef& f, const double* x) {
  double hi = x[f.vertices[0]];
  double lo = hi;
  for (VertexId u : f.vertices.subspan(1)) {
    hi = std::max(hi, x[u]);
    lo = std::min(lo, x[u]);
  }
  const double d = hi - lo;
  return f.weight * (d * d);
}

}  // namespace

// --- DirectedHypergraph ----------------------------------------------------

DirectedHypergraph::DirectedHypergraph(std::size_t num_vertices)
    : n_(num_vertices) {}

DirectedHypergraph::DirectedHypergraph(std::size_t num_vertices,
                                       std::span<const DirectedHyperarc> arcs)
    : n_(num_vertices) {
  for (const auto& a : arcs) add_arc(a);
}

ArcIndex DirectedHypergraph::add_arc(std::span<const VertexId> tail,
                                     std::span<const VertexId> head,
                                     double weight) {
  check_weight(weight);
  const std::size_t mark = vertices_.size();
  try {
    append_canonical(vertices_, tail, n_);
    offsets_.push_back(vertices_.size());
    append_canonical(vertices_, head, n_);
  } catch (...) {
    vertices_.resize(mark);
    offsets_.resize(2 * weights_.size() + 1);
    throw;
  }
  offsets_.push_back(vertices_.size());
  weights_.push_back(weight);
  return weights_.size() - 1;
}

DirectedHypergraph DirectedHypergraph::subgraph(
    std::span<const ArcIndex> arcs) const {
  DirectedHypergraph out(n_);
  for (ArcIndex i : arcs) {
    const ArcRef a = arc(i);
    out.add_arc(a.tail, a.head, a.weight);
  }
  return out;
}

DirectedHypergraph DirectedHypergraph::subgraph(
    std::span<const ArcIndex> arcs, std::span<const double> weights) const {
  if (arcs.size() != weights.size()) {
    throw std::invalid_argument("subgraph: arcs and weights differ in length");
  }
  DirectedHypergraph out(n_);
  for (std::size_t k = 0; k < arcs.size(); ++k) {
    const ArcRef a = arc(arcs[k]);
    out.add_arc(a.tail, a.head, weights[k]);
  }
  return out;
}

// --- UndirectedHypergraph --------------------------------------------------

UndirectedHypergraph::UndirectedHypergraph(std::size_t num_vertices)
    : n_(num_vertices) {}

UndirectedHypergraph::UndirectedHypergraph(
    std::size_t num_vertices, std::span<const UndirectedHyperedge> edges)
    : n_(num_vertices) {
  for (const auto& e : edges) add_edge(e);
}

ArcIndex UndirectedHypergraph::add_edge(std::span<const VertexId> vertices,
                                        double weight) {
  check_weight(weight);
  const std::size_t mark = vertices_.size();
  try {
    append_canonical(vertices_, vertices, n_);
  } catch (...) {
    vertices_.resize(mark);
    throw;
  }
  offsets_.push_back(vertices_.size());
  weights_.push_back(weight);
  return weights_.size() - 1;
}

UndirectedHypergraph UndirectedHypergraph::subgraph(
    std::span<const ArcIndex> edges) const {
  UndirectedHypergraph out(n_);
  for (ArcIndex i : edges) {
    const EdgeRef e = edge(i);
    out.add_edge(e.vertices, e.weight);
  }
  return out;
}

UndirectedHypergraph UndirectedHypergraph::subgraph(
    std::span<const ArcIndex> edges, std::span<const double> weights) const {
  if (edges.size() != weights.size()) {
    throw std::invalid_argument("subgraph: edges and weights differ in length");
  }
  UndirectedHypergraph out(n_);
  for (std::size_t k = 0; k < edges.size(); ++k) {
    out.add_edge(edge(edges[k]).vertices, weights[k]);
  }
  return out;
}

// --- energies --------------------------------------------------------------

double arc_energy(const ArcRef& f, std::span<const double> x) {
  if (f.tail.empty() || f.head.empty()) {
    throw std::invalid_argument("hyperarc with empty tail or head");
  }
  check_covers(f.tail, x.size());
  check_covers(f.head, x.size());
  return arc_energy_unchecked(f, x.data());
}

double arc_energy(const DirectedHyperarc& f, std::span<const double> x) {
  std::vector<VertexId> t = f.tail, h = f.head;
  std::sort(t.begin(), t.end());
  std::sort(h.begin(), h.end());
  return arc_energy(ArcRef{t, h, f.weight}, x);
}

double directed_energy(const DirectedHypergraph& h, std::span<const double> x) {
  check_dimension(h.num_vertices(), x.size());
  double sum = 0.0;
  for (ArcIndex i = 0; i < h.num_arcs(); ++i) {
    sum += arc_energy_unchecked(h.arc(i), x.data());
  }
  return sum;
}

double directed_energy(const DirectedHypergraph& h, std::span<const double> x,
                       std::span<const ArcIndex> arcs) {
  check_dimension(h.num_vertices(), x.size());
  double sum = 0.0;
  for (ArcIndex i : arcs) {
    if (i >= h.num_arcs()) throw std::out_of_range("arc index out of range");
    sum += arc_energy_unchecked(h.arc(i), x.data());
  }
  return sum;
}

double edge_energy(const EdgeRef& f, std::span<const double> x) {
  if (f.vertices.empty()) throw std::invalid_argument("empty hyperedge");
  check_covers(f.vertices, x.size());
  return edge_energy_unchecked(f, x.data());
}

double undirected_energy(const UndirectedHypergraph& h,
                         std::span<const double> x) {
  check_dimension(h.num_vertices(), x.size());
  double sum = 0.0;
  for (ArcIndex i = 0; i < h.num_edges(); ++i) {
    sum += edge_energy_unchecked(h.edge(i), x.data());
  }
  return sum;
}

double undirected_energy(const UndirectedHypergraph& h,
                         std::span<const double> x,
                         std::span<const ArcIndex> edges) {
  check_dimension(h.num_vertices(), x.size());
  double sum = 0.0;
  for (ArcIndex i : edges) {
    if (i >= h.num_edges()) throw std::out_of_range("edge index out of range");
    sum += edge_energy_unchecked(h.edge(i), x.data());
  }
  return sum;
}

std::vector<double> indicator(std::size_t n, std::span<const VertexId> set) {
  std::vector<double> x(n, 0.0);
  for (VertexId v : set) {
    if (v >= n) {
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " out of range for n = " + std::to_string(n));
    }
    x[v] = 1.0;
  }
  return x;
}

double cut_value(const DirectedHypergraph& h, std::span<const VertexId> set) {
  return directed_energy(h, indicator(h.num_vertices(), set));
}

// --- combinatorics ---------------------------------------------------------

std::vector<VertexPair> biclique(const ArcRef& f) {
  std::vector<VertexPair> out;
  out.reserve(f.tail.size() * f.head.size());
  for (VertexId u : f.tail) {
    for (VertexId v : f.head) out.push_back({u, v});
  }
  return out;
}

std::vector<VertexPair> biclique(const DirectedHyperarc& f) {
  std::vector<VertexId> t = f.tail, h = f.head;
  std::sort(t.begin(), t.end());
  t.erase(std::unique(t.begin(), t.end()), t.end());
  std::sort(h.begin(), h.end());
  h.erase(std::unique(h.begin(), h.end()), h.end());
  return biclique(ArcRef{t, h, f.weight});
}

std::vector<VertexPair> biclique(const DirectedHypergraph& h,
                                 std::span<const ArcIndex> arcs) {
  std::vector<VertexPair> out;
  for (ArcIndex i : arcs) {
    const auto pairs = biclique(h.arc(i));
    out.insert(out.end(), pairs.begin(), pairs.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<VertexPair> clique(const EdgeRef& f) {
  std::vector<VertexPair> out;
  const auto& vs = f.vertices;
  for (std::size_t a = 0; a < vs.size(); ++a) {
    for (std::size_t b = a + 1; b < vs.size(); ++b) out.push_back({vs[a], vs[b]});
  }
  return out;
}

std::size_t rank(const DirectedHypergraph& h) {
  std::size_t r = 0;
  for (ArcIndex i = 0; i < h.num_arcs(); ++i) {
    const ArcRef a = h.arc(i);
    r = std::max(r, a.tail.size() + a.head.size());
  }
  return r;
}

std::size_t rank(const UndirectedHypergraph& h) {
  std::size_t r = 0;
  for (ArcIndex i = 0; i < h.num_edges(); ++i) r = std::max(r, h.edge_size(i));
  return r;
}

double total_weight(const DirectedHypergraph& h) {
  double s = 0.0;
  for (double w : h.weights()) s += w;
  return s;
}

double total_weight(const UndirectedHypergraph& h) {
  double s = 0.0;
  for (double w : h.weights()) s += w;
  return s;
}

}  // namespace hgsparse
