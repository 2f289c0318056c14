#include "hgsparse/spanner.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>

namespace hgsparse {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Exact shortest-path distances of a graph that only ever gains edges.
// Dense all-pairs matrix for small n, bounded Dijkstra otherwise.
class GrowingDistances {
 public:
  static constexpr std::size_t kDenseLimit = 2048;

  explicit GrowingDistances(std::size_t n) : n_(n), adj_(n) {
    if (n_ <= kDenseLimit) {
      dist_.assign(n_ * n_, kInf);
      for (std::size_t a = 0; a < n_; ++a) dist_[a * n_ + a] = 0.0;
      row_u_.resize(n_);
      row_v_.resize(n_);
    }
  }

  // Returns whether dist(u, v) <= bound.
  bool within(VertexId u, VertexId v, double bound) const {
    if (!dist_.empty()) return dist_[u * n_ + v] <= bound;
    return bounded_dijkstra(u, v, bound) <= bound;
  }

  void add(VertexId u, VertexId v, double len) {
    adj_[u].push_back({v, len});
    adj_[v].push_back({u, len});
    if (dist_.empty()) return;
    std::copy_n(dist_.begin() + u * n_, n_, row_u_.begin());
    std::copy_n(dist_.begin() + v * n_, n_, row_v_.begin());
    for (std::size_t a = 0; a < n_; ++a) {
      const double au = row_u_[a];
      const double av = row_v_[a];
      if (au == kInf && av == kInf) continue;
      double* row = &dist_[a * n_];
      for (std::size_t b = 0; b < n_; ++b) {
        const double via = std::min(au + len + row_v_[b], av + len + row_u_[b]);
        if (via < row[b]) row[b] = via;
      }
    }
  }

 private:
  struct Arc {
    VertexId to;
    double len;
  };

  double bounded_dijkstra(VertexId s, VertexId t, double bound) const {
    if (s == t) return 0.0;
    std::vector<double> d(n_, kInf);
    using Item = std::pair<double, VertexId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    d[s] = 0.0;
    pq.push({0.0, s});
    while (!pq.empty()) {
      auto [du, x] = pq.top();
      pq.pop();
      if (du > d[x]) continue;
      if (x == t) return du;
      if (du > bound) break;
      for (const Arc& a : adj_[x]) {
        const double nd = du + a.len;
        if (nd < d[a.to]) {
          d[a.to] = nd;
          pq.push({nd, a.to});
        }
      }
    }
    return d[t];
  }

  std::size_t n_;
  std::vector<std::vector<Arc>> adj_;
  std::vector<double> dist_;
  std::vector<double> row_u_, row_v_;
};

// Greedy spanner over the edges of g listed in `order` (already sorted by
// length). Returns the selected edge indices in processing order.
std::vector<std::size_t> greedy_over(const WeightedMultigraph& g,
                                     std::span<const std::size_t> order,
                                     double k) {
  GrowingDistances dist(g.num_vertices());
  std::vector<std::size_t> chosen;
  for (std::size_t e : order) {
    const WeightedEdge& ed = g.edge(e);
    if (dist.within(ed.u, ed.v, k / ed.weight)) continue;
    dist.add(ed.u, ed.v, 1.0 / ed.weight);
    chosen.push_back(e);
  }
  return chosen;
}

std::vector<std::size_t> length_order(const WeightedMultigraph& g) {
  std::vector<std::size_t> order(g.num_edges());
  std::iota(order.begin(), order.end(), std::size_t{0});
  // Heavier first is shorter first; stable keeps the canonical index order.
  std::stable_sort(order.begin(), order.end(), [&g](std::size_t a, std::size_t b) {
    return g.edge(a).weight > g.edge(b).weight;
  });
  return order;
}

void check_stretch(double k) {
  if (!(k >= 1.0) || !std::isfinite(k)) {
    throw std::invalid_argument("stretch must be a finite value >= 1");
  }
}

WeightedMultigraph basis_graph(const UndirectedHypergraph& h, SpannerBasis b) {
  return b == SpannerBasis::star ? star_graph(h) : associated_graph(h);
}

double guaranteed_stretch(double k, SpannerBasis b) {
  return b == SpannerBasis::star ? 2.0 * k : k;
}

// Connected components by BFS; returns component id per vertex.
std::vector<int> components(const WeightedMultigraph& g, std::size_t& count) {
  const std::size_t n = g.num_vertices();
  std::vector<std::vector<VertexId>> adj(n);
  for (const auto& e : g.edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<int> comp(n, -1);
  count = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(count++);
    std::vector<VertexId> stack{static_cast<VertexId>(s)};
    comp[s] = id;
    while (!stack.empty()) {
      const VertexId x = stack.back();
      stack.pop_back();
      for (VertexId y : adj[x]) {
        if (comp[y] < 0) {
          comp[y] = id;
          stack.push_back(y);
        }
      }
    }
  }
  return comp;
}

}  // namespace

// --- multigraph ------------------------------------------------------------

std::size_t WeightedMultigraph::add_edge(VertexId u, VertexId v, double weight,
                                         std::size_t origin) {
  if (u >= n_ || v >= n_) throw std::invalid_argument("edge endpoint out of range");
  if (u == v) throw std::invalid_argument("self-loops are not stored");
  if (!(weight > 0.0) || !std::isfinite(weight)) {
    throw std::invalid_argument("edge weight must be positive and finite");
  }
  edges_.push_back({u, v, weight, origin});
  return edges_.size() - 1;
}

WeightedMultigraph WeightedMultigraph::subgraph(
    std::span<const std::size_t> edges) const {
  WeightedMultigraph out(n_);
  for (std::size_t e : edges) {
    const auto& ed = edges_.at(e);
    out.add_edge(ed.u, ed.v, ed.weight, ed.origin);
  }
  return out;
}

WeightedMultigraph associated_graph(const UndirectedHypergraph& h) {
  WeightedMultigraph g(h.num_vertices());
  for (ArcIndex f = 0; f < h.num_edges(); ++f) {
    const EdgeRef e = h.edge(f);
    for (const VertexPair& p : clique(e)) g.add_edge(p.u, p.v, e.weight, f);
  }
  return g;
}

WeightedMultigraph star_graph(const UndirectedHypergraph& h) {
  WeightedMultigraph g(h.num_vertices());
  for (ArcIndex f = 0; f < h.num_edges(); ++f) {
    const EdgeRef e = h.edge(f);
    const VertexId center = e.vertices[0];
    for (VertexId v : e.vertices.subspan(1)) g.add_edge(center, v, e.weight, f);
  }
  return g;
}

double default_stretch(std::size_t n) {
  const double l = n > 1 ? std::ceil(std::log2(static_cast<double>(n))) : 1.0;
  return std::max(2.0, l);
}

std::vector<std::size_t> greedy_spanner(const WeightedMultigraph& g, double k) {
  check_stretch(k);
  const auto order = length_order(g);
  auto chosen = greedy_over(g, order, k);
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

std::vector<ArcIndex> hyperspanner(const UndirectedHypergraph& h, double k,
                                   SpannerBasis basis) {
  check_stretch(k);
  const WeightedMultigraph g = basis_graph(h, basis);
  std::vector<ArcIndex> out;
  for (std::size_t e : greedy_spanner(g, k)) out.push_back(g.edge(e).origin);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<ArcIndex> SpannerBundle::all() const {
  std::vector<ArcIndex> out;
  for (const auto& l : layers) out.insert(out.end(), l.begin(), l.end());
  std::sort(out.begin(), out.end());
  return out;
}

SpannerBundle spanner_bundle(const UndirectedHypergraph& h, std::size_t lambda,
                             double k, SpannerBasis basis) {
  check_stretch(k);
  SpannerBundle b;
  b.stretch = guaranteed_stretch(k, basis);
  const WeightedMultigraph g = basis_graph(h, basis);
  const auto order = length_order(g);

  std::vector<char> taken(h.num_edges(), 0);
  std::size_t remaining = h.num_edges();
  std::vector<std::size_t> live;
  live.reserve(order.size());
  for (std::size_t layer = 0; layer < lambda && remaining > 0; ++layer) {
    // Basis edges of hyperedges not claimed by earlier layers.
    live.clear();
    for (std::size_t e : order) {
      if (!taken[g.edge(e).origin]) live.push_back(e);
    }
    std::vector<ArcIndex> s;
    for (std::size_t e : greedy_over(g, live, k)) s.push_back(g.edge(e).origin);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    // Hyperedges without basis edges (size 1) are never needed by a spanner.
    if (s.empty()) break;
    for (ArcIndex f : s) taken[f] = 1;
    remaining -= s.size();
    b.layers.push_back(std::move(s));
  }
  return b;
}

// --- effective resistance --------------------------------------------------

Eigen::MatrixXd laplacian(const WeightedMultigraph& g) {
  const auto n = static_cast<Eigen::Index>(g.num_vertices());
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n, n);
  for (const auto& e : g.edges()) {
    l(e.u, e.u) += e.weight;
    l(e.v, e.v) += e.weight;
    l(e.u, e.v) -= e.weight;
    l(e.v, e.u) -= e.weight;
  }
  return l;
}

double quadratic_form(const WeightedMultigraph& g, std::span<const double> x) {
  if (x.size() != g.num_vertices()) {
    throw std::invalid_argument("vector length does not match n");
  }
  double s = 0.0;
  for (const auto& e : g.edges()) {
    const double d = x[e.u] - x[e.v];
    s += e.weight * d * d;
  }
  return s;
}

double effective_resistance(const WeightedMultigraph& g, VertexId u, VertexId v) {
  const std::size_t n = g.num_vertices();
  if (u >= n || v >= n) throw std::invalid_argument("vertex out of range");
  if (u == v) return 0.0;
  std::size_t count = 0;
  const auto comp = components(g, count);
  if (comp[u] != comp[v]) return kInf;

  // Grounded Laplacian on u's component with u removed.
  std::vector<int> local(n, -1);
  Eigen::Index size = 0;
  for (std::size_t x = 0; x < n; ++x) {
    if (comp[x] == comp[u] && x != u) local[x] = static_cast<int>(size++);
  }
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(size, size);
  for (const auto& e : g.edges()) {
    if (comp[e.u] != comp[u]) continue;
    const int a = local[e.u], b = local[e.v];
    if (a >= 0) l(a, a) += e.weight;
    if (b >= 0) l(b, b) += e.weight;
    if (a >= 0 && b >= 0) {
      l(a, b) -= e.weight;
      l(b, a) -= e.weight;
    }
  }
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(size);
  rhs(local[v]) = 1.0;
  const Eigen::LDLT<Eigen::MatrixXd> ldlt(l);
  const Eigen::VectorXd sol = ldlt.solve(rhs);
  const double residual = (l * sol - rhs).norm() / rhs.norm();
  if (!(residual <= 1e-9)) {
    throw std::runtime_error("effective_resistance: residual " +
                             std::to_string(residual) + " above 1e-9");
  }
  return sol(local[v]);
}

ResistanceOracle::ResistanceOracle(const WeightedMultigraph& g) {
  const std::size_t n = g.num_vertices();
  component_ = components(g, num_components_);
  local_.assign(n, -1);
  std::vector<Eigen::Index> sizes(num_components_, 0);
  for (std::size_t x = 0; x < n; ++x) {
    local_[x] = static_cast<int>(sizes[component_[x]]++);
  }
  std::vector<Eigen::MatrixXd> lap(num_components_);
  for (std::size_t c = 0; c < num_components_; ++c) {
    lap[c] = Eigen::MatrixXd::Zero(sizes[c], sizes[c]);
  }
  for (const auto& e : g.edges()) {
    auto& l = lap[component_[e.u]];
    const int a = local_[e.u], b = local_[e.v];
    l(a, a) += e.weight;
    l(b, b) += e.weight;
    l(a, b) -= e.weight;
    l(b, a) -= e.weight;
  }
  pinv_.resize(num_components_);
  for (std::size_t c = 0; c < num_components_; ++c) {
    const Eigen::Index s = sizes[c];
    // Connected component: L^+ = (L + J/s)^{-1} - J/s.
    const Eigen::MatrixXd j = Eigen::MatrixXd::Constant(s, s, 1.0 / static_cast<double>(s));
    const Eigen::MatrixXd shifted = lap[c] + j;
    const Eigen::LDLT<Eigen::MatrixXd> ldlt(shifted);
    pinv_[c] = ldlt.solve(Eigen::MatrixXd::Identity(s, s)) - j;
  }
}

double ResistanceOracle::operator()(VertexId u, VertexId v) const {
  if (u >= component_.size() || v >= component_.size()) {
    throw std::invalid_argument("vertex out of range");
  }
  if (u == v) return 0.0;
  if (component_[u] != component_[v]) return kInf;
  const auto& p = pinv_[component_[u]];
  const int a = local_[u], b = local_[v];
  return p(a, a) + p(b, b) - 2.0 * p(a, b);
}

}  // namespace hgsparse
