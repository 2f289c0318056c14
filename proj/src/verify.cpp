#include "hgsparse/verify.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <utility>

namespace hgsparse {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Arc {
  std::size_t to;
  double len;
};
using Adjacency = std::vector<std::vector<Arc>>;

std::vector<double> dijkstra(const Adjacency& adj, std::size_t s) {
  std::vector<double> d(adj.size(), kInf);
  using Item = std::pair<double, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  d[s] = 0.0;
  pq.push({0.0, s});
  while (!pq.empty()) {
    auto [du, x] = pq.top();
    pq.pop();
    if (du > d[x]) continue;
    for (const Arc& a : adj[x]) {
      const double nd = du + a.len;
      if (nd < d[a.to]) {
        d[a.to] = nd;
        pq.push({nd, a.to});
      }
    }
  }
  return d;
}

void record(StretchResult& r, double ratio, double k, std::size_t idx,
            VertexId u, VertexId v) {
  ++r.checked;
  if (ratio > r.worst_ratio || r.checked == 1) {
    r.worst_ratio = ratio;
    r.worst = idx;
    r.worst_u = u;
    r.worst_v = v;
  }
  if (!(ratio <= k + kRatioSlack * std::max(1.0, k))) r.pass = false;
}

}  // namespace

std::vector<double> probe_vector(std::size_t n, std::uint64_t seed,
                                 std::size_t p, ProbeKind kind) {
  auto rng = make_engine(derive_seed(seed, p));
  std::vector<double> x(n);
  if (kind == ProbeKind::gaussian) {
    std::normal_distribution<double> g(0.0, 1.0);
    for (double& v : x) v = g(rng);
  } else {
    std::bernoulli_distribution b(0.5);
    for (double& v : x) v = b(rng) ? 1.0 : 0.0;
  }
  return x;
}

namespace detail {
std::vector<double> mask_vector(std::size_t n, std::uint64_t mask) {
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = static_cast<double>((mask >> i) & 1u);
  return x;
}
}  // namespace detail

std::vector<VertexId> CutCheckResult::worst_vertices() const {
  std::vector<VertexId> out;
  for (VertexId i = 0; i < 64; ++i) {
    if ((worst_set >> i) & 1u) out.push_back(i);
  }
  return out;
}

StretchResult stretch_check(const WeightedMultigraph& g,
                            std::span<const std::size_t> spanner_edges, double k) {
  if (!(k >= 1.0)) throw std::invalid_argument("stretch_check: k < 1");
  Adjacency adj(g.num_vertices());
  for (std::size_t e : spanner_edges) {
    if (e >= g.num_edges()) throw std::invalid_argument("stretch_check: index out of range");
    const WeightedEdge& we = g.edge(e);
    adj[we.u].push_back({we.v, 1.0 / we.weight});
    adj[we.v].push_back({we.u, 1.0 / we.weight});
  }
  StretchResult r;
  std::vector<std::vector<double>> dist(g.num_vertices());
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    const WeightedEdge& we = g.edge(e);
    if (dist[we.u].empty()) dist[we.u] = dijkstra(adj, we.u);
    record(r, dist[we.u][we.v] * we.weight, k, e, we.u, we.v);
  }
  return r;
}

StretchResult hyper_stretch_check(const UndirectedHypergraph& h,
                                  std::span<const ArcIndex> spanner_edges,
                                  double k) {
  if (!(k >= 1.0)) throw std::invalid_argument("hyper_stretch_check: k < 1");
  // Incidence expansion: vertex nodes [0, n), one node per spanner hyperedge.
  // Entering hyperedge f costs 1/z_f, leaving it is free.
  const std::size_t n = h.num_vertices();
  Adjacency adj(n + spanner_edges.size());
  for (std::size_t s = 0; s < spanner_edges.size(); ++s) {
    const ArcIndex f = spanner_edges[s];
    if (f >= h.num_edges()) throw std::invalid_argument("hyper_stretch_check: index out of range");
    const EdgeRef e = h.edge(f);
    for (VertexId v : e.vertices) {
      adj[v].push_back({n + s, 1.0 / e.weight});
      adj[n + s].push_back({v, 0.0});
    }
  }
  StretchResult r;
  std::vector<std::vector<double>> dist(n);
  for (ArcIndex f = 0; f < h.num_edges(); ++f) {
    const EdgeRef e = h.edge(f);
    for (const VertexPair& p : clique(e)) {
      if (dist[p.u].empty()) dist[p.u] = dijkstra(adj, p.u);
      record(r, dist[p.u][p.v] * e.weight, k, f, p.u, p.v);
    }
  }
  return r;
}

Summary summarize(std::span<const double> values) {
  Summary s;
  s.count = values.size();
  if (values.empty()) return s;
  s.min = *std::min_element(values.begin(), values.end());
  s.max = *std::max_element(values.begin(), values.end());
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / static_cast<double>(s.count);
  if (s.count > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - s.mean) * (v - s.mean);
    s.stddev = std::sqrt(ss / static_cast<double>(s.count - 1));
  }
  return s;
}

}  // namespace hgsparse
