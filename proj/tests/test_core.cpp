#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "hgsparse/core.hpp"

using namespace hgsparse;

namespace {

DirectedHypergraph one_arc(std::vector<VertexId> t, std::vector<VertexId> h,
                           double w, std::size_t n) {
  DirectedHypergraph g(n);
  g.add_arc(t, h, w);
  return g;
}

}  // namespace

TEST_CASE("arc energy") {
  const DirectedHyperarc f{{0}, {1}, 1.0};
  const std::vector<double> fwd{1.0, 0.0}, rev{0.0, 1.0};
  CHECK(arc_energy(f, fwd) == 1.0);
  CHECK(arc_energy(f, rev) == 0.0);

  const DirectedHyperarc g{{0, 1}, {2}, 2.0};
  const std::vector<double> x{3.0, 5.0, 1.0};
  CHECK(arc_energy(g, x) == 32.0);

  // brute force over the biclique
  double best = 0.0;
  for (VertexId u : g.tail) {
    for (VertexId v : g.head) {
      const double d = x[u] - x[v] > 0 ? x[u] - x[v] : 0.0;
      best = std::max(best, g.weight * d * d);
    }
  }
  CHECK(arc_energy(g, x) == best);
}

TEST_CASE("directed energy") {
  auto h = one_arc({0, 1}, {2}, 2.0, 3);
  h.add_arc(std::vector<VertexId>{2}, std::vector<VertexId>{0}, 1.0);
  const std::vector<double> zero(3, 0.0);
  CHECK(directed_energy(h, zero) == 0.0);
  const std::vector<double> x{3.0, 5.0, 1.0};
  CHECK(directed_energy(h, x) == 32.0);
  const std::vector<ArcIndex> second{1};
  CHECK(directed_energy(h, x, second) == 0.0);
  const std::vector<double> bad(2, 0.0);
  CHECK_THROWS_AS(directed_energy(h, bad), std::invalid_argument);
}

TEST_CASE("undirected energy is symmetric") {
  UndirectedHypergraph h(2);
  h.add_edge(std::vector<VertexId>{0, 1}, 1.0);
  CHECK(undirected_energy(h, std::vector<double>{0.0, 1.0}) == 1.0);
  CHECK(undirected_energy(h, std::vector<double>{1.0, 0.0}) == 1.0);

  UndirectedHypergraph t(3);
  t.add_edge(std::vector<VertexId>{0, 1, 2}, 3.0);
  CHECK(undirected_energy(t, std::vector<double>{0.0, 2.0, 5.0}) == 75.0);
}

TEST_CASE("cut value") {
  const auto h = one_arc({0}, {1}, 1.0, 2);
  CHECK(cut_value(h, std::vector<VertexId>{0}) == 1.0);
  CHECK(cut_value(h, std::vector<VertexId>{1}) == 0.0);
  CHECK(cut_value(h, std::vector<VertexId>{}) == 0.0);
  CHECK(cut_value(h, std::vector<VertexId>{0, 1}) == 0.0);
}

TEST_CASE("biclique") {
  const DirectedHyperarc a{{0}, {1}, 1.0};
  CHECK(biclique(a) == std::vector<VertexPair>{{0, 1}});

  const DirectedHyperarc b{{0, 1}, {1, 2}, 1.0};
  CHECK(biclique(b) == std::vector<VertexPair>{{0, 1}, {0, 2}, {1, 1}, {1, 2}});

  DirectedHypergraph h(3);
  h.add_arc(std::vector<VertexId>{0}, std::vector<VertexId>{1}, 1.0);
  h.add_arc(std::vector<VertexId>{0}, std::vector<VertexId>{2}, 1.0);
  const std::vector<ArcIndex> both{0, 1};
  CHECK(biclique(h, both) == std::vector<VertexPair>{{0, 1}, {0, 2}});
}

TEST_CASE("clique pairs") {
  UndirectedHypergraph h(4);
  h.add_edge(std::vector<VertexId>{2, 0, 3}, 1.0);
  CHECK(clique(h.edge(0)) == std::vector<VertexPair>{{0, 2}, {0, 3}, {2, 3}});
}

TEST_CASE("rank") {
  CHECK(rank(one_arc({0, 1}, {2}, 1.0, 3)) == 3);
  UndirectedHypergraph u(4);
  u.add_edge(std::vector<VertexId>{0, 1, 2, 3}, 1.0);
  CHECK(rank(u) == 4);
  // |t| + |h|, even when tail and head share a vertex
  CHECK(rank(one_arc({0, 1}, {1, 2}, 1.0, 3)) == 4);
}

TEST_CASE("canonical storage and validation") {
  DirectedHypergraph h(4);
  h.add_arc(std::vector<VertexId>{3, 1, 3}, std::vector<VertexId>{2, 0}, 1.5);
  const ArcRef a = h.arc(0);
  CHECK(std::vector<VertexId>(a.tail.begin(), a.tail.end()) == std::vector<VertexId>{1, 3});
  CHECK(std::vector<VertexId>(a.head.begin(), a.head.end()) == std::vector<VertexId>{0, 2});

  const std::vector<VertexId> ok{0}, empty{}, far{4};
  CHECK_THROWS_AS(h.add_arc(empty, ok, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(h.add_arc(ok, far, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(h.add_arc(ok, ok, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(h.add_arc(ok, ok, -1.0), std::invalid_argument);
  // a failed add leaves the hypergraph untouched
  CHECK(h.num_arcs() == 1);
  CHECK(h.arc(0).weight == 1.5);

  UndirectedHypergraph u(2);
  CHECK_THROWS_AS(u.add_edge(empty, 1.0), std::invalid_argument);
}

TEST_CASE("subgraph keeps order and can reweight") {
  DirectedHypergraph h(3);
  for (VertexId v = 1; v < 3; ++v) {
    h.add_arc(std::vector<VertexId>{0}, std::vector<VertexId>{v}, static_cast<double>(v));
  }
  const std::vector<ArcIndex> idx{1, 0};
  const auto s = h.subgraph(idx);
  CHECK(s.num_arcs() == 2);
  CHECK(s.weight(0) == 2.0);
  const std::vector<double> w{7.0, 8.0};
  CHECK(h.subgraph(idx, w).weight(1) == 8.0);
  CHECK(total_weight(h) == 3.0);
}
