#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "hgsparse/instances.hpp"
#include "hgsparse/random.hpp"
#include "hgsparse/spanner.hpp"
#include "hgsparse/verify.hpp"

using namespace hgsparse;

namespace {

WeightedMultigraph triangle() {
  WeightedMultigraph g(3);
  g.add_edge(0, 1, 1.0);
  g.add_edge(1, 2, 1.0);
  g.add_edge(0, 2, 1.0);
  return g;
}

UndirectedHypergraph single(std::vector<VertexId> vs, double w, std::size_t n) {
  UndirectedHypergraph h(n);
  h.add_edge(vs, w);
  return h;
}

}  // namespace

TEST_CASE("associated and star graphs") {
  auto h = single({0, 1, 2}, 5.0, 4);
  const auto g = associated_graph(h);
  CHECK(g.num_edges() == 3);
  for (const auto& e : g.edges()) {
    CHECK(e.weight == 5.0);
    CHECK(e.origin == 0);
  }
  h.add_edge(std::vector<VertexId>{0, 1}, 1.0);
  h.add_edge(std::vector<VertexId>{0, 1, 2, 3}, 1.0);
  CHECK(associated_graph(h).num_edges() == 3 + 1 + 6);
  const auto s = star_graph(h);
  CHECK(s.num_edges() == 2 + 1 + 3);
  CHECK(s.edge(0).u == 0);
  CHECK(s.edge(0).v == 1);
  CHECK(s.edge(1).v == 2);

  // the star of a hyperedge is a 2-spanner of its clique
  const auto big = single({0, 1, 2, 3}, 2.0, 4);
  WeightedMultigraph both = associated_graph(big);
  const std::size_t k = both.num_edges();
  const auto star = star_graph(big);
  for (const auto& e : star.edges()) both.add_edge(e.u, e.v, e.weight);
  std::vector<std::size_t> star_idx;
  for (std::size_t i = k; i < both.num_edges(); ++i) star_idx.push_back(i);
  CHECK(stretch_check(both, star_idx, 2.0).pass);
  CHECK_FALSE(stretch_check(both, star_idx, 1.5).pass);
}

TEST_CASE("self-loops rejected") {
  WeightedMultigraph g(2);
  CHECK_THROWS_AS(g.add_edge(1, 1, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 2, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 1, 0.0), std::invalid_argument);
}

TEST_CASE("greedy spanner small cases") {
  WeightedMultigraph path(4);
  path.add_edge(0, 1, 1.0);
  path.add_edge(1, 2, 3.0);
  path.add_edge(1, 3, 0.5);
  CHECK(greedy_spanner(path, 100.0).size() == 3);

  CHECK(greedy_spanner(triangle(), 2.0).size() == 2);
  CHECK(greedy_spanner(triangle(), 1.5).size() == 3);

  WeightedMultigraph par(2);
  par.add_edge(0, 1, 1.0);
  par.add_edge(0, 1, 3.0);
  CHECK(greedy_spanner(par, 3.0) == std::vector<std::size_t>{1});
  CHECK(greedy_spanner(par, 1.0) == std::vector<std::size_t>{1});

  CHECK_THROWS_AS(greedy_spanner(triangle(), 0.5), std::invalid_argument);
}

TEST_CASE("greedy spanner passes the stretch checker") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto rng = make_engine(seed);
    std::uniform_int_distribution<VertexId> pick(0, 29);
    std::uniform_real_distribution<double> w(0.1, 10.0);
    WeightedMultigraph g(30);
    while (g.num_edges() < 200) {
      const VertexId u = pick(rng), v = pick(rng);
      if (u != v) g.add_edge(u, v, w(rng));
    }
    for (double k : {1.0, 3.0, 5.0}) {
      const auto s = greedy_spanner(g, k);
      CHECK(stretch_check(g, s, k).pass);
    }
  }
}

TEST_CASE("hyperspanner cases") {
  const auto one = single({0, 1, 2}, 1.0, 3);
  CHECK(hyperspanner(one, 2.0) == std::vector<ArcIndex>{0});

  auto twin = single({0, 1, 2}, 1.0, 3);
  twin.add_edge(std::vector<VertexId>{0, 1, 2}, 1.0);
  CHECK(hyperspanner(twin, 1.0).size() == 1);
  CHECK(hyperspanner(twin, 1.0, SpannerBasis::clique).size() == 1);

  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto h = gen_random_undirected(20, 150, 5, 0.5, 4.0, seed);
    const double k = 3.0;
    CHECK(hyper_stretch_check(h, hyperspanner(h, k), 2.0 * k).pass);
    CHECK(hyper_stretch_check(h, hyperspanner(h, k, SpannerBasis::clique), k).pass);
  }
}

TEST_CASE("spanner bundle") {
  const auto h = gen_random_undirected(12, 120, 4, 1.0, 2.0, 3);
  const auto b1 = spanner_bundle(h, 1, 2.0);
  REQUIRE(b1.layers.size() == 1);
  CHECK(b1.layers[0] == hyperspanner(h, 2.0));
  CHECK(b1.stretch == 4.0);

  const auto b = spanner_bundle(h, 4, 2.0);
  std::vector<int> count(h.num_edges(), 0);
  for (const auto& layer : b.layers) {
    for (ArcIndex f : layer) ++count[f];
  }
  for (int c : count) CHECK(c <= 1);

  // each layer spans whatever the earlier layers left behind
  std::vector<ArcIndex> rest(h.num_edges());
  for (ArcIndex f = 0; f < rest.size(); ++f) rest[f] = f;
  for (const auto& layer : b.layers) {
    const auto sub = h.subgraph(rest);
    std::vector<ArcIndex> local;
    for (ArcIndex f : layer) {
      local.push_back(static_cast<ArcIndex>(std::find(rest.begin(), rest.end(), f) - rest.begin()));
    }
    CHECK(hyper_stretch_check(sub, local, b.stretch).pass);
    std::vector<ArcIndex> next;
    for (ArcIndex f : rest) {
      if (!std::binary_search(layer.begin(), layer.end(), f)) next.push_back(f);
    }
    rest = next;
  }

  const auto full = spanner_bundle(h, h.num_edges(), 2.0);
  CHECK(full.all().size() == h.num_edges());
}

TEST_CASE("effective resistance closed forms") {
  WeightedMultigraph e(2);
  e.add_edge(0, 1, 4.0);
  CHECK(effective_resistance(e, 0, 1) == doctest::Approx(0.25).epsilon(1e-12));

  WeightedMultigraph p(3);
  p.add_edge(0, 1, 1.0);
  p.add_edge(1, 2, 1.0);
  CHECK(effective_resistance(p, 0, 2) == doctest::Approx(2.0).epsilon(1e-12));

  const auto t = triangle();
  const ResistanceOracle r(t);
  for (VertexId u = 0; u < 3; ++u) {
    for (VertexId v = u + 1; v < 3; ++v) {
      CHECK(std::abs(effective_resistance(t, u, v) - 2.0 / 3.0) < 1e-9);
      CHECK(std::abs(r(u, v) - 2.0 / 3.0) < 1e-9);
    }
  }
  CHECK(effective_resistance(t, 1, 1) == 0.0);

  WeightedMultigraph split(4);
  split.add_edge(0, 1, 1.0);
  split.add_edge(2, 3, 1.0);
  CHECK(std::isinf(effective_resistance(split, 0, 3)));
  const ResistanceOracle rs(split);
  CHECK(rs.num_components() == 2);
  CHECK(std::isinf(rs(1, 2)));
  CHECK(rs(2, 3) == doctest::Approx(1.0));
}

TEST_CASE("oracle agrees with direct solves") {
  const auto h = gen_random_undirected(15, 40, 4, 0.5, 3.0, 8);
  const auto g = associated_graph(h);
  const ResistanceOracle r(g);
  for (VertexId u = 0; u < 15; ++u) {
    for (VertexId v = 0; v < 15; ++v) {
      const double a = effective_resistance(g, u, v);
      const double b = r(u, v);
      if (std::isinf(a)) {
        CHECK(std::isinf(b));
      } else {
        CHECK(std::abs(a - b) <= 1e-9 * std::max(1.0, a));
      }
    }
  }
}

TEST_CASE("laplacian quadratic form") {
  const auto t = triangle();
  const std::vector<double> x{1.0, 0.0, 0.0};
  CHECK(quadratic_form(t, x) == 2.0);
  const auto l = laplacian(t);
  CHECK(l(0, 0) == 2.0);
  CHECK(l(0, 1) == -1.0);
}

TEST_CASE("default stretch") {
  CHECK(default_stretch(1) == 2.0);
  CHECK(default_stretch(4) == 2.0);
  CHECK(default_stretch(16) == 4.0);
  CHECK(default_stretch(17) == 5.0);
}
