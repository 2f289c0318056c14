#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hgsparse/instances.hpp"
#include "hgsparse/verify.hpp"

using namespace hgsparse;

namespace {

DirectedHypergraph scaled(const DirectedHypergraph& h, double s) {
  std::vector<ArcIndex> all(h.num_arcs());
  std::vector<double> w(h.num_arcs());
  for (ArcIndex f = 0; f < all.size(); ++f) {
    all[f] = f;
    w[f] = h.weight(f) * s;
  }
  return h.subgraph(all, w);
}

}  // namespace

TEST_CASE("probe of H against itself") {
  const auto h = gen_random_directed(10, 100, 4, 1.0, 3.0, 1);
  const auto r = spectral_probe(h, h, 200, 5);
  CHECK(r.max_over == 0.0);
  CHECK(r.max_under == 0.0);
  CHECK(r.used + r.skipped == 200);
  CHECK(r.ratios.size() == 200);
}

TEST_CASE("probe sees uniform scaling exactly") {
  const auto h = gen_random_directed(10, 100, 4, 1.0, 3.0, 1);
  const auto r = spectral_probe(h, scaled(h, 1.25), 100, 5);
  CHECK(r.max_over == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(r.max_under == 0.0);
}

TEST_CASE("probe maxima grow with the sample count") {
  const auto h = gen_random_directed(10, 300, 4, 1.0, 3.0, 2);
  const auto t = h.subgraph(std::vector<ArcIndex>{0, 1, 2, 3, 4, 5, 6, 7});
  double prev = 0.0;
  for (std::size_t n : {10, 50, 200}) {
    const auto r = spectral_probe(h, t, n, 3);
    CHECK(r.max_error() >= prev);
    prev = r.max_error();
  }
}

TEST_CASE("degenerate probes") {
  DirectedHypergraph h(2);
  h.add_arc(std::vector<VertexId>{0}, std::vector<VertexId>{1}, 1.0);
  // Boolean probes hit x_0 <= x_1 about three times in four
  const auto r = spectral_probe(h, h, 40, 1, ProbeKind::boolean);
  CHECK(r.skipped > 0);
  for (std::size_t p = 0; p < r.ratios.size(); ++p) {
    const auto x = probe_vector(2, 1, p, ProbeKind::boolean);
    CHECK(std::isnan(r.ratios[p]) == !(x[0] > x[1]));
  }
  const DirectedHypergraph empty(2);
  CHECK_THROWS_AS(spectral_probe(empty, empty, 10, 1), std::invalid_argument);
  CHECK_THROWS_AS(spectral_probe(h, h, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(spectral_probe(h, DirectedHypergraph(3), 5, 1), std::invalid_argument);
}

TEST_CASE("exhaustive cut check") {
  const auto h = gen_random_directed(8, 40, 4, 1.0, 3.0, 4);
  CHECK(exhaustive_cut_check(h, h, 0.0).pass);
  CHECK(exhaustive_cut_check(h, scaled(h, 1.1), 0.1 + 1e-9).pass);
  CHECK_FALSE(exhaustive_cut_check(h, scaled(h, 1.1), 0.09).pass);

  const DirectedHypergraph empty(8);
  const auto r = exhaustive_cut_check(h, empty, 0.5);
  CHECK_FALSE(r.pass);
  REQUIRE(r.has_failure);
  for (std::uint64_t m = 0; m < r.first_failure; ++m) {
    CHECK(energy(h, detail::mask_vector(8, m)) == 0.0);
  }
  CHECK(energy(h, detail::mask_vector(8, r.first_failure)) > 0.0);

  CHECK_THROWS_AS(exhaustive_cut_check(gen_lower_bound({9, 2}), gen_lower_bound({9, 2}), 0.1),
                  std::invalid_argument);
}

TEST_CASE("exhaustive scan on the lower-bound instance") {
  const LowerBoundParams p{8, 2};
  const auto h = gen_lower_bound(p);
  for (ArcIndex removed : {ArcIndex{0}, ArcIndex{77}}) {
    std::vector<ArcIndex> keep;
    for (ArcIndex f = 0; f < h.num_arcs(); ++f) {
      if (f != removed) keep.push_back(f);
    }
    const auto r = exhaustive_cut_check(h, h.subgraph(keep), p.eps());
    CHECK_FALSE(r.pass);
    CHECK(r.worst_error == 0.25);
    // the worst cut is x1 or xs of the removed arc
    const auto w = lower_bound_witness(h, p, removed);
    // ties between x1 and xs go to the smaller mask
    std::uint64_t x1 = std::uint64_t{1} << std::min(w.a, w.b);
    for (VertexId v = 8; v < 16; ++v) {
      if (v != w.head) x1 |= std::uint64_t{1} << v;
    }
    CHECK(r.worst_set == x1);
  }
}

TEST_CASE("Boolean probes never beat the exhaustive scan") {
  const auto h = gen_random_directed(8, 60, 4, 1.0, 3.0, 5);
  const auto t = h.subgraph(std::vector<ArcIndex>{0, 2, 4, 6, 8, 10, 12, 14, 16, 18, 20});
  const auto ex = exhaustive_cut_check(h, t, 0.0);
  const auto pr = spectral_probe(h, t, 300, 9, ProbeKind::boolean);
  CHECK(pr.max_error() <= ex.worst_error);
}

TEST_CASE("stretch check") {
  WeightedMultigraph tree(4);
  tree.add_edge(0, 1, 1.0);
  tree.add_edge(1, 2, 2.0);
  tree.add_edge(2, 3, 1.0);
  const std::vector<std::size_t> all{0, 1, 2};
  CHECK(stretch_check(tree, all, 1.0).pass);
  const std::vector<std::size_t> no_bridge{0, 2};
  const auto r = stretch_check(tree, no_bridge, 10.0);
  CHECK_FALSE(r.pass);
  CHECK(r.worst == 1);
  CHECK(std::isinf(r.worst_ratio));
  CHECK_THROWS_AS(stretch_check(tree, all, 0.5), std::invalid_argument);
}

TEST_CASE("hyper stretch check") {
  UndirectedHypergraph h(4);
  h.add_edge(std::vector<VertexId>{0, 1, 2}, 1.0);
  h.add_edge(std::vector<VertexId>{2, 3}, 1.0);
  h.add_edge(std::vector<VertexId>{0, 3}, 0.5);
  const std::vector<ArcIndex> all{0, 1, 2};
  CHECK(hyper_stretch_check(h, all, 1.0).pass);
  // {0,3} at weight 0.5 has a two-hop hyperpath of length 2 = 1/0.5
  const std::vector<ArcIndex> two{0, 1};
  CHECK(hyper_stretch_check(h, two, 1.0).pass);
  const std::vector<ArcIndex> one{0};
  CHECK_FALSE(hyper_stretch_check(h, one, 100.0).pass);
}

TEST_CASE("summary") {
  const std::vector<double> v{1.0, 2.0, 3.0, 4.0};
  const Summary s = summarize(v);
  CHECK(s.mean == 2.5);
  CHECK(s.min == 1.0);
  CHECK(s.max == 4.0);
  CHECK(s.stddev == doctest::Approx(std::sqrt(5.0 / 3.0)));
}
