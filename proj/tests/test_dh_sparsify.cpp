#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "hgsparse/dh_sparsify.hpp"
#include "hgsparse/instances.hpp"
#include "hgsparse/verify.hpp"

using namespace hgsparse;

namespace {

SparsifyConfig practical(std::uint64_t lambda, std::uint64_t seed) {
  SparsifyConfig c;
  c.mode = Mode::practical;
  c.lambda_override = lambda;
  c.seed = seed;
  return c;
}

}  // namespace

TEST_CASE("round epsilon") {
  const double m_star = 81.0;  // m_i / m* = (4/3)^4 at m_i = 256
  CHECK(round_epsilon(256, m_star, 0.64) == doctest::Approx(0.01).epsilon(1e-12));
  CHECK(round_epsilon(4, 3.0, 0.5) == doctest::Approx(0.125).epsilon(1e-12));
  CHECK_THROWS_AS(round_epsilon(10, 10.0, 0.5), std::invalid_argument);
}

TEST_CASE("round lambda") {
  const SparsifyConfig c;
  CHECK(dh_round_lambda(256, 0.5, c) == 2048);
  CHECK(dh_round_lambda(256, 0.5, practical(7, 0)) == 7);
  const ScheduleStep s = dh_schedule(256, 81.0, 0.64, c);
  CHECK(s.eps_i == doctest::Approx(0.01).epsilon(1e-12));
  CHECK(s.lambda_i == static_cast<std::uint64_t>(std::ceil(512.0 / (s.eps_i * s.eps_i))));
}

TEST_CASE("max rounds") {
  CHECK(max_rounds(256, 81.0) == 4);
  CHECK(max_rounds(10, 20.0) <= 0);
}

TEST_CASE("config validation") {
  SparsifyConfig c;
  c.lambda_override = 5;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c.mode = Mode::practical;
  CHECK_NOTHROW(c.validate());
  c.lambda_override = 0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  CHECK(parse_mode("practical") == Mode::practical);
  CHECK_THROWS_AS(parse_mode("fast"), std::invalid_argument);
}

TEST_CASE("onestep with lambda >= m returns the input") {
  const auto h = gen_random_directed(8, 50, 4, 1.0, 3.0, 1);
  const auto out = dh_onestep(h, 50, CoinStream(9, 0));
  CHECK(out.graph == h);
  CHECK(out.eligible == 0);
}

TEST_CASE("onestep weights are kept or doubled") {
  const auto h = gen_random_directed(8, 400, 4, 1.0, 3.0, 2);
  const auto out = dh_onestep(h, 1, CoinStream(5, 0));
  REQUIRE(out.source.size() == out.graph.num_arcs());
  for (ArcIndex e = 0; e < out.graph.num_arcs(); ++e) {
    const double z = h.weight(out.source[e]);
    CHECK(out.graph.weight(e) == (out.doubled[e] ? 2.0 * z : z));
  }
  CHECK(out.graph.num_arcs() == out.coreset_size + out.sampled);
}

TEST_CASE("onestep on 10000 parallel arcs") {
  DirectedHypergraph h(2);
  for (int i = 0; i < 10000; ++i) {
    h.add_arc(std::vector<VertexId>{0}, std::vector<VertexId>{1}, 1.0);
  }
  const auto a = dh_onestep(h, 1, CoinStream(2024, 0));
  const auto b = dh_onestep(h, 1, CoinStream(2024, 0));
  CHECK(a.coreset_size == 1);
  CHECK(a.graph.num_arcs() == 1 + a.sampled);
  CHECK(a.graph == b.graph);
  CHECK(a.graph.num_arcs() == 4981);
}

TEST_CASE("theory mode leaves small inputs alone") {
  const auto h = gen_random_directed(10, 300, 4, 1.0, 3.0, 4);
  const auto r = dh_sparsify(h, 0.5, SparsifyConfig{});
  CHECK(r.graph == h);
  CHECK(r.report.i_end == 0);
  CHECK(r.report.iterations.empty());
}

TEST_CASE("practical mode shrinks and tracks lineage") {
  const auto h = gen_random_directed(8, 3000, 4, 1.0, 3.0, 5);
  const auto r = dh_sparsify(h, 0.5, practical(4, 11));
  CHECK(r.graph.num_arcs() < h.num_arcs());
  CHECK(r.report.m_star == 4.0 * 64.0);
  REQUIRE(r.report.i_end >= 1);
  for (const auto& it : r.report.iterations) {
    CHECK(it.m_out < it.m_in);
    CHECK(it.m_out == it.kept + it.sampled);
  }
  for (ArcIndex e = 0; e < r.graph.num_arcs(); ++e) {
    CHECK(r.graph.weight(e) == std::ldexp(h.weight(r.origin[e]), static_cast<int>(r.doublings[e])));
    CHECK(r.doublings[e] <= r.report.i_end);
  }
  // same seed, same output
  CHECK(dh_sparsify(h, 0.5, practical(4, 11)).graph == r.graph);
}

TEST_CASE("sparsify rejects bad eps") {
  const auto h = gen_random_directed(4, 10, 3, 1.0, 1.0, 0);
  CHECK_THROWS_AS(dh_sparsify(h, 0.0, SparsifyConfig{}), std::invalid_argument);
  CHECK_THROWS_AS(dh_sparsify(h, 1.0, SparsifyConfig{}), std::invalid_argument);
}

TEST_CASE("critical pair") {
  DirectedHypergraph h(3);
  h.add_arc(std::vector<VertexId>{0}, std::vector<VertexId>{1}, 1.0);
  h.add_arc(std::vector<VertexId>{0, 1}, std::vector<VertexId>{2}, 1.0);
  CHECK(critical_pair(h.arc(0), std::vector<double>{0.3, 0.9, 0.0}) == VertexPair{0, 1});
  CHECK(critical_pair(h.arc(1), std::vector<double>{3.0, 5.0, 1.0}) == VertexPair{1, 2});
  CHECK(critical_pair(h.arc(1), std::vector<double>{2.0, 2.0, 2.0}) == VertexPair{0, 2});
}

TEST_CASE("energy class boundaries") {
  CHECK(energy_class(1.0, 1) == 0);
  CHECK(energy_class(0.5, 1) == 1);
  CHECK(energy_class(0.75, 1) == 1);
  CHECK(energy_class(0.49, 1) == 2);
  CHECK(energy_class(0.25, 2) == 1);
  CHECK_THROWS_AS(energy_class(0.0, 1), std::invalid_argument);
}

TEST_CASE("lone non-coreset arc with all the energy is class 0") {
  DirectedHypergraph h(2);
  h.add_arc(std::vector<VertexId>{0}, std::vector<VertexId>{1}, 1.0);
  const Coreset empty{};
  const auto p = energy_partition(h, empty, std::vector<double>{1.0, 0.0}, 1);
  REQUIRE(p.classes.count(0) == 1);
  CHECK(p.classes.at(0) == std::vector<ArcIndex>{0});
  CHECK_FALSE(p.warnings.empty());
  CHECK_FALSE(p.critical_pair_bound_holds());
}

TEST_CASE("energy partition covers positive-energy arcs disjointly") {
  const auto h = gen_random_directed(10, 400, 4, 0.5, 4.0, 6);
  const std::size_t lambda = 2;
  const Coreset c = coreset_finder(h, lambda);
  const auto x = probe_vector(10, 77, 0, ProbeKind::gaussian);
  const auto p = energy_partition(h, c, x, lambda);
  std::vector<int> seen(h.num_arcs(), 0);
  for (const auto& [i, arcs] : p.classes) {
    for (ArcIndex f : arcs) ++seen[f];
  }
  for (ArcIndex f = 0; f < h.num_arcs(); ++f) {
    const bool positive = !c.contains(f) && arc_energy(h.arc(f), x) > 0.0;
    CHECK(seen[f] == (positive ? 1 : 0));
  }
  CHECK(p.critical_pair_bound_holds());
  CHECK(p.warnings.empty());
}

TEST_CASE("practical output is sandwiched at its measured cut error") {
  const auto h = gen_random_directed(10, 3000, 3, 0.5, 5.0, 21);
  SparsifyConfig cfg;
  cfg.mode = Mode::practical;
  cfg.lambda_override = 2;
  cfg.seed = 4;
  const auto res = dh_sparsify(h, 0.5, cfg);
  REQUIRE(res.graph.num_arcs() < h.num_arcs());
  const auto probe = exhaustive_cut_check(h, res.graph, 1.0);
  const double eps_hat = probe.worst_error;
  CHECK(std::isfinite(eps_hat));
  CHECK(exhaustive_cut_check(h, res.graph, eps_hat).pass);
  if (eps_hat > 0.0) CHECK_FALSE(exhaustive_cut_check(h, res.graph, 0.99 * eps_hat).pass);
}
