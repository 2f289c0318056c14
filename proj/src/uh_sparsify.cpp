#include "hgsparse/uh_sparsify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hgsparse {

namespace {

void check_eps(double eps) {
  if (!(eps > 0.0 && eps < 1.0)) {
    throw std::invalid_argument("eps must lie in (0, 1)");
  }
}

void check_band(const UndirectedHypergraph& h, std::size_t r) {
  if (r < 1) throw std::invalid_argument("r must be >= 1");
  for (ArcIndex f = 0; f < h.num_edges(); ++f) {
    const std::size_t s = h.edge_size(f);
    // |f| in (r/2, r]  <=>  2|f| > r and |f| <= r.
    if (2 * s <= r || s > r) {
      throw std::invalid_argument("hyperedge " + std::to_string(f) + " has size " +
                                  std::to_string(s) + " outside (" +
                                  std::to_string(r) + "/2, " + std::to_string(r) + "]");
    }
  }
}

}  // namespace

void UhConfig::validate() const {
  if (!(c_spanner_size > 0.0) || !(c_sampling > 0.0) || !(cc > 0.0)) {
    throw std::invalid_argument("constants must be positive");
  }
  if (lambda_override) {
    if (mode == Mode::theory) {
      throw std::invalid_argument("lambda override is not allowed in theory mode");
    }
    if (*lambda_override == 0) throw std::invalid_argument("lambda override must be >= 1");
  }
  if (stretch != 0.0 && !(stretch >= 1.0)) {
    throw std::invalid_argument("stretch must be >= 1");
  }
}

double uh_target_size(std::size_t n, std::size_t r, double eps,
                      const UhConfig& config) {
  check_eps(eps);
  const double nn = static_cast<double>(n);
  if (config.mode == Mode::practical && config.lambda_override) {
    return config.c_spanner_size * static_cast<double>(*config.lambda_override) * nn;
  }
  const double rr = static_cast<double>(r);
  const double l = nn > 1.0 ? std::log2(nn) : 0.0;
  return nn * rr * rr * rr / (eps * eps) * l * l;
}

std::uint64_t uh_round_lambda(std::size_t m_i, std::size_t r, double eps_i,
                              const UhConfig& config) {
  if (config.mode == Mode::practical && config.lambda_override) {
    return *config.lambda_override;
  }
  const double rr = static_cast<double>(r);
  const double l = std::log2(static_cast<double>(m_i));
  return std::max<std::uint64_t>(
      1, ceil_to_u64(8.0 * config.c_sampling * rr * rr * rr * l * l / (eps_i * eps_i)));
}

UndirectedOnestepResult uh_onestep(const UndirectedHypergraph& h,
                                   std::uint64_t layers, const UhConfig& config,
                                   const CoinStream& coins,
                                   std::span<const std::uint64_t> ids) {
  if (layers < 1) throw std::invalid_argument("uh_onestep: lambda < 1");
  if (!ids.empty() && ids.size() != h.num_edges()) {
    throw std::invalid_argument("uh_onestep: one id per hyperedge required");
  }
  const std::size_t m = h.num_edges();
  UndirectedOnestepResult out;
  out.graph = UndirectedHypergraph(h.num_vertices());
  // More layers than hyperedges cannot matter; each layer takes at least one.
  const auto capped = static_cast<std::size_t>(std::min<std::uint64_t>(layers, m));
  out.bundle = spanner_bundle(h, capped, config.stretch_for(h.num_vertices()),
                              config.basis);

  std::vector<char> in_bundle(m, 0);
  for (const auto& layer : out.bundle.layers) {
    for (ArcIndex f : layer) in_bundle[f] = 1;
  }
  for (ArcIndex f = 0; f < m; ++f) {
    const EdgeRef e = h.edge(f);
    if (in_bundle[f]) {
      out.graph.add_edge(e.vertices, e.weight);
      out.source.push_back(f);
      out.doubled.push_back(0);
      continue;
    }
    ++out.eligible;
    if (coins.flip(ids.empty() ? f : ids[f])) {
      ++out.sampled;
      out.graph.add_edge(e.vertices, 2.0 * e.weight);
      out.source.push_back(f);
      out.doubled.push_back(1);
    }
  }
  return out;
}

UndirectedSparsifyResult uh_sparsify(const UndirectedHypergraph& h,
                                     std::size_t r, double eps,
                                     const UhConfig& config) {
  check_eps(eps);
  config.validate();
  check_band(h, r);

  UndirectedSparsifyResult res;
  res.graph = h;
  res.origin.resize(h.num_edges());
  std::iota(res.origin.begin(), res.origin.end(), ArcIndex{0});
  res.doublings.assign(h.num_edges(), 0);

  auto& rep = res.report;
  const std::size_t n = h.num_vertices();
  rep.m_star = uh_target_size(n, r, eps, config);
  rep.T = max_rounds(h.num_edges(), rep.m_star);

  std::size_t i = 0;
  while (static_cast<long long>(i) < rep.T) {
    const std::size_t m_i = res.graph.num_edges();
    const double mi = static_cast<double>(m_i);
    if (mi < config.cc * rep.m_star || !(mi > rep.m_star)) break;

    const double eps_i = round_epsilon(m_i, rep.m_star, eps);
    const std::uint64_t lambda_i = uh_round_lambda(m_i, r, eps_i, config);
    const std::uint64_t layers = lambda_i + config.fault_k;
    std::vector<std::uint64_t> ids(res.origin.begin(), res.origin.end());
    UndirectedOnestepResult one =
        uh_onestep(res.graph, layers, config, CoinStream(config.seed, i), ids);

    IterationRecord rec;
    rec.m_in = m_i;
    rec.eps_i = eps_i;
    rec.lambda_i = lambda_i;
    rec.kept = m_i - one.eligible;
    rec.eligible = one.eligible;
    rec.sampled = one.sampled;
    rec.m_out = one.graph.num_edges();
    if (config.check_soundness) {
      rec.max_sampling_ratio = max_sampling_ratio(res.graph, one.bundle.all(), r,
                                                  eps_i, config.c_sampling);
    }
    rep.iterations.push_back(rec);

    std::vector<ArcIndex> origin(one.source.size());
    std::vector<std::uint32_t> doublings(one.source.size());
    for (std::size_t k = 0; k < one.source.size(); ++k) {
      origin[k] = res.origin[one.source[k]];
      doublings[k] = res.doublings[one.source[k]] + (one.doubled[k] ? 1u : 0u);
    }
    res.graph = std::move(one.graph);
    res.origin = std::move(origin);
    res.doublings = std::move(doublings);
    ++i;
    if (one.eligible == 0) break;
  }
  rep.i_end = i;
  return res;
}

UndirectedSparsifyResult ft_uh_sparsify(const UndirectedHypergraph& h,
                                        std::size_t r, double eps,
                                        std::size_t k, UhConfig config) {
  config.fault_k = k;
  return uh_sparsify(h, r, eps, config);
}

std::size_t size_bucket(std::size_t edge_size) {
  if (edge_size == 0) throw std::invalid_argument("empty hyperedge");
  std::size_t i = 0;
  while ((std::size_t{1} << i) < edge_size) ++i;
  return i;
}

BucketSparsifyResult rank_bucket_sparsify(const UndirectedHypergraph& h,
                                          std::size_t r, double eps,
                                          const UhConfig& config) {
  check_eps(eps);
  if (rank(h) > r) throw std::invalid_argument("hypergraph rank exceeds r");
  const std::size_t top = r > 1 ? size_bucket(r) : 0;  // ceil(log2 r)

  std::vector<std::vector<ArcIndex>> members(top + 1);
  for (ArcIndex f = 0; f < h.num_edges(); ++f) {
    members[size_bucket(h.edge_size(f))].push_back(f);
  }

  BucketSparsifyResult out;
  out.graph = UndirectedHypergraph(h.num_vertices());
  auto append = [&out, &h](ArcIndex f, double w, std::uint32_t d) {
    out.graph.add_edge(h.edge(f).vertices, w);
    out.origin.push_back(f);
    out.doublings.push_back(d);
  };

  for (ArcIndex f : members[0]) append(f, h.weight(f), 0);

  for (std::size_t i = 1; i <= top; ++i) {
    if (members[i].empty()) continue;
    BucketRun run;
    run.index = i;
    run.eps = eps * std::sqrt(static_cast<double>(std::size_t{1} << (i - 1)) /
                              static_cast<double>(r));
    run.edges = members[i];
    UhConfig cfg = config;
    cfg.seed = derive_seed(config.seed, i);
    const UndirectedHypergraph sub = h.subgraph(run.edges);
    run.result = uh_sparsify(sub, std::size_t{1} << i, run.eps, cfg);
    const auto& g = run.result.graph;
    for (ArcIndex e = 0; e < g.num_edges(); ++e) {
      append(run.edges[run.result.origin[e]], g.weight(e), run.result.doublings[e]);
    }
    out.buckets.push_back(std::move(run));
  }
  return out;
}

double max_sampling_ratio(const UndirectedHypergraph& h,
                          std::span<const ArcIndex> bundle, std::size_t r,
                          double eps, double c_sampling) {
  std::vector<char> in_bundle(h.num_edges(), 0);
  for (ArcIndex f : bundle) in_bundle.at(f) = 1;
  const ResistanceOracle resistance(associated_graph(h));
  const double rr = static_cast<double>(r);
  const double n = static_cast<double>(h.num_vertices());
  const double scale = c_sampling * rr * rr * rr * rr * (n > 1 ? std::log2(n) : 0.0) /
                       (eps * eps);
  double best = 0.0;
  for (ArcIndex f = 0; f < h.num_edges(); ++f) {
    if (in_bundle[f]) continue;
    const EdgeRef e = h.edge(f);
    for (const VertexPair& p : clique(e)) {
      best = std::max(best, scale * e.weight * resistance(p.u, p.v));
    }
  }
  return best;
}

}  // namespace hgsparse
