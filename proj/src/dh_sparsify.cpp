#include "hgsparse/dh_sparsify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace hgsparse {

namespace {

void check_eps(double eps) {
  if (!(eps > 0.0 && eps < 1.0)) {
    throw std::invalid_argument("eps must lie in (0, 1)");
  }
}

}  // namespace

void SparsifyConfig::validate() const {
  if (!(ca > 0.0) || !(cc > 0.0)) {
    throw std::invalid_argument("C_a and C_c must be positive");
  }
  if (lambda_override) {
    if (mode == Mode::theory) {
      throw std::invalid_argument("lambda override is not allowed in theory mode");
    }
    if (*lambda_override == 0) throw std::invalid_argument("lambda override must be >= 1");
  }
}

ScheduleStep dh_schedule(std::size_t m_i, double m_star, double eps,
                         const SparsifyConfig& config) {
  check_eps(eps);
  ScheduleStep s;
  s.eps_i = round_epsilon(m_i, m_star, eps);
  s.lambda_i = dh_round_lambda(m_i, s.eps_i, config);
  return s;
}

std::uint64_t dh_round_lambda(std::size_t m_i, double eps_i,
                              const SparsifyConfig& config) {
  if (config.mode == Mode::practical && config.lambda_override) {
    return *config.lambda_override;
  }
  const double l = std::log2(static_cast<double>(m_i));
  return std::max<std::uint64_t>(1, ceil_to_u64(config.ca * l * l * l / (eps_i * eps_i)));
}

double dh_target_size(std::size_t n, double eps, const SparsifyConfig& config) {
  check_eps(eps);
  const double nn = static_cast<double>(n);
  if (config.mode == Mode::practical && config.lambda_override) {
    return static_cast<double>(*config.lambda_override) * nn * nn;
  }
  const double l = std::log2(nn / eps);
  return nn * nn / (eps * eps) * l * l * l;
}

DirectedOnestepResult dh_onestep(const DirectedHypergraph& h,
                                 std::uint64_t lambda, const CoinStream& coins,
                                 std::span<const std::uint64_t> ids) {
  if (lambda < 1) throw std::invalid_argument("dh_onestep: lambda < 1");
  if (!ids.empty() && ids.size() != h.num_arcs()) {
    throw std::invalid_argument("dh_onestep: one id per arc required");
  }
  const std::size_t m = h.num_arcs();
  DirectedOnestepResult out;
  out.graph = DirectedHypergraph(h.num_vertices());

  std::vector<char> in_s(m, 0);
  if (lambda >= m) {
    std::fill(in_s.begin(), in_s.end(), 1);
  } else {
    for (ArcIndex f : coreset_finder(h, static_cast<std::size_t>(lambda)).selected) {
      in_s[f] = 1;
    }
  }

  for (ArcIndex f = 0; f < m; ++f) {
    const ArcRef a = h.arc(f);
    if (in_s[f]) {
      ++out.coreset_size;
      out.graph.add_arc(a.tail, a.head, a.weight);
      out.source.push_back(f);
      out.doubled.push_back(0);
      continue;
    }
    ++out.eligible;
    if (coins.flip(ids.empty() ? f : ids[f])) {
      ++out.sampled;
      out.graph.add_arc(a.tail, a.head, 2.0 * a.weight);
      out.source.push_back(f);
      out.doubled.push_back(1);
    }
  }
  return out;
}

DirectedSparsifyResult dh_sparsify(const DirectedHypergraph& h, double eps,
                                   const SparsifyConfig& config) {
  check_eps(eps);
  config.validate();

  DirectedSparsifyResult res;
  res.graph = h;
  res.origin.resize(h.num_arcs());
  std::iota(res.origin.begin(), res.origin.end(), ArcIndex{0});
  res.doublings.assign(h.num_arcs(), 0);

  auto& rep = res.report;
  rep.m_star = dh_target_size(h.num_vertices(), eps, config);
  rep.T = max_rounds(h.num_arcs(), rep.m_star);

  std::size_t i = 0;
  while (static_cast<long long>(i) < rep.T) {
    const std::size_t m_i = res.graph.num_arcs();
    const double mi = static_cast<double>(m_i);
    if (mi < config.cc * rep.m_star || !(mi > rep.m_star)) break;

    const ScheduleStep step = dh_schedule(m_i, rep.m_star, eps, config);
    std::vector<std::uint64_t> ids(res.origin.begin(), res.origin.end());
    DirectedOnestepResult one =
        dh_onestep(res.graph, step.lambda_i, CoinStream(config.seed, i), ids);

    IterationRecord rec;
    rec.m_in = m_i;
    rec.eps_i = step.eps_i;
    rec.lambda_i = step.lambda_i;
    rec.kept = one.coreset_size;
    rec.eligible = one.eligible;
    rec.sampled = one.sampled;
    rec.m_out = one.graph.num_arcs();
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
    // Everything sat in the coreset: later rounds would repeat this one.
    if (one.eligible == 0) break;
  }
  rep.i_end = i;
  return res;
}

// --- diagnostics -----------------------------------------------------------

VertexPair critical_pair(const ArcRef& f, std::span<const double> x) {
  if (f.tail.empty() || f.head.empty()) {
    throw std::invalid_argument("hyperarc with empty tail or head");
  }
  VertexPair best{f.tail[0], f.head[0]};
  double best_val = -1.0;
  for (VertexId u : f.tail) {
    for (VertexId v : f.head) {
      if (u >= x.size() || v >= x.size()) {
        throw std::invalid_argument("vector too short for hyperarc");
      }
      const double d = std::max(0.0, x[u] - x[v]);
      const double val = d * d;
      if (val > best_val) {
        best_val = val;
        best = {u, v};
      }
    }
  }
  return best;
}

int energy_class(double normalized_energy, std::size_t lambda) {
  if (!(normalized_energy > 0.0)) {
    throw std::invalid_argument("energy_class: energy must be positive");
  }
  int exp = 0;
  std::frexp(normalized_energy * static_cast<double>(lambda), &exp);
  // t = mant * 2^exp with mant in [0.5, 1), so t in [2^{exp-1}, 2^exp).
  return 1 - exp;
}

bool EnergyPartition::critical_pair_bound_holds() const {
  for (const auto& [i, pairs] : critical_pairs) {
    if (pairs.empty()) continue;
    if (i <= 0) return false;
    if (i < 63 && pairs.size() >= (std::size_t{1} << i)) return false;
  }
  return true;
}

EnergyPartition energy_partition(const DirectedHypergraph& h,
                                 const Coreset& coreset,
                                 std::span<const double> x,
                                 std::size_t lambda) {
  if (lambda < 1) throw std::invalid_argument("energy_partition: lambda < 1");
  EnergyPartition p;
  p.lambda = lambda;
  p.normalization = directed_energy(h, x);
  if (!(p.normalization > 0.0)) {
    throw std::invalid_argument("energy_partition: total energy is zero");
  }
  for (ArcIndex f = 0; f < h.num_arcs(); ++f) {
    if (coreset.contains(f)) continue;
    const ArcRef a = h.arc(f);
    const double q = arc_energy(a, x) / p.normalization;
    if (!(q > 0.0)) continue;
    const int i = energy_class(q, lambda);
    const VertexPair cp = critical_pair(a, x);
    p.classes[i].push_back(f);
    p.critical_pairs[i].insert(cp);
    p.by_pair[{i, cp}].push_back(f);
  }
  for (const auto& [i, arcs] : p.classes) {
    if (i <= 0) {
      p.warnings.push_back("class " + std::to_string(i) + " holds " +
                           std::to_string(arcs.size()) +
                           " arc(s); expected empty when S is a lambda-coreset");
    }
  }
  return p;
}

}  // namespace hgsparse
