#ifndef HGSPARSE_DH_SPARSIFY_HPP_
#define HGSPARSE_DH_SPARSIFY_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hgsparse/core.hpp"
#include "hgsparse/coreset.hpp"
#include "hgsparse/random.hpp"
#include "hgsparse/schedule.hpp"

namespace hgsparse {

struct SparsifyConfig {
  double ca = 1.0;  // C_a, multiplies log^3 m_i / eps_i^2
  double cc = 4.0;  // C_c, loop runs while m_i >= C_c m*
  Mode mode = Mode::theory;
  std::optional<std::uint64_t> lambda_override;  // practical mode only
  std::uint64_t seed = 0;

  /// Throws std::invalid_argument on nonpositive constants, a zero override,
  /// or an override in theory mode.
  void validate() const;
};

struct ScheduleStep {
  double eps_i = 0.0;
  std::uint64_t lambda_i = 0;
};

/// eps_i = eps / (4 log_{4/3}^2(m_i/m*)), lambda_i = ceil(C_a log2^3(m_i) /
/// eps_i^2), or the override in practical mode. Throws if m_i <= m_star or
/// eps is outside (0, 1).
ScheduleStep dh_schedule(std::size_t m_i, double m_star, double eps,
                         const SparsifyConfig& config);

/// lambda_i = ceil(C_a log2^3(m_i) / eps_i^2), or the override.
std::uint64_t dh_round_lambda(std::size_t m_i, double eps_i,
                              const SparsifyConfig& config);

/// Target size m*: (n^2/eps^2) log2^3(n/eps), or lambda_override * n^2 (the
/// coreset capacity at that lambda) in practical mode with an override.
double dh_target_size(std::size_t n, double eps, const SparsifyConfig& config);

struct DirectedOnestepResult {
  DirectedHypergraph graph;
  std::vector<ArcIndex> source;  // input arc per output arc
  std::vector<char> doubled;     // 1 when the arc was sampled (weight x2)
  std::size_t coreset_size = 0;
  std::size_t eligible = 0;
  std::size_t sampled = 0;
};

/// One sampling step: keeps coreset_finder(h, lambda) at original weight and
/// each other arc with probability 1/2 at doubled weight. Coin for arc f is
/// coins.flip(ids[f]) (ids default to arc indices). Output keeps input order.
DirectedOnestepResult dh_onestep(const DirectedHypergraph& h,
                                 std::uint64_t lambda, const CoinStream& coins,
                                 std::span<const std::uint64_t> ids = {});

struct DirectedSparsifyResult {
  DirectedHypergraph graph;
  std::vector<ArcIndex> origin;          // arc of the original input
  std::vector<std::uint32_t> doublings;  // rounds this arc was sampled
  SparsifyReport report;
};

/// Iterative sparsifier. Rounds use CoinStream(config.seed, round) keyed by
/// original arc index. Throws on eps outside (0, 1) or an invalid config.
DirectedSparsifyResult dh_sparsify(const DirectedHypergraph& h, double eps,
                                   const SparsifyConfig& config);

// --- critical-pair diagnostics ---------------------------------------------

/// argmax over C(f) of (x_u - x_v)_+^2, smallest pair on ties.
VertexPair critical_pair(const ArcRef& f, std::span<const double> x);

struct EnergyPartition {
  double normalization = 0.0;  // total energy divided out
  std::size_t lambda = 1;
  std::map<int, std::vector<ArcIndex>> classes;            // F_i^x
  std::map<int, std::set<VertexPair>> critical_pairs;      // E_i^x
  std::map<std::pair<int, VertexPair>, std::vector<ArcIndex>> by_pair;
  std::vector<std::string> warnings;  // classes with i <= 0

  /// |E_i^x| < 2^i for every nonempty class (so no class has i <= 0).
  bool critical_pair_bound_holds() const;
};

/// Classes F_i^x of non-coreset arcs by normalized energy
/// q in [1/(2^i lambda), 1/(2^{i-1} lambda)). Zero-energy arcs are
/// unclassified. Throws std::invalid_argument on zero total energy.
EnergyPartition energy_partition(const DirectedHypergraph& h,
                                 const Coreset& coreset,
                                 std::span<const double> x,
                                 std::size_t lambda);

/// Class index i with q*lambda in [2^{-i}, 2^{-i+1}).
int energy_class(double normalized_energy, std::size_t lambda);

}  // namespace hgsparse

#endif  // HGSPARSE_DH_SPARSIFY_HPP_
