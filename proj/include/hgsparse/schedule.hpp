#ifndef HGSPARSE_SCHEDULE_HPP_
#define HGSPARSE_SCHEDULE_HPP_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string_view>
#include <vector>

namespace hgsparse {

/// theory: every constant and formula verbatim. practical: a lambda override
/// may replace the per-round lambda (and the matching target size), so the
/// sampling path runs at desk scale.
enum class Mode { theory, practical };

std::string_view to_string(Mode m);
Mode parse_mode(std::string_view s);

/// One executed round of an iterative sparsifier.
struct IterationRecord {
  std::size_t m_in = 0;        // m_i
  double eps_i = 0.0;
  std::uint64_t lambda_i = 0;
  std::size_t kept = 0;        // coreset or bundle size
  std::size_t eligible = 0;    // arcs/edges offered to the coin
  std::size_t sampled = 0;     // of those, how many survived
  std::size_t m_out = 0;       // m_{i+1}
  // Largest C2 r^4 log2(n)/eps_i^2 * z_f R_G(u,v) over sampled-eligible
  // hyperedges; NaN when not computed (directed runs, or check disabled).
  double max_sampling_ratio = std::numeric_limits<double>::quiet_NaN();
};

struct SparsifyReport {
  double m_star = 0.0;
  long long T = 0;
  std::size_t i_end = 0;
  std::vector<IterationRecord> iterations;
};

/// log base 4/3.
double log43(double x);

/// Saturating ceil for lambda values that may exceed 64 bits at desk scale.
std::uint64_t ceil_to_u64(double x);

/// T = ceil(log_{4/3}(m / m_star)).
long long max_rounds(std::size_t m, double m_star);

/// eps_i = eps / (4 log_{4/3}^2(m_i / m_star)).
double round_epsilon(std::size_t m_i, double m_star, double eps);

}  // namespace hgsparse

#endif  // HGSPARSE_SCHEDULE_HPP_
