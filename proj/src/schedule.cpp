#include "hgsparse/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hgsparse {

std::string_view to_string(Mode m) {
  return m == Mode::theory ? "theory" : "practical";
}

Mode parse_mode(std::string_view s) {
  if (s == "theory") return Mode::theory;
  if (s == "practical") return Mode::practical;
  throw std::invalid_argument("unknown mode '" + std::string(s) + "'");
}

double log43(double x) { return std::log(x) / std::log(4.0 / 3.0); }

std::uint64_t ceil_to_u64(double x) {
  constexpr double cap = 9.2e18;
  if (!(x < cap)) return static_cast<std::uint64_t>(cap);
  if (x <= 0.0) return 0;
  return static_cast<std::uint64_t>(std::ceil(x));
}

long long max_rounds(std::size_t m, double m_star) {
  if (m == 0) return 0;
  double l = log43(static_cast<double>(m) / m_star);
  // exact powers of 4/3 should not pick up a round from log rounding error
  if (std::abs(l - std::round(l)) <= 1e-12 * std::max(1.0, std::abs(l))) l = std::round(l);
  const double t = std::ceil(l);
  if (t > 1e9) return 1000000000LL;
  return static_cast<long long>(t);
}

double round_epsilon(std::size_t m_i, double m_star, double eps) {
  const double ratio = static_cast<double>(m_i) / m_star;
  if (!(ratio > 1.0)) {
    throw std::invalid_argument("round_epsilon: m_i must exceed m_star");
  }
  const double l = log43(ratio);
  return eps / (4.0 * l * l);
}

}  // namespace hgsparse
