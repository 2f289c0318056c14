#ifndef HGSPARSE_REPORT_HPP_
#define HGSPARSE_REPORT_HPP_

#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "hgsparse/schedule.hpp"

namespace hgsparse {

/// Ordered key=value lines. Re-setting a key keeps its first position.
class RunReport {
 public:
  void set(std::string_view key, std::string value);
  void set(std::string_view key, const char* value) { set(key, std::string(value)); }
  void set(std::string_view key, bool value) { set(key, std::string(value ? "true" : "false")); }
  void set(std::string_view key, double value);
  template <class Int>
    requires std::is_integral_v<Int>
  void set(std::string_view key, Int value) {
    set(key, std::to_string(value));
  }

  const std::string* get(std::string_view key) const;
  const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }
  std::string str() const;

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

/// m_star, T, i_end and one iter.<i>.<field> block per round.
void add_schedule(RunReport& r, const SparsifyReport& s);

/// Header row plus one tab-separated row per round, for plotting.
std::string iteration_table(const SparsifyReport& s);

}  // namespace hgsparse

#endif  // HGSPARSE_REPORT_HPP_
