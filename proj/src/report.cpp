#include "hgsparse/report.hpp"

#include <cmath>

#include "hgsparse/io.hpp"

namespace hgsparse {

namespace {

std::string num(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return format_double(x);
}

}  // namespace

void RunReport::set(std::string_view key, std::string value) {
  for (auto& [k, v] : entries_) {
    if (k == key) {
      v = std::move(value);
      return;
    }
  }
  entries_.emplace_back(std::string(key), std::move(value));
}

void RunReport::set(std::string_view key, double value) { set(key, num(value)); }

const std::string* RunReport::get(std::string_view key) const {
  for (const auto& [k, v] : entries_) {
    if (k == key) return &v;
  }
  return nullptr;
}

std::string RunReport::str() const {
  std::string out;
  for (const auto& [k, v] : entries_) {
    out += k;
    out += '=';
    out += v;
    out += '\n';
  }
  return out;
}

void add_schedule(RunReport& r, const SparsifyReport& s) {
  r.set("m_star", s.m_star);
  r.set("T", s.T);
  r.set("i_end", s.i_end);
  for (std::size_t i = 0; i < s.iterations.size(); ++i) {
    const IterationRecord& it = s.iterations[i];
    const std::string p = "iter." + std::to_string(i) + ".";
    r.set(p + "m_in", it.m_in);
    r.set(p + "eps_i", it.eps_i);
    r.set(p + "lambda_i", it.lambda_i);
    r.set(p + "kept", it.kept);
    r.set(p + "eligible", it.eligible);
    r.set(p + "sampled", it.sampled);
    r.set(p + "m_out", it.m_out);
    if (!std::isnan(it.max_sampling_ratio)) {
      r.set(p + "max_sampling_ratio", it.max_sampling_ratio);
    }
  }
}

std::string iteration_table(const SparsifyReport& s) {
  std::string out = "round\tm_in\teps_i\tlambda_i\tkept\teligible\tsampled\tm_out\tmax_sampling_ratio\n";
  for (std::size_t i = 0; i < s.iterations.size(); ++i) {
    const IterationRecord& it = s.iterations[i];
    out += std::to_string(i) + '\t' + std::to_string(it.m_in) + '\t' + num(it.eps_i) +
           '\t' + std::to_string(it.lambda_i) + '\t' + std::to_string(it.kept) + '\t' +
           std::to_string(it.eligible) + '\t' + std::to_string(it.sampled) + '\t' +
           std::to_string(it.m_out) + '\t' + num(it.max_sampling_ratio) + '\n';
  }
  return out;
}

}  // namespace hgsparse
