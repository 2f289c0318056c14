#include "hgsparse/instances.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hgsparse/random.hpp"

namespace hgsparse {

void LowerBoundParams::validate() const {
  if (n < 1 || q < 1) throw std::invalid_argument("lower bound: n and q must be >= 1");
  if (2 * q >= n) throw std::invalid_argument("lower bound: need 1/(4 eps) < n");
}

LowerBoundParams LowerBoundParams::from_eps(std::size_t n, double eps) {
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("eps must lie in (0, 1)");
  const double inv = 1.0 / (8.0 * eps);
  const double q = std::round(inv);
  if (q < 1.0 || 1.0 / (8.0 * q) != eps) {
    throw std::invalid_argument("lower bound: 1/(8 eps) must be a positive integer");
  }
  LowerBoundParams p{n, static_cast<std::size_t>(q)};
  p.validate();
  return p;
}

DirectedHypergraph gen_lower_bound(const LowerBoundParams& p) {
  p.validate();
  const std::size_t n = p.n;
  const double w = 4.0 * p.eps();
  DirectedHypergraph h(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const VertexId head[] = {static_cast<VertexId>(n + k)};
      for (std::size_t l = 1; l <= p.q; ++l) {
        const VertexId tail[] = {static_cast<VertexId>(i),
                                 static_cast<VertexId>((i + l) % n)};
        h.add_arc(tail, head, w);
      }
    }
  }
  return h;
}

LowerBoundArc lower_bound_arc(const LowerBoundParams& p, ArcIndex f) {
  p.validate();
  if (f >= p.n * p.n * p.q) throw std::invalid_argument("lower bound: arc index out of range");
  LowerBoundArc a;
  a.l = f % p.q + 1;
  a.k = static_cast<VertexId>((f / p.q) % p.n);
  a.i = static_cast<VertexId>(f / (p.q * p.n));
  a.j = static_cast<VertexId>((a.i + a.l) % p.n);
  return a;
}

namespace {

std::vector<double> test_vector(std::size_t n, VertexId u, VertexId head) {
  std::vector<double> x(2 * n, 0.0);
  x[u] = 1.0;
  for (std::size_t w = n; w < 2 * n; ++w) x[w] = 1.0;
  x[head] = 0.0;
  return x;
}

void fill_vectors(WitnessReport& r, const LowerBoundParams& p, ArcIndex arc) {
  const LowerBoundArc a = lower_bound_arc(p, arc);
  r.a = a.i;
  r.b = a.j;
  r.head = static_cast<VertexId>(p.n + a.k);
  const double eps = p.eps();
  r.lower = 2.0 * (1.0 - eps);
  r.upper = 2.0 * (1.0 - eps - 2.0 * eps * eps);
}

void evaluate(WitnessReport& r, const DirectedHypergraph& h, std::size_t n,
              bool on_tilde) {
  const auto x1 = test_vector(n, r.a, r.head);
  const auto xs = test_vector(n, r.b, r.head);
  auto x1s = x1;
  x1s[r.b] = 1.0;
  double& a = on_tilde ? r.q1_t : r.q1;
  double& b = on_tilde ? r.qs_t : r.qs;
  double& c = on_tilde ? r.q1s_t : r.q1s;
  a = directed_energy(h, x1);
  b = directed_energy(h, xs);
  c = directed_energy(h, x1s);
}

void decide(WitnessReport& r) {
  const double lhs = r.q1_t + r.qs_t;
  r.additive = std::abs(lhs - r.q1s_t) <= 1e-12 * std::max(1.0, std::abs(r.q1s_t));
  r.violation = r.additive && r.lower > r.upper;
}

}  // namespace

WitnessReport lower_bound_witness(const DirectedHypergraph& h,
                                  const LowerBoundParams& p,
                                  std::optional<ArcIndex> removed) {
  p.validate();
  if (!(h == gen_lower_bound(p))) {
    throw std::invalid_argument("lower bound witness: hypergraph is not the generated instance");
  }
  if (removed && *removed >= h.num_arcs()) {
    throw std::invalid_argument("lower bound witness: removed arc not in H");
  }
  WitnessReport r;
  fill_vectors(r, p, removed.value_or(0));
  evaluate(r, h, p.n, false);
  if (!removed) {
    r.q1_t = r.q1;
    r.qs_t = r.qs;
    r.q1s_t = r.q1s;
    r.additive = std::abs(r.q1 + r.qs - r.q1s) <= 1e-12 * std::max(1.0, r.q1s);
    r.violation = false;
    return r;
  }
  std::vector<ArcIndex> keep;
  keep.reserve(h.num_arcs() - 1);
  for (ArcIndex f = 0; f < h.num_arcs(); ++f) {
    if (f != *removed) keep.push_back(f);
  }
  evaluate(r, h.subgraph(keep), p.n, true);
  decide(r);
  return r;
}

WitnessReport lower_bound_witness_on(const DirectedHypergraph& h_tilde,
                                     const LowerBoundParams& p, ArcIndex arc) {
  p.validate();
  if (h_tilde.num_vertices() != 2 * p.n) {
    throw std::invalid_argument("lower bound witness: vertex count mismatch");
  }
  WitnessReport r;
  fill_vectors(r, p, arc);
  evaluate(r, gen_lower_bound(p), p.n, false);
  evaluate(r, h_tilde, p.n, true);
  decide(r);
  return r;
}

namespace {

void check_weights(double lo, double hi) {
  if (!(lo > 0.0) || !(hi >= lo) || !std::isfinite(hi)) {
    throw std::invalid_argument("weight range must satisfy 0 < lo <= hi < inf");
  }
}

class WeightDraw {
 public:
  WeightDraw(double lo, double hi) : lo_(lo), dist_(std::log(lo), std::log(hi)), fixed_(lo == hi) {}
  double operator()(std::mt19937_64& rng) {
    return fixed_ ? lo_ : std::exp(dist_(rng));
  }

 private:
  double lo_;
  std::uniform_real_distribution<double> dist_;
  bool fixed_;
};

// First `count` entries of a partial Fisher-Yates shuffle of [0, n).
std::vector<VertexId> draw_set(std::vector<VertexId>& pool, std::size_t count,
                               std::mt19937_64& rng) {
  for (std::size_t s = 0; s < count; ++s) {
    std::uniform_int_distribution<std::size_t> pick(s, pool.size() - 1);
    std::swap(pool[s], pool[pick(rng)]);
  }
  return {pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(count)};
}

std::vector<VertexId> identity_pool(std::size_t n) {
  std::vector<VertexId> pool(n);
  std::iota(pool.begin(), pool.end(), VertexId{0});
  return pool;
}

}  // namespace

DirectedHypergraph gen_random_directed(std::size_t n, std::size_t m,
                                       std::size_t r, double w_lo, double w_hi,
                                       std::uint64_t seed) {
  check_weights(w_lo, w_hi);
  if (n < 1 || r < 2) throw std::invalid_argument("random directed: need n >= 1, r >= 2");
  std::vector<std::pair<std::size_t, std::size_t>> shapes;
  for (std::size_t t = 1; t <= n && t < r; ++t) {
    for (std::size_t hd = 1; hd <= n && t + hd <= r; ++hd) shapes.emplace_back(t, hd);
  }
  auto rng = make_engine(seed);
  std::uniform_int_distribution<std::size_t> shape(0, shapes.size() - 1);
  WeightDraw weight(w_lo, w_hi);
  auto pool = identity_pool(n);
  DirectedHypergraph h(n);
  for (std::size_t e = 0; e < m; ++e) {
    const auto [t, hd] = shapes[shape(rng)];
    const auto tail = draw_set(pool, t, rng);
    const auto head = draw_set(pool, hd, rng);
    h.add_arc(tail, head, weight(rng));
  }
  return h;
}

UndirectedHypergraph gen_random_undirected(std::size_t n, std::size_t m,
                                           std::size_t r, double w_lo,
                                           double w_hi, std::uint64_t seed) {
  check_weights(w_lo, w_hi);
  if (r < 1) throw std::invalid_argument("random undirected: need r >= 1");
  const std::size_t lo = r / 2 + 1;
  if (lo > n) throw std::invalid_argument("random undirected: size band exceeds n");
  const std::size_t hi = std::min(r, n);
  auto rng = make_engine(seed);
  std::uniform_int_distribution<std::size_t> size(lo, hi);
  WeightDraw weight(w_lo, w_hi);
  auto pool = identity_pool(n);
  UndirectedHypergraph h(n);
  for (std::size_t e = 0; e < m; ++e) {
    const auto vs = draw_set(pool, size(rng), rng);
    h.add_edge(vs, weight(rng));
  }
  return h;
}

}  // namespace hgsparse
