#ifndef HGSPARSE_INSTANCES_HPP_
#define HGSPARSE_INSTANCES_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>

#include "hgsparse/core.hpp"

namespace hgsparse {

/// Lower-bound family at eps = 1/(8q). Requires n >= 1, q >= 1 and
/// 2q < n (that is, 1/(4 eps) < n).
struct LowerBoundParams {
  std::size_t n = 0;
  std::size_t q = 0;

  double eps() const { return 1.0 / (8.0 * static_cast<double>(q)); }
  void validate() const;
  /// Inverse of eps(); throws unless eps is exactly 1/(8q).
  static LowerBoundParams from_eps(std::size_t n, double eps);
};

/// 2n vertices, U = [0, n), W = [n, 2n). For i in U, k in [0, n) and
/// l = 1..q: arc ({i, (i+l) mod n}, {n+k}) of weight 4 eps, stored at index
/// (i n + k) q + (l - 1).
DirectedHypergraph gen_lower_bound(const LowerBoundParams& p);

struct LowerBoundArc {
  VertexId i = 0;  // in U
  VertexId j = 0;  // (i + l) mod n
  VertexId k = 0;  // head is n + k
  std::size_t l = 0;
};
LowerBoundArc lower_bound_arc(const LowerBoundParams& p, ArcIndex f);

struct WitnessReport {
  VertexId a = 0, b = 0;  // tail of the removed arc, both in U
  VertexId head = 0;      // its head, in W
  // x1: 1 at a and on W minus {head}; xs: same with b; x1s = max(x1, xs).
  double q1 = 0.0, qs = 0.0, q1s = 0.0;           // on H
  double q1_t = 0.0, qs_t = 0.0, q1s_t = 0.0;     // on the sub-hypergraph
  double lower = 0.0;  // 2(1 - eps): forced lower bound on q1_t + qs_t
  double upper = 0.0;  // 2(1 - eps - 2 eps^2): allowance for q1s_t
  bool additive = false;   // q1_t + qs_t == q1s_t
  bool violation = false;  // additive and lower > upper
};

/// Evaluates the three test vectors for arc `removed` on H and on H minus
/// that arc. With no removal the sub-hypergraph is H itself and no
/// violation is declared. Throws if h is not gen_lower_bound(p) or the arc
/// index is out of range.
WitnessReport lower_bound_witness(const DirectedHypergraph& h,
                                  const LowerBoundParams& p,
                                  std::optional<ArcIndex> removed);

/// Same test vectors for the tail {a, b} and head of `arc` of gen_lower_bound(p),
/// evaluated on an arbitrary sub-hypergraph h_tilde (any reweighting).
WitnessReport lower_bound_witness_on(const DirectedHypergraph& h_tilde,
                                     const LowerBoundParams& p, ArcIndex arc);

/// m arcs with (|t|, |h|) uniform over pairs with |t|, |h| >= 1,
/// |t| + |h| <= r, each side drawn without replacement, weights log-uniform
/// in [w_lo, w_hi].
DirectedHypergraph gen_random_directed(std::size_t n, std::size_t m,
                                       std::size_t r, double w_lo, double w_hi,
                                       std::uint64_t seed);

/// m hyperedges with size uniform in (r/2, r], weights log-uniform.
UndirectedHypergraph gen_random_undirected(std::size_t n, std::size_t m,
                                           std::size_t r, double w_lo,
                                           double w_hi, std::uint64_t seed);

}  // namespace hgsparse

#endif  // HGSPARSE_INSTANCES_HPP_
