#ifndef HGSPARSE_CORESET_HPP_
#define HGSPARSE_CORESET_HPP_

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "hgsparse/core.hpp"

namespace hgsparse {

/// A lambda-coreset S with its partition into cells S^{uv}, one cell per pair
/// of C(F) (cells may be empty).
struct Coreset {
  std::vector<ArcIndex> selected;  // sorted
  std::map<VertexPair, std::vector<ArcIndex>> partition;
  std::size_t lambda = 1;

  bool contains(ArcIndex f) const;
};

/// Greedy coreset construction. Pairs of C(F) are visited in lexicographic
/// order; each takes up to lambda heaviest not-yet-selected arcs whose
/// biclique contains it, ties broken by arc index.
/// Throws std::invalid_argument if lambda < 1.
Coreset coreset_finder(const DirectedHypergraph& h, std::size_t lambda);

struct CoresetCheck {
  bool ok = true;
  std::vector<std::string> violations;
};

/// Checks the three coreset conditions plus disjointness, cover of
/// `selected`, and |S| <= lambda n^2. Bicliques are recomputed by explicit
/// pair enumeration, independently of coreset_finder.
CoresetCheck verify_coreset(const DirectedHypergraph& h, const Coreset& c);

}  // namespace hgsparse

#endif  // HGSPARSE_CORESET_HPP_
