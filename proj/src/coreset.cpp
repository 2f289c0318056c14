#include "hgsparse/coreset.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace hgsparse {

namespace {

std::string pair_str(VertexPair p) {
  std::ostringstream os;
  os << '(' << p.u << ',' << p.v << ')';
  return os.str();
}

}  // namespace

bool Coreset::contains(ArcIndex f) const {
  return std::binary_search(selected.begin(), selected.end(), f);
}

Coreset coreset_finder(const DirectedHypergraph& h, std::size_t lambda) {
  if (lambda < 1) throw std::invalid_argument("coreset_finder: lambda < 1");

  // A^{uv} incidence lists in one sorted pass: by pair, then heaviest first,
  // then arc index.
  struct Incidence {
    VertexPair pair;
    double weight;
    ArcIndex arc;
  };
  std::vector<Incidence> inc;
  for (ArcIndex f = 0; f < h.num_arcs(); ++f) {
    const ArcRef a = h.arc(f);
    for (VertexId u : a.tail) {
      for (VertexId v : a.head) inc.push_back({{u, v}, a.weight, f});
    }
  }
  std::sort(inc.begin(), inc.end(), [](const Incidence& x, const Incidence& y) {
    return std::tie(x.pair, y.weight, x.arc) < std::tie(y.pair, x.weight, y.arc);
  });

  Coreset c;
  c.lambda = lambda;
  std::vector<char> in_s(h.num_arcs(), 0);
  for (std::size_t lo = 0; lo < inc.size();) {
    std::size_t hi = lo;
    while (hi < inc.size() && inc[hi].pair == inc[lo].pair) ++hi;
    auto& cell = c.partition[inc[lo].pair];
    for (std::size_t k = lo; k < hi && cell.size() < lambda; ++k) {
      const ArcIndex f = inc[k].arc;
      if (!in_s[f]) {
        in_s[f] = 1;
        cell.push_back(f);
      }
    }
    lo = hi;
  }
  for (ArcIndex f = 0; f < h.num_arcs(); ++f) {
    if (in_s[f]) c.selected.push_back(f);
  }
  return c;
}

CoresetCheck verify_coreset(const DirectedHypergraph& h, const Coreset& c) {
  CoresetCheck out;
  auto fail = [&out](std::string msg) {
    out.ok = false;
    out.violations.push_back(std::move(msg));
  };

  const std::size_t m = h.num_arcs();
  const std::size_t n = h.num_vertices();

  // Independent biclique enumeration.
  std::vector<std::set<VertexPair>> pairs_of(m);
  std::set<VertexPair> all_pairs;
  for (ArcIndex f = 0; f < m; ++f) {
    const ArcRef a = h.arc(f);
    for (std::size_t i = 0; i < a.tail.size(); ++i) {
      for (std::size_t j = 0; j < a.head.size(); ++j) {
        pairs_of[f].insert({a.tail[i], a.head[j]});
      }
    }
    all_pairs.insert(pairs_of[f].begin(), pairs_of[f].end());
  }

  if (c.lambda < 1) fail("lambda < 1");
  if (!std::is_sorted(c.selected.begin(), c.selected.end()) ||
      std::adjacent_find(c.selected.begin(), c.selected.end()) !=
          c.selected.end()) {
    fail("selected is not sorted and unique");
  }
  std::vector<char> in_s(m, 0);
  for (ArcIndex f : c.selected) {
    if (f >= m) {
      fail("selected arc " + std::to_string(f) + " out of range");
      continue;
    }
    in_s[f] = 1;
  }
  if (c.selected.size() > c.lambda * n * n) {
    fail("|S| = " + std::to_string(c.selected.size()) + " exceeds lambda n^2");
  }

  // Disjointness, cover and condition 1 (membership).
  std::vector<int> owner_count(m, 0);
  for (const auto& [p, cell] : c.partition) {
    if (!all_pairs.count(p)) fail("cell " + pair_str(p) + " is not a pair of C(F)");
    if (cell.size() > c.lambda) {
      fail("cell " + pair_str(p) + " holds more than lambda arcs");
    }
    for (ArcIndex f : cell) {
      if (f >= m) {
        fail("cell " + pair_str(p) + " references arc out of range");
        continue;
      }
      ++owner_count[f];
      if (!pairs_of[f].count(p)) {
        fail("membership: arc " + std::to_string(f) + " in cell " +
             pair_str(p) + " but pair not in its biclique");
      }
    }
  }
  for (ArcIndex f = 0; f < m; ++f) {
    if (owner_count[f] > 1) {
      fail("disjointness: arc " + std::to_string(f) + " in " +
           std::to_string(owner_count[f]) + " cells");
    }
    if ((owner_count[f] > 0) != (in_s[f] != 0)) {
      fail("cover: arc " + std::to_string(f) +
           (in_s[f] ? " selected but in no cell" : " in a cell but not selected"));
    }
  }

  // Conditions 2 and 3, over pairs covered by unselected arcs.
  std::map<VertexPair, double> heaviest_outside;
  for (ArcIndex f = 0; f < m; ++f) {
    if (in_s[f]) continue;
    for (const VertexPair& p : pairs_of[f]) {
      auto [it, fresh] = heaviest_outside.emplace(p, h.weight(f));
      if (!fresh) it->second = std::max(it->second, h.weight(f));
    }
  }
  for (const auto& [p, zmax] : heaviest_outside) {
    auto it = c.partition.find(p);
    const std::size_t size = it == c.partition.end() ? 0 : it->second.size();
    if (size != c.lambda) {
      fail("condition 2: pair " + pair_str(p) + " in C(F\\S) but |S^uv| = " +
           std::to_string(size));
    }
    if (it == c.partition.end()) continue;
    for (ArcIndex f : it->second) {
      if (f < m && h.weight(f) < zmax) {
        fail("condition 3: arc " + std::to_string(f) + " in cell " +
             pair_str(p) + " lighter than an unselected arc");
      }
    }
  }
  return out;
}

}  // namespace hgsparse
