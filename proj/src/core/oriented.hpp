// Oriented and positive gaussoids: sign maps A -> {0,+1,-1} stored as a
// zero-set and a negative-set bitset, validity against the edge
// trinomials, support extraction, and the graph correspondence for
// positive maps.
#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gaussoid.hpp"

namespace gsd {

struct OrientedGaussoid {
  int n = 0;
  SymbolSet zero_set;
  SymbolSet negative_set;

  OrientedGaussoid() = default;
  explicit OrientedGaussoid(int n_)
      : n(n_),
        zero_set(SymbolTable::get(n_).a_count()),
        negative_set(SymbolTable::get(n_).a_count()) {}

  int value(int offset) const {
    return zero_set.test(offset) ? 0 : (negative_set.test(offset) ? -1 : +1);
  }
  void set_value(int offset, int v) {
    zero_set.assign(offset, v == 0);
    negative_set.assign(offset, v < 0);
  }
  bool is_uniform() const { return !zero_set.any(); }
  bool operator==(const OrientedGaussoid&) const = default;
};

// After sending p-symbols to +1 and a-symbols to their signs, every edge
// trinomial's term-value set must be {0}, {-1,+1} or {-1,0,+1}.
bool is_oriented_gaussoid(const OrientedGaussoid& phi);

// The zero set as a validated gaussoid; throws std::invalid_argument when
// the zero set fails the axioms (phi was not an oriented gaussoid).
Gaussoid support(const OrientedGaussoid& phi);

bool is_positive(const OrientedGaussoid& phi);

// The map with zero set G_Gamma and +1 elsewhere.
OrientedGaussoid positive_map_of_graph(const Graph& graph);

// One (graph, positive map) pair per graph on [n], 2^C(n,2) in total, in
// edge-mask order.
std::vector<std::pair<Graph, OrientedGaussoid>> positive_census(const GroundSet& gs);

std::string sign_string(const OrientedGaussoid& phi);             // canonical A-order
OrientedGaussoid parse_sign_string(int n, std::string_view str);  // inverse

}  // namespace gsd
