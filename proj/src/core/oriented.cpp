#include "oriented.hpp"

#include <stdexcept>

namespace gsd {

namespace {

int term_sign(const SymbolTable& tab, const OrientedGaussoid& phi, const TrinomialTerm& term) {
  int v = term.coeff;
  for (int ord : {term.a, term.b}) {
    if (ord < tab.p_count()) continue;
    v *= phi.value(ord - tab.p_count());
    if (v == 0) return 0;
  }
  return v;
}

}  // namespace

bool is_oriented_gaussoid(const OrientedGaussoid& phi) {
  const auto& tab = SymbolTable::get(phi.n);
  for (const auto& t : edge_trinomials(GroundSet(phi.n))) {
    bool pos = false, neg = false;
    for (const auto& term : t.terms) {
      int v = term_sign(tab, phi, term);
      pos |= v > 0;
      neg |= v < 0;
    }
    if (pos != neg) return false;
  }
  return true;
}

Gaussoid support(const OrientedGaussoid& phi) {
  Gaussoid g(phi.n);
  g.members = phi.zero_set;
  if (!is_gaussoid_axioms(g))
    throw std::invalid_argument("zero set violates the gaussoid axioms: not an oriented gaussoid");
  return g;
}

bool is_positive(const OrientedGaussoid& phi) {
  return !phi.negative_set.any() && is_oriented_gaussoid(phi);
}

OrientedGaussoid positive_map_of_graph(const Graph& graph) {
  OrientedGaussoid phi(graph.n);
  phi.zero_set = graph_gaussoid(graph).members;
  return phi;
}

std::vector<std::pair<Graph, OrientedGaussoid>> positive_census(const GroundSet& gs) {
  if (gs.n > 5) throw std::invalid_argument("positive census is desk-scale: n <= 5");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= gs.n; ++i)
    for (int j = i + 1; j <= gs.n; ++j) pairs.emplace_back(i, j);
  std::vector<std::pair<Graph, OrientedGaussoid>> out;
  out.reserve(std::size_t{1} << pairs.size());
  for (Mask edges = 0; edges < (Mask{1} << pairs.size()); ++edges) {
    Graph graph(gs.n);
    for (std::size_t e = 0; e < pairs.size(); ++e)
      if ((edges >> e) & 1) graph.add_edge(pairs[e].first, pairs[e].second);
    out.emplace_back(graph, positive_map_of_graph(graph));
  }
  return out;
}

std::string sign_string(const OrientedGaussoid& phi) {
  const auto& tab = SymbolTable::get(phi.n);
  std::string out;
  out.reserve(tab.a_count());
  for (int t = 0; t < tab.a_count(); ++t) {
    int v = phi.value(t);
    out += v == 0 ? '0' : (v > 0 ? '+' : '-');
  }
  return out;
}

OrientedGaussoid parse_sign_string(int n, std::string_view str) {
  const auto& tab = SymbolTable::get(n);
  if (static_cast<int>(str.size()) != tab.a_count())
    throw std::invalid_argument("sign string must have one of +,-,0 per a-symbol");
  OrientedGaussoid out(n);
  for (int t = 0; t < tab.a_count(); ++t) {
    switch (str[t]) {
      case '+':
        break;
      case '-':
        out.negative_set.set(t);
        break;
      case '0':
        out.zero_set.set(t);
        break;
      default:
        throw std::invalid_argument("sign string may contain only +, -, 0");
    }
  }
  return out;
}

}  // namespace gsd
