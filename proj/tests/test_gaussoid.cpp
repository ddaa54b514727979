#include <doctest.h>

#include <fstream>
#include <random>
#include <set>

#include "core/enumerate.hpp"
#include "core/gaussoid.hpp"

using namespace gsd;

namespace {

Gaussoid from_tokens(int n, const std::string& line) { return parse_gaussoid_line(n, line); }

// The eleven gaussoids on [3], as printed token lines.
const std::vector<std::string> kEleven = {
    "",
    "a12",
    "a13",
    "a23",
    "a12|3",
    "a13|2",
    "a23|1",
    "a12,a12|3,a13,a13|2",
    "a12,a12|3,a23,a23|1",
    "a13,a13|2,a23,a23|1",
    "a12,a12|3,a13,a13|2,a23,a23|1",
};

std::vector<Gaussoid> brute_force_n3() {
  std::vector<Gaussoid> out;
  for (unsigned bits = 0; bits < 64; ++bits) {
    Gaussoid g(3);
    for (int t = 0; t < 6; ++t)
      if ((bits >> t) & 1) g.members.set(t);
    if (is_gaussoid_axioms(g)) out.push_back(g);
  }
  return out;
}

Gaussoid random_subset(int n, std::mt19937_64& rng) {
  const auto& tab = SymbolTable::get(n);
  Gaussoid g(n);
  std::bernoulli_distribution coin(0.5);
  for (int t = 0; t < tab.a_count(); ++t)
    if (coin(rng)) g.members.set(t);
  return g;
}

SymmetricMatrix random_pd(int n, std::mt19937_64& rng) {
  // M^T M for a random integer matrix M with a boosted diagonal is almost
  // surely positive definite; retry on the degenerate case.
  std::uniform_int_distribution<int> entry(-3, 3);
  while (true) {
    std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m[i][j] = entry(rng) + (i == j ? 4 : 0);
    SymmetricMatrix s(n);
    for (int i = 1; i <= n; ++i)
      for (int j = i; j <= n; ++j) {
        mpq_class dot = 0;
        for (int k = 0; k < n; ++k) dot += m[k][i - 1] * m[k][j - 1];
        s.set(i, j, dot);
      }
    try {
      if (gaussoid_of_matrix(s).positive_definite) return s;
    } catch (const std::domain_error&) {
    }
  }
}

}  // namespace

TEST_CASE("the eleven gaussoids on [3]") {
  std::set<std::string> expect;
  for (const auto& line : kEleven) expect.insert(to_bitstring_line(from_tokens(3, line)));
  std::set<std::string> got;
  for (const auto& g : brute_force_n3()) got.insert(to_bitstring_line(g));
  CHECK(got == expect);
  CHECK(got.size() == 11);

  CHECK_FALSE(is_gaussoid_axioms(from_tokens(3, "a12,a13")));  // (G3) forces the rest
}

TEST_CASE("three checkers agree") {
  // Exhaustive for n=3.
  for (unsigned bits = 0; bits < 64; ++bits) {
    Gaussoid g(3);
    for (int t = 0; t < 6; ++t)
      if ((bits >> t) & 1) g.members.set(t);
    bool ax = is_gaussoid_axioms(g);
    CHECK(ax == is_gaussoid_trinomials(g));
    CHECK(ax == is_gaussoid_faces(g));
  }
  // Random subsets for n=4, n=5.
  std::mt19937_64 rng(2024);
  for (int n : {4, 5}) {
    for (int trial = 0; trial < 10000; ++trial) {
      Gaussoid g = random_subset(n, rng);
      bool ax = is_gaussoid_axioms(g);
      CHECK(ax == is_gaussoid_trinomials(g));
      CHECK(ax == is_gaussoid_faces(g));
    }
  }
}

TEST_CASE("compatibility semantics") {
  GroundSet g3(3);
  auto squares = square_trinomials(g3);
  auto edges = edge_trinomials(g3);
  // Two pure-p terms are always free: every subset is compatible with squares.
  for (unsigned bits = 0; bits < 64; ++bits) {
    Gaussoid g(3);
    for (int t = 0; t < 6; ++t)
      if ((bits >> t) & 1) g.members.set(t);
    for (const auto& t : squares) CHECK(is_compatible(g, t));
  }
  // p1 a23 - p a23|1 - a12 a13: two free terms for {a23|1}, one for {a23,a12}.
  const auto& tab = SymbolTable::get(3);
  Trinomial tri;
  bool found = false;
  int p1 = tab.index(tab.parse_symbol("p1"));
  int a23 = tab.index(tab.parse_symbol("a23"));
  for (const auto& t : edges) {
    if ((t.terms[0].a == p1 && t.terms[0].b == a23) ||
        (t.terms[0].a == a23 && t.terms[0].b == p1)) {
      tri = t;
      found = true;
      break;
    }
  }
  REQUIRE(found);
  CHECK(free_term_count(tab, from_tokens(3, "a23|1").members, tri) == 2);
  CHECK(is_compatible(from_tokens(3, "a23|1"), tri));
  CHECK(free_term_count(tab, from_tokens(3, "a23,a12").members, tri) == 1);
  CHECK_FALSE(is_compatible(from_tokens(3, "a23,a12"), tri));
  // Gaussoids are compatible with every edge trinomial.
  for (const auto& line : kEleven)
    for (const auto& t : edges) CHECK(is_compatible(from_tokens(3, line), t));
}

TEST_CASE("example gaussoid on [5]") {
  Gaussoid vamos =
      from_tokens(5, "a12,a13|4,a14|5,a15|23,a23|5,a24|135,a25|34,a34|12,a35|1,a45|2");
  CHECK(is_gaussoid_axioms(vamos));
  CHECK(is_gaussoid_trinomials(vamos));
  CHECK(is_gaussoid_faces(vamos));
  CHECK(vamos.members.count() == 10);

  std::ifstream in(std::string(GAUSSOID_DATA_DIR) + "/vamos.gauss");
  REQUIRE(in.good());
  std::string line;
  std::getline(in, line);
  CHECK(parse_gaussoid_line(5, line) == vamos);
}

TEST_CASE("duality, marginal and conditional") {
  CHECK(dual(from_tokens(3, "a12")) == from_tokens(3, "a12|3"));
  CHECK(dual(from_tokens(3, "")) == from_tokens(3, ""));

  Gaussoid g = from_tokens(3, "a12,a12|3");
  CHECK(marginalize(g, 3) == from_tokens(2, "a12"));
  CHECK(condition(g, 3) == from_tokens(2, "a12"));

  // Full A on [4] marginalizes to full A on [3].
  Gaussoid full4(4);
  for (int t = 0; t < 24; ++t) full4.members.set(t);
  Gaussoid full3(3);
  for (int t = 0; t < 6; ++t) full3.members.set(t);
  for (int u = 1; u <= 4; ++u) CHECK(marginalize(full4, u) == full3);

  // Duality relations and closure across the full n=4 census.
  auto census = all_gaussoids(GroundSet(4));
  REQUIRE(census.size() == 679);
  for (const auto& x : census) {
    Gaussoid d = dual(x);
    CHECK(is_gaussoid_axioms(d));
    CHECK(dual(d) == x);
    for (int u = 1; u <= 4; ++u) {
      CHECK(dual(marginalize(x, u)) == condition(d, u));
      CHECK(dual(condition(x, u)) == marginalize(d, u));
      CHECK(is_gaussoid_axioms(marginalize(x, u)));
      CHECK(is_gaussoid_axioms(condition(x, u)));
    }
  }
}

TEST_CASE("graph gaussoids") {
  for (int n : {3, 4, 5}) {
    std::set<std::string> distinct;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);
    for (unsigned edges = 0; edges < (1u << pairs.size()); ++edges) {
      Graph graph(n);
      for (std::size_t e = 0; e < pairs.size(); ++e)
        if ((edges >> e) & 1) graph.add_edge(pairs[e].first, pairs[e].second);
      Gaussoid g = graph_gaussoid(graph);
      CHECK(is_gaussoid_axioms(g));
      distinct.insert(to_bitstring_line(g));
    }
    CHECK(distinct.size() == (1u << pairs.size()));  // injective on graphs
  }

  Graph empty3(3);
  CHECK(graph_gaussoid(empty3).members.count() == 6);
  Graph complete3(3);
  complete3.add_edge(1, 2);
  complete3.add_edge(1, 3);
  complete3.add_edge(2, 3);
  CHECK(graph_gaussoid(complete3).members.count() == 0);
  Graph path(3);
  path.add_edge(1, 2);
  path.add_edge(2, 3);
  CHECK(graph_gaussoid(path) == from_tokens(3, "a13|2"));
}

TEST_CASE("gaussoid of a matrix") {
  auto id = SymmetricMatrix::identity(3);
  auto mg = gaussoid_of_matrix(id);
  CHECK(mg.positive_definite);
  CHECK(mg.gaussoid.members.count() == 6);

  SymmetricMatrix ex(3);
  ex.set(1, 1, 2);
  ex.set(2, 2, 2);
  ex.set(3, 3, 2);
  ex.set(1, 2, 0);
  ex.set(1, 3, -1);
  ex.set(2, 3, -1);
  auto mex = gaussoid_of_matrix(ex);
  CHECK(mex.positive_definite);
  CHECK(mex.gaussoid == from_tokens(3, "a12"));

  SymmetricMatrix sing(2);
  sing.set(1, 1, 1);
  sing.set(2, 2, 1);
  sing.set(1, 2, 1);
  CHECK_THROWS_AS(gaussoid_of_matrix(sing), std::domain_error);

  std::mt19937_64 rng(99);
  auto edges4 = edge_trinomials(GroundSet(4));
  const auto& tab = SymbolTable::get(4);
  for (int trial = 0; trial < 100; ++trial) {
    SymmetricMatrix s = random_pd(4, rng);
    auto m = gaussoid_of_matrix(s);
    CHECK(m.positive_definite);
    CHECK(is_gaussoid_axioms(m.gaussoid));
    CHECK(gaussoid_of_matrix(inverse(s)).gaussoid == dual(m.gaussoid));
    for (const auto& t : edges4) CHECK(free_term_count(tab, m.gaussoid.members, t) != 1);
  }
}

TEST_CASE("gaussoid line format") {
  Gaussoid g = from_tokens(4, "a12, a34|12");
  CHECK(to_line(g) == "a12,a34|12");
  CHECK(parse_gaussoid_line(4, to_bitstring_line(g)) == g);
  CHECK_THROWS_AS(parse_gaussoid_line(4, "p12"), std::invalid_argument);
  CHECK_THROWS_AS(parse_gaussoid_line(4, "#b0101"), std::invalid_argument);
  CHECK_THROWS_AS(parse_gaussoid_line(4, "a12|34x"), std::invalid_argument);
}
