#include <doctest.h>

#include <random>
#include <set>

#include "core/cube.hpp"

using namespace gsd;

namespace {

mpq_class rnd_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 7);
  mpq_class q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

SymmetricMatrix random_symmetric(int n, std::mt19937_64& rng) {
  SymmetricMatrix m(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) m.set(i, j, rnd_rational(rng));
  return m;
}

}  // namespace

TEST_CASE("symbol ordering and counts") {
  const auto& t3 = SymbolTable::get(3);
  CHECK(t3.name(0) == "p");
  CHECK(t3.index(Symbol::P(0)) == 0);
  // First a-symbol right after the 8 p-symbols.
  CHECK(t3.index(Symbol::A(1, 2, 0)) == 8);
  CHECK(t3.name(8) == "a12");

  const auto& t4 = SymbolTable::get(4);
  CHECK(t4.size() == 40);  // 2^(n-2) * (4 + C(n,2))
  CHECK(t4.p_count() == 16);
  CHECK(t4.a_count() == 24);

  // Bijection: index . symbol = id, and names round-trip through the parser.
  for (int n = 2; n <= 6; ++n) {
    const auto& tab = SymbolTable::get(n);
    for (int ord = 0; ord < tab.size(); ++ord) {
      CHECK(tab.index(tab.symbol(ord)) == ord);
      CHECK(tab.index(tab.parse_symbol(tab.name(ord))) == ord);
    }
  }
}

TEST_CASE("symbol grammar errors") {
  const auto& tab = SymbolTable::get(4);
  CHECK(tab.parse_symbol("a13|24") == Symbol::A(1, 3, mask_of(2) | mask_of(4)));
  CHECK_THROWS_AS(tab.parse_symbol("a31"), std::invalid_argument);
  CHECK_THROWS_AS(tab.parse_symbol("a12|21"), std::invalid_argument);
  CHECK_THROWS_AS(tab.parse_symbol("a12|2"), std::invalid_argument);
  CHECK_THROWS_AS(tab.parse_symbol("p21"), std::invalid_argument);
  CHECK_THROWS_AS(tab.parse_symbol("p15"), std::invalid_argument);
  CHECK_THROWS_AS(tab.parse_symbol("q12"), std::invalid_argument);
  CHECK_THROWS_AS(tab.parse_symbol("a12|"), std::invalid_argument);
}

TEST_CASE("trinomial counts") {
  CHECK(square_trinomials(GroundSet(2)).size() == 1);
  CHECK(edge_trinomials(GroundSet(2)).empty());
  CHECK(square_trinomials(GroundSet(3)).size() == 6);
  CHECK(edge_trinomials(GroundSet(3)).size() == 12);
  CHECK(edge_trinomials(GroundSet(4)).size() == 96);
  CHECK(all_trinomials(GroundSet(4)).size() == 120);
  CHECK(edge_trinomials(GroundSet(5)).size() == 480);
  CHECK(all_trinomials(GroundSet(5)).size() == 560);
  // 2^(n-3) n (n-1) (2n-3), n=3 via 18 = 6 + 12
  for (int n = 3; n <= 6; ++n) {
    long expect = (long(n) * (n - 1) * (2 * n - 3)) << (n - 3);
    CHECK(long(all_trinomials(GroundSet(n)).size()) == expect);
  }
}

TEST_CASE("the twelve edge trinomials for n=3") {
  const auto& tab = SymbolTable::get(3);
  auto term = [&](int c, const char* x, const char* y) {
    int a = tab.index(tab.parse_symbol(x));
    int b = tab.index(tab.parse_symbol(y));
    return TrinomialTerm{c, std::min(a, b), std::max(a, b)};
  };
  auto key = [](const Trinomial& t) {
    std::multiset<std::tuple<int, int, int>> k;
    for (const auto& x : t.terms) k.insert({x.coeff, x.a, x.b});
    return k;
  };
  std::set<std::multiset<std::tuple<int, int, int>>> expected;
  auto add = [&](std::array<TrinomialTerm, 3> ts) {
    Trinomial t;
    t.terms = ts;
    expected.insert(key(t));
  };
  add({term(1, "p1", "a23"), term(-1, "p", "a23|1"), term(-1, "a12", "a13")});
  add({term(1, "p2", "a13"), term(-1, "p", "a13|2"), term(-1, "a12", "a23")});
  add({term(1, "p3", "a12"), term(-1, "p", "a12|3"), term(-1, "a23", "a13")});
  add({term(1, "p12", "a13"), term(-1, "p1", "a13|2"), term(-1, "a12", "a23|1")});
  add({term(1, "p12", "a23"), term(-1, "p2", "a23|1"), term(-1, "a12", "a13|2")});
  add({term(1, "p13", "a12"), term(-1, "p1", "a12|3"), term(-1, "a13", "a23|1")});
  add({term(1, "p13", "a23"), term(-1, "p3", "a23|1"), term(-1, "a13", "a12|3")});
  add({term(1, "p23", "a12"), term(-1, "p2", "a12|3"), term(-1, "a23", "a13|2")});
  add({term(1, "p23", "a13"), term(-1, "p3", "a13|2"), term(-1, "a23", "a12|3")});
  add({term(1, "p123", "a12"), term(-1, "p12", "a12|3"), term(-1, "a23|1", "a13|2")});
  add({term(1, "p123", "a13"), term(-1, "p13", "a13|2"), term(-1, "a23|1", "a12|3")});
  add({term(1, "p123", "a23"), term(-1, "p23", "a23|1"), term(-1, "a12|3", "a13|2")});
  std::set<std::multiset<std::tuple<int, int, int>>> got;
  for (const auto& t : edge_trinomials(GroundSet(3))) got.insert(key(t));
  CHECK(got == expected);
}

TEST_CASE("minor evaluation") {
  SymmetricMatrix id = SymmetricMatrix::identity(4);
  const auto& tab = SymbolTable::get(4);
  for (int ord = 0; ord < tab.size(); ++ord) {
    mpq_class v = evaluate_minor(id, tab.symbol(ord));
    CHECK(v == (tab.symbol(ord).is_p() ? 1 : 0));
  }

  // Symbolic check of the pinned sign convention on random entries:
  // a12|3 -> s12 s33 - s13 s23 and a13|2 -> -(s12 s23 - s13 s22).
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    SymmetricMatrix m = random_symmetric(3, rng);
    const auto& t3 = SymbolTable::get(3);
    mpq_class a123 = evaluate_minor(m, t3.parse_symbol("a12|3"));
    CHECK(a123 == m.at(1, 2) * m.at(3, 3) - m.at(1, 3) * m.at(2, 3));
    mpq_class a132 = evaluate_minor(m, t3.parse_symbol("a13|2"));
    CHECK(a132 == -(m.at(1, 2) * m.at(2, 3) - m.at(1, 3) * m.at(2, 2)));
  }

  SymmetricMatrix ex(3);
  ex.set(1, 1, 2);
  ex.set(2, 2, 2);
  ex.set(3, 3, 2);
  ex.set(1, 2, 0);
  ex.set(1, 3, -1);
  ex.set(2, 3, -1);
  const auto& t3 = SymbolTable::get(3);
  CHECK(evaluate_minor(ex, t3.parse_symbol("a12|3")) == -1);
  CHECK(evaluate_minor(ex, t3.parse_symbol("a13|2")) == -2);
  CHECK(evaluate_minor(ex, t3.parse_symbol("a23|1")) == -2);
}

TEST_CASE("every trinomial vanishes under minor substitution") {
  std::mt19937_64 rng(42);
  for (int n = 2; n <= 5; ++n) {
    const auto& tab = SymbolTable::get(n);
    auto trinomials = all_trinomials(GroundSet(n));
    for (int trial = 0; trial < 20; ++trial) {
      SymmetricMatrix m = random_symmetric(n, rng);
      std::vector<mpq_class> value(tab.size());
      for (int ord = 0; ord < tab.size(); ++ord) value[ord] = evaluate_minor(m, tab.symbol(ord));
      for (const auto& t : trinomials) {
        mpq_class sum = 0;
        for (const auto& term : t.terms) sum += term.coeff * value[term.a] * value[term.b];
        CHECK(sum == 0);
      }
    }
  }
}

TEST_CASE("rational determinant and inverse") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    SymmetricMatrix m = random_symmetric(4, rng);
    std::vector<std::vector<mpq_class>> rows(4, std::vector<mpq_class>(4));
    for (int i = 1; i <= 4; ++i)
      for (int j = 1; j <= 4; ++j) rows[i - 1][j - 1] = m.at(i, j);
    mpq_class det = det_rational(rows);
    if (det == 0) continue;
    SymmetricMatrix inv = inverse(m);
    for (int i = 1; i <= 4; ++i)
      for (int j = 1; j <= 4; ++j) {
        mpq_class dot = 0;
        for (int k = 1; k <= 4; ++k) dot += m.at(i, k) * inv.at(k, j);
        CHECK(dot == (i == j ? 1 : 0));
      }
  }
}
