#include <doctest.h>

#include "core/algebra.hpp"
#include "core/enumerate.hpp"

using namespace gsd;

namespace {

Quadric from_terms(int n, std::vector<std::tuple<int, const char*, const char*>> terms) {
  const auto& tab = SymbolTable::get(n);
  Quadric q(n);
  for (auto [c, x, y] : terms)
    q.add(tab.index(tab.parse_symbol(x)), tab.index(tab.parse_symbol(y)), c);
  return q;
}

Quadric from_trinomial(int n, const Trinomial& t) {
  Quadric q(n);
  for (const auto& term : t.terms) q.add(term.a, term.b, term.coeff);
  return q;
}

}  // namespace

TEST_CASE("symbol weights") {
  const auto& tab = SymbolTable::get(3);
  auto w = [&](const char* name) { return weight(tab.parse_symbol(name), 3); };
  CHECK(w("p") == Weight{0, 1, 1, 1});
  CHECK(w("p123") == Weight{0, -1, -1, -1});
  CHECK(w("a12") == Weight{0, 0, 0, 1});
  CHECK(w("a12|3") == Weight{0, 0, 0, -1});
  CHECK(w("a23|1") == Weight{0, -1, 0, 0});
}

TEST_CASE("highest weight quadrics") {
  GroundSet g3(3);
  Quadric q1 = hw_quadric(QuadricKind::I, 0, g3);
  CHECK(q1 == from_terms(3, {{1, "p12", "p"}, {-1, "p1", "p2"}, {1, "a12", "a12"}}));

  // Kind II at m=3 is p a12|3 - p3 a12 + a13 a23.
  Quadric q2 = hw_quadric(QuadricKind::II, 3, g3);
  CHECK(q2 == from_terms(3, {{1, "p", "a12|3"}, {-1, "p3", "a12"}, {1, "a13", "a23"}}));

  // Raising kills all highest weight vectors, for every kind and m.
  GroundSet g5(5);
  std::vector<Quadric> hws = {hw_quadric(QuadricKind::I, 0, g5),
                              hw_quadric(QuadricKind::II, 3, g5),
                              hw_quadric(QuadricKind::II, 5, g5),
                              hw_quadric(QuadricKind::III, 4, g5),
                              hw_quadric(QuadricKind::IV, 4, g5)};
  for (const auto& q : hws) {
    for (int k = 1; k <= 5; ++k) CHECK(raise(q, k).is_zero());
    CHECK(verify_vanishing(q, 5).vanishes);
  }

  CHECK_THROWS_AS(hw_quadric(QuadricKind::II, 4, g5), std::invalid_argument);
  CHECK_THROWS_AS(hw_quadric(QuadricKind::III, 5, g5), std::invalid_argument);
  CHECK_THROWS_AS(hw_quadric(QuadricKind::IV, 3, g5), std::invalid_argument);
}

TEST_CASE("lowering and raising") {
  GroundSet g4(4);
  // Lowering the square quadric on {1,2} by 3.
  Quadric sq = hw_quadric(QuadricKind::I, 0, g4);
  Quadric low = lower(sq, 3);
  CHECK(low == from_terms(4, {{2, "a12", "a12|3"},
                              {-1, "p13", "p2"},
                              {-1, "p1", "p23"},
                              {1, "p123", "p"},
                              {1, "p12", "p3"}}));

  // Weight additivity: lowering shifts the weight by -2 e_k.
  Weight w = weight(sq);
  Weight wl = weight(low);
  for (int k = 1; k <= 4; ++k) CHECK(wl[k] == w[k] - 2 * (k == 3));

  // Raising a lowering recovers a nonzero multiple of the original.
  Quadric back = raise(low, 3);
  bool proportional = false;
  for (int c = 1; c <= 4 && !proportional; ++c) {
    Quadric scaled(4);
    for (const auto& [mono, coeff] : sq.terms) scaled.add(mono.first, mono.second, c * coeff);
    proportional = (scaled == back);
  }
  CHECK(proportional);

  // Lowering beyond the weight capacity gives zero.
  Quadric twice = lower(lower(low, 3), 3);
  CHECK(twice.is_zero());
}

TEST_CASE("dimension formula and degree") {
  CHECK(dim_formula(2) == 1);
  CHECK(dim_formula(3) == 21);
  CHECK(dim_formula(4) == 226);
  CHECK(dim_formula(5) == 1810);
  CHECK(dim_formula(6) == 12261);
  CHECK(dim_formula(7) == 74613);
  CHECK(dim_formula(8) == 421716);

  CHECK(lgr_degree(2) == 2);
  CHECK(lgr_degree(3) == 16);
  CHECK(lgr_degree(4) == 768);
  CHECK(lgr_degree(5) == 292864);
}

TEST_CASE("quadric space rank matches the formula") {
  auto s2 = quadric_space(GroundSet(2));
  CHECK(s2.rank == 1);
  auto s3 = quadric_space(GroundSet(3));
  CHECK(s3.rank == 21);
  CHECK(s3.zero_lowerings == 0);
  auto s4 = quadric_space(GroundSet(4));
  CHECK(s4.rank == 226);
  CHECK(s4.zero_lowerings == 0);
  CHECK_FALSE(s4.rank_is_modular);

  // Every generated quadric vanishes under substitution.
  for (const auto& q : s4.basis) CHECK(verify_vanishing(q, 5).vanishes);

  // The n=3 span contains all 18 trinomials.
  for (const auto& t : all_trinomials(GroundSet(3)))
    CHECK(in_span(s3.basis, from_trinomial(3, t)));

  // A perturbed quadric stops vanishing.
  Quadric bad = s4.basis.front();
  bad.add(0, 5, 1);
  auto report = verify_vanishing(bad, 5);
  CHECK_FALSE(report.vanishes);
  CHECK(report.failing_trial >= 1);
}

TEST_CASE("compatibility sweep") {
  auto r3 = check_all_compatibility(GroundSet(3));
  CHECK(r3.gaussoids_checked == 11);
  CHECK(r3.quadrics == 21);
  CHECK(r3.violations.empty());

  auto r4 = check_all_compatibility(GroundSet(4));
  CHECK(r4.gaussoids_checked == 679);
  CHECK(r4.quadrics == 226);
  CHECK(r4.violations.empty());
}

TEST_CASE("quadric text form") {
  Quadric q = hw_quadric(QuadricKind::I, 0, GroundSet(3));
  CHECK(quadric_to_string(q) == "p*p12 - p1*p2 + a12^2");
}
