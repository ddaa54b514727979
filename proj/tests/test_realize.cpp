#include <doctest.h>

#include <fstream>
#include <set>
#include <random>
#include <sstream>

#include "core/enumerate.hpp"
#include "core/realize.hpp"
#include "core/symmetry.hpp"
#include "core/textio.hpp"

using namespace gsd;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::vector<Table1Row> fixture_rows() {
  return parse_table1_csv(slurp(std::string(GAUSSOID_DATA_DIR) + "/table1.csv"));
}

SymmetricMatrix example53() {
  SymmetricMatrix m(3);
  m.set(1, 1, 2);
  m.set(2, 2, 2);
  m.set(3, 3, 2);
  m.set(1, 2, 0);
  m.set(1, 3, -1);
  m.set(2, 3, -1);
  return m;
}

}  // namespace

TEST_CASE("sign vectors") {
  auto id = sign_vector(SymmetricMatrix::identity(4));
  CHECK(id.positive_definite);
  CHECK(sign_string(id.phi) == std::string(24, '0'));

  auto ex = sign_vector(example53());
  CHECK(ex.positive_definite);
  CHECK(sign_string(ex.phi) == "0-----");

  // Table row 1: all twenty-four signs positive.
  std::vector<mpq_class> off;
  for (const char* s : {"1/8", "1/16", "1/4", "1/4", "1/16", "1/8"})
    off.push_back(parse_rational_string(s));
  auto row1 = sign_vector(SymmetricMatrix::unit_diagonal(4, off));
  CHECK(row1.positive_definite);
  CHECK(sign_string(row1.phi) == std::string(24, '+'));

  // Conjugation by a sign matrix reorients the sign vector.
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int> entry(-2, 2);
  std::uniform_int_distribution<int> pick(0, 15);
  int done = 0;
  while (done < 100) {
    SymmetricMatrix m(4);
    for (int i = 1; i <= 4; ++i) {
      m.set(i, i, entry(rng) + 5);
      for (int j = i + 1; j <= 4; ++j) m.set(i, j, entry(rng));
    }
    Mask L = pick(rng);
    SymmetricMatrix conj = m;
    for (int i = 1; i <= 4; ++i)
      for (int j = i; j <= 4; ++j) {
        int f = (mask_has(L, i) ? -1 : 1) * (mask_has(L, j) ? -1 : 1);
        conj.set(i, j, f * m.at(i, j));
      }
    OrientedGaussoid expect =
        act_oriented(Reorientation{L}, CubeSymmetry::identity(4).perm, sign_vector(m).phi);
    CHECK(sign_vector(conj).phi == expect);
    ++done;
  }
}

TEST_CASE("fixture table verifies") {
  auto rows = fixture_rows();
  REQUIRE(rows.size() == 46);
  int with_matrix = 0;
  for (const auto& r : rows) with_matrix += r.has_matrix();
  CHECK(with_matrix == 45);

  auto report = verify_table1(rows);
  for (const auto& e : report.entries) {
    INFO("row ", e.row, ": ", e.status);
    CHECK(e.ok);
  }
  CHECK(report.verified == 46);
  CHECK(report.discrepancies == 0);
}

TEST_CASE("log systems and the lp certificate") {
  // The all-plus map on [3] is feasible (it is realized).
  OrientedGaussoid plus3(3);
  CHECK(bfp_certificate(plus3).feasible);

  // Row 1 of the fixture table is feasible.
  auto rows = fixture_rows();
  CHECK(bfp_certificate(parse_sign_string(4, rows[0].signs)).feasible);

  // Row 36 is infeasible with an exactly verified Farkas certificate.
  const Table1Row* row36 = nullptr;
  for (const auto& r : rows)
    if (!r.has_matrix()) row36 = &r;
  REQUIRE(row36 != nullptr);
  CHECK(row36->id == 36);
  OrientedGaussoid phi36 = parse_sign_string(4, row36->signs);
  auto result = bfp_certificate(phi36);
  CHECK_FALSE(result.feasible);
  REQUIRE(result.certificate.has_value());
  CHECK(result.certificate->verified);
  CHECK_FALSE(result.certificate->trinomial_support.empty());

  // The known four-trinomial certificate: the displayed inequalities sum
  // to zero with unit multipliers, and each appears in the generated
  // system.
  SignedLogSystem sys = build_log_system(phi36);
  const auto& tab = SymbolTable::get(4);
  auto ord = [&](const char* name) { return tab.index(tab.parse_symbol(name)); };
  struct Known {
    std::pair<const char*, const char*> lhs, rhs;
  };
  const std::vector<Known> known = {
      {{"a13|4", "a12|34"}, {"a23|14", "p34"}},
      {{"a14|3", "a24|13"}, {"a12|34", "p13"}},
      {{"a23|14", "p13"}, {"a34|1", "a24|13"}},
      {{"a34|1", "p34"}, {"a13|4", "a14|3"}},
  };
  std::vector<mpq_class> combined(tab.size(), 0);
  for (const auto& k : known) {
    int l0 = ord(k.lhs.first), l1 = ord(k.lhs.second);
    int r0 = ord(k.rhs.first), r1 = ord(k.rhs.second);
    combined[l0] += 1;
    combined[l1] += 1;
    combined[r0] -= 1;
    combined[r1] -= 1;
    bool present = false;
    for (const auto& q : sys.inequalities) {
      bool lhs_match = (q.lhs[0] == std::min(l0, l1) && q.lhs[1] == std::max(l0, l1)) ||
                       (q.lhs[0] == std::max(l0, l1) && q.lhs[1] == std::min(l0, l1));
      bool rhs_match = (q.rhs[0] == std::min(r0, r1) && q.rhs[1] == std::max(r0, r1)) ||
                       (q.rhs[0] == std::max(r0, r1) && q.rhs[1] == std::min(r0, r1));
      if (lhs_match && rhs_match) present = true;
    }
    CHECK(present);
  }
  for (const auto& v : combined) CHECK(v == 0);

  // Every realizable fixture row is LP-feasible.
  for (const auto& r : rows)
    if (r.has_matrix()) CHECK(bfp_certificate(parse_sign_string(4, r.signs)).feasible);
}

TEST_CASE("m-matrix realizations") {
  Graph path(3);
  path.add_edge(1, 2);
  path.add_edge(2, 3);
  auto res = mmatrix_realization(path, 3);
  CHECK(res.faithful);
  CHECK(res.nonnegative);
  CHECK(gaussoid_of_matrix(res.sigma).gaussoid == parse_gaussoid_line(3, "a13|2"));

  Graph empty(4);
  auto diag = mmatrix_realization(empty, 1);
  CHECK(diag.faithful);
  CHECK(gaussoid_of_matrix(diag.sigma).gaussoid.members.count() == 24);

  CHECK_THROWS_AS(mmatrix_realization(path, 2), std::invalid_argument);

  // All 64 graphs on [4]: faithful, nonnegative a-minors, and the inverse
  // is an M-matrix (nonpositive off-diagonal entries).
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) pairs.emplace_back(i, j);
  for (unsigned edges = 0; edges < 64; ++edges) {
    Graph graph(4);
    for (std::size_t e = 0; e < pairs.size(); ++e)
      if ((edges >> e) & 1) graph.add_edge(pairs[e].first, pairs[e].second);
    auto r = mmatrix_realization(graph, 4);
    CHECK(r.faithful);
    CHECK(r.nonnegative);
    SymmetricMatrix k = inverse(r.sigma);
    for (int i = 1; i <= 4; ++i)
      for (int j = i + 1; j <= 4; ++j) CHECK(k.at(i, j) <= 0);
  }
}

TEST_CASE("dyadic realization search") {
  // The all-zero target finds the identity immediately.
  OrientedGaussoid zero(3);
  for (int t = 0; t < 6; ++t) zero.set_value(t, 0);
  auto found = search_realization(zero, 10);
  REQUIRE(found.has_value());
  CHECK(sign_string(sign_vector(*found).phi) == "000000");

  // Fixture row 1 is found within the documented budget.
  auto rows = fixture_rows();
  OrientedGaussoid target = parse_sign_string(4, rows[0].signs);
  auto sigma = search_realization(target, 100000);
  REQUIRE(sigma.has_value());
  CHECK(sign_vector(*sigma).positive_definite);
  CHECK(sign_vector(*sigma).phi == target);

  // Reproducible: the same seed returns the same matrix.
  auto again = search_realization(target, 100000);
  REQUIRE(again.has_value());
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) CHECK(again->at(i, j) == sigma->at(i, j));
}

TEST_CASE("partial correlations") {
  auto rho_id = partial_correlations(SymmetricMatrix::identity(3));
  for (double r : rho_id) CHECK(r == 0.0);

  auto rho = partial_correlations(example53());
  const auto& tab = SymbolTable::get(3);
  CHECK(rho[tab.a_offset(1, 2, 0)] == 0.0);
  CHECK(rho[tab.a_offset(1, 3, 0)] == doctest::Approx(-0.5).epsilon(1e-12));

  SymmetricMatrix notpd(2);
  notpd.set(1, 1, 1);
  notpd.set(2, 2, -1);
  CHECK_THROWS_AS(partial_correlations(notpd), std::domain_error);

  // |rho| <= 1 and sign(rho) = sign(a) on random positive definite input.
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> entry(-3, 3);
  int done = 0;
  while (done < 100) {
    std::vector<std::vector<mpq_class>> m(4, std::vector<mpq_class>(4));
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) m[i][j] = entry(rng) + (i == j ? 4 : 0);
    SymmetricMatrix s(4);
    for (int i = 1; i <= 4; ++i)
      for (int j = i; j <= 4; ++j) {
        mpq_class dot = 0;
        for (int k = 0; k < 4; ++k) dot += m[k][i - 1] * m[k][j - 1];
        s.set(i, j, dot);
      }
    SignVector sv = sign_vector(s);
    if (!sv.positive_definite) continue;
    auto r = partial_correlations(s);
    for (int off = 0; off < 24; ++off) {
      CHECK(std::abs(r[off]) <= 1.0 + 1e-12);
      int sign = r[off] == 0 ? 0 : (r[off] > 0 ? 1 : -1);
      // Floating point may flush tiny exact values; only compare when clear.
      if (std::abs(r[off]) > 1e-9) CHECK(sign == sv.phi.value(off));
    }
    ++done;
  }
}

TEST_CASE("non-realizable fixtures and the certificate identity") {
  auto fixtures = nonrealizable_gaussoids_n4();
  REQUIRE(fixtures.size() == 5);
  std::ifstream in(std::string(GAUSSOID_DATA_DIR) + "/nonrealizable4.gauss");
  REQUIRE(in.good());
  std::string line;
  std::size_t idx = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    REQUIRE(idx < fixtures.size());
    CHECK(parse_gaussoid_line(4, line) == fixtures[idx]);
    ++idx;
  }
  CHECK(idx == 5);
  for (const auto& g : fixtures) CHECK(is_gaussoid_axioms(g));

  // The five fixtures cover the 50 non-realizable gaussoids: their
  // duality+permutation orbits have sizes 8, 6, 6, 6, 24.
  std::vector<std::size_t> sizes;
  for (const auto& g : fixtures) {
    std::set<std::string> orbit;
    for (const auto& e : group_elements(4, SymGroup::DUAL_SN))
      orbit.insert(to_bitstring_line(act_gaussoid(e, g)));
    sizes.push_back(orbit.size());
  }
  CHECK(sizes == std::vector<std::size_t>{8, 6, 6, 6, 24});

  // The certificate identity vanishes under minor substitution.
  auto cert = nonrealizability_certificate_n4();
  CHECK(verify_vanishing_terms(cert, 4, 10).vanishes);
}
