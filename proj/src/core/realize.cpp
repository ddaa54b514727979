#include "realize.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "textio.hpp"

namespace gsd {

SignVector sign_vector(const SymmetricMatrix& sigma) {
  const auto& tab = SymbolTable::get(sigma.n());
  SignVector out{OrientedGaussoid(sigma.n()), true};
  for (int ord = 0; ord < tab.p_count(); ++ord)
    if (evaluate_minor(sigma, tab.symbol(ord)) <= 0) out.positive_definite = false;
  for (int t = 0; t < tab.a_count(); ++t) {
    mpq_class v = evaluate_minor(sigma, tab.symbol(tab.p_count() + t));
    out.phi.set_value(t, v == 0 ? 0 : (v > 0 ? +1 : -1));
  }
  return out;
}

SignedLogSystem build_log_system(const OrientedGaussoid& phi) {
  if (!phi.is_uniform())
    throw std::invalid_argument("the log-magnitude system needs a uniform sign map");
  const auto& tab = SymbolTable::get(phi.n);
  SignedLogSystem sys;
  sys.n = phi.n;
  sys.trinomials = edge_trinomials(GroundSet(phi.n));
  for (std::size_t ti = 0; ti < sys.trinomials.size(); ++ti) {
    const Trinomial& t = sys.trinomials[ti];
    int sign[3];
    for (int i = 0; i < 3; ++i) {
      sign[i] = t.terms[i].coeff;
      for (int ord : {t.terms[i].a, t.terms[i].b})
        if (ord >= tab.p_count()) sign[i] *= phi.value(ord - tab.p_count());
    }
    if (sign[0] == sign[1] && sign[1] == sign[2])
      throw std::invalid_argument("sign map is not an oriented gaussoid: trinomial " +
                                  std::to_string(ti) + " has three equal-signed terms");
    // The lone-signed term dominates the two equal-signed ones.
    int lone = sign[0] != sign[1] ? (sign[0] != sign[2] ? 0 : 1) : 2;
    for (int i = 0; i < 3; ++i) {
      if (i == lone) continue;
      LogInequality ineq;
      ineq.lhs[0] = t.terms[i].a;
      ineq.lhs[1] = t.terms[i].b;
      ineq.rhs[0] = t.terms[lone].a;
      ineq.rhs[1] = t.terms[lone].b;
      ineq.trinomial = ti;
      sys.inequalities.push_back(ineq);
    }
  }
  return sys;
}

BfpResult bfp_certificate(const OrientedGaussoid& phi) {
  SignedLogSystem sys = build_log_system(phi);
  const auto& tab = SymbolTable::get(phi.n);
  const int s = tab.size();
  const std::size_t m = sys.inequalities.size();
  // Variables: y = u - v (2s columns), then the common slack t; rows are
  // the inequalities lhs - rhs + t <= 0 followed by t <= 1.
  std::vector<std::vector<mpq_class>> a(m + 1, std::vector<mpq_class>(2 * s + 1, 0));
  std::vector<mpq_class> b(m + 1, 0);
  std::vector<mpq_class> c(2 * s + 1, 0);
  for (std::size_t i = 0; i < m; ++i) {
    const LogInequality& q = sys.inequalities[i];
    for (int ord : {q.lhs[0], q.lhs[1]}) {
      a[i][ord] += 1;
      a[i][s + ord] -= 1;
    }
    for (int ord : {q.rhs[0], q.rhs[1]}) {
      a[i][ord] -= 1;
      a[i][s + ord] += 1;
    }
    a[i][2 * s] = 1;  // slack t
  }
  a[m][2 * s] = 1;
  b[m] = 1;
  c[2 * s] = 1;
  LpResult lp = simplex_max(a, b, c);
  BfpResult out;
  if (lp.objective > 0) {
    out.feasible = true;
    return out;
  }
  // Farkas: the duals on the inequality rows combine them to 0 < 0.
  FarkasCertificate cert;
  cert.multipliers.assign(m, 0);
  std::vector<mpq_class> combined(s, 0);
  mpq_class weight = 0;
  for (std::size_t i = 0; i < m; ++i) {
    cert.multipliers[i] = lp.duals[i];
    if (lp.duals[i] == 0) continue;
    weight += lp.duals[i];
    const LogInequality& q = sys.inequalities[i];
    combined[q.lhs[0]] += lp.duals[i];
    combined[q.lhs[1]] += lp.duals[i];
    combined[q.rhs[0]] -= lp.duals[i];
    combined[q.rhs[1]] -= lp.duals[i];
    if (std::find(cert.trinomial_support.begin(), cert.trinomial_support.end(), q.trinomial) ==
        cert.trinomial_support.end())
      cert.trinomial_support.push_back(q.trinomial);
  }
  cert.verified = weight > 0;
  for (const auto& v : combined) cert.verified = cert.verified && v == 0;
  std::sort(cert.trinomial_support.begin(), cert.trinomial_support.end());
  out.feasible = false;
  out.certificate = cert;
  return out;
}

std::vector<Table1Row> parse_table1_csv(const std::string& text) {
  std::vector<Table1Row> rows;
  std::istringstream in(text);
  std::string line;
  const auto& tab = SymbolTable::get(4);
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    std::size_t pos = 0;
    while (true) {
      std::size_t comma = line.find(',', pos);
      fields.push_back(line.substr(pos, comma == std::string::npos ? comma : comma - pos));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (fields.size() != 8)
      throw std::invalid_argument("fixture row needs id, signs and six entries: " + line);
    Table1Row row;
    row.id = std::stoi(fields[0]);
    row.signs = fields[1];
    if (static_cast<int>(row.signs.size()) != tab.a_count())
      throw std::invalid_argument("fixture row " + fields[0] + ": sign string length");
    bool empty = true;
    for (int k = 0; k < 6; ++k) empty = empty && fields[2 + k].empty();
    if (!empty)
      for (int k = 0; k < 6; ++k) row.offdiag.push_back(parse_rational_string(fields[2 + k]));
    rows.push_back(std::move(row));
  }
  return rows;
}

Table1Report verify_table1(const std::vector<Table1Row>& rows) {
  Table1Report report;
  for (const auto& row : rows) {
    Table1Report::Entry entry;
    entry.row = row.id;
    if (row.has_matrix()) {
      SymmetricMatrix sigma = SymmetricMatrix::unit_diagonal(4, row.offdiag);
      SignVector sv = sign_vector(sigma);
      if (!sv.positive_definite) {
        entry.status = "matrix is not positive definite";
      } else {
        std::string got = sign_string(sv.phi);
        if (got != row.signs)
          entry.status = "sign mismatch: fixture " + row.signs + " vs computed " + got;
        else {
          entry.status = "ok";
          entry.ok = true;
        }
      }
    } else {
      BfpResult bfp = bfp_certificate(parse_sign_string(4, row.signs));
      if (!bfp.feasible && bfp.certificate && bfp.certificate->verified) {
        entry.status = "lp-infeasible";
        entry.ok = true;
      } else {
        entry.status = "expected an LP infeasibility certificate";
      }
    }
    entry.ok ? ++report.verified : ++report.discrepancies;
    report.entries.push_back(std::move(entry));
  }
  return report;
}

MMatrixResult mmatrix_realization(const Graph& graph, mpq_class t) {
  const int n = graph.n;
  int max_degree = 0;
  for (int v = 1; v <= n; ++v) max_degree = std::max(max_degree, mask_size(graph.adj[v]));
  if (t <= max_degree)
    throw std::invalid_argument("t must exceed the maximum vertex degree for dominance");
  Gaussoid target = graph_gaussoid(graph);
  const auto& tab = SymbolTable::get(n);
  for (int round = 0; round < 20; ++round) {
    SymmetricMatrix concentration(n);
    for (int i = 1; i <= n; ++i) {
      concentration.set(i, i, t);
      for (int j = i + 1; j <= n; ++j)
        concentration.set(i, j, graph.has_edge(i, j) ? mpq_class(-1) : mpq_class(0));
    }
    SymmetricMatrix sigma = inverse(concentration);
    MMatrixResult result{sigma, t, false, true, round + 1};
    Gaussoid got(n);
    for (int off = 0; off < tab.a_count(); ++off) {
      mpq_class v = evaluate_minor(sigma, tab.symbol(tab.p_count() + off));
      if (v == 0) got.members.set(off);
      if (v < 0) result.nonnegative = false;
    }
    result.faithful = (got == target);
    if (result.faithful && result.nonnegative) return result;
    t *= 2;
  }
  throw std::runtime_error("no faithful nonnegative realization within the doubling cap");
}

std::optional<SymmetricMatrix> search_realization(const OrientedGaussoid& phi, long budget,
                                                  unsigned seed) {
  const int n = phi.n;
  const auto& tab = SymbolTable::get(n);
  // Mix the target into the seed so every class gets its own
  // reproducible stream.
  std::seed_seq seq{seed, static_cast<unsigned>(phi.zero_set.hash() & 0xffffffffu),
                    static_cast<unsigned>(phi.negative_set.hash() & 0xffffffffu)};
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<int> expo(1, 14);
  for (long trial = 0; trial < budget; ++trial) {
    SymmetricMatrix sigma = SymmetricMatrix::identity(n);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        int v = phi.value(tab.a_offset(i, j, 0));
        if (v == 0) continue;
        mpq_class entry(v, 1 << expo(rng));
        entry.canonicalize();
        sigma.set(i, j, entry);
      }
    SignVector sv = sign_vector(sigma);
    if (sv.positive_definite && sv.phi == phi) return sigma;
  }
  return std::nullopt;
}

std::vector<double> partial_correlations(const SymmetricMatrix& sigma) {
  const auto& tab = SymbolTable::get(sigma.n());
  std::vector<mpq_class> p(tab.p_count());
  for (int ord = 0; ord < tab.p_count(); ++ord) {
    p[ord] = evaluate_minor(sigma, tab.symbol(ord));
    if (p[ord] <= 0) throw std::domain_error("partial correlations need a positive definite matrix");
  }
  std::vector<double> out(tab.a_count());
  for (int off = 0; off < tab.a_count(); ++off) {
    const Symbol& s = tab.symbol(tab.p_count() + off);
    mpq_class a = evaluate_minor(sigma, s);
    double piK = p[tab.p_index(s.set | mask_of(s.i))].get_d();
    double pjK = p[tab.p_index(s.set | mask_of(s.j))].get_d();
    out[off] = a.get_d() / std::sqrt(piK * pjK);
  }
  return out;
}

std::vector<Gaussoid> nonrealizable_gaussoids_n4() {
  std::vector<Gaussoid> out;
  for (const char* line : {"a12|3,a13|4,a14|2", "a12,a12|34,a34|1,a34|2", "a12,a13|24,a24|13,a34",
                           "a12|3,a13|4,a24|1,a34|2", "a12,a13|24,a24|3,a34|1"})
    out.push_back(parse_gaussoid_line(4, line));
  return out;
}

SymbolPolynomial nonrealizability_certificate_n4() {
  const auto& tab = SymbolTable::get(4);
  auto sym = [&](const char* name) { return tab.parse_symbol(name); };
  SymbolPolynomial poly;
  // a14 (a34^2 p2 p4 p23 + a23^2 a34^2 p24 + p2^2 p3 p4 p34)
  poly.push_back({1, {sym("a14"), sym("a34"), sym("a34"), sym("p2"), sym("p4"), sym("p23")}});
  poly.push_back({1, {sym("a14"), sym("a23"), sym("a23"), sym("a34"), sym("a34"), sym("p24")}});
  poly.push_back({1, {sym("a14"), sym("p2"), sym("p2"), sym("p3"), sym("p4"), sym("p34")}});
  // - (a23 a24 a34 + p2 p3 p4)(a24 p4 a12|3 + a24 a23 a13|4 + p3 p4 a14|2)
  const std::vector<std::vector<const char*>> left = {{"a23", "a24", "a34"}, {"p2", "p3", "p4"}};
  const std::vector<std::vector<const char*>> right = {
      {"a24", "p4", "a12|3"}, {"a24", "a23", "a13|4"}, {"p3", "p4", "a14|2"}};
  for (const auto& l : left)
    for (const auto& r : right) {
      std::vector<Symbol> factors;
      for (const char* name : l) factors.push_back(sym(name));
      for (const char* name : r) factors.push_back(sym(name));
      poly.push_back({-1, factors});
    }
  return poly;
}

}  // namespace gsd
