// Exact realization checks: sign vectors of rational matrices, the fixture
// table of uniform sign classes for n=4 with its one LP-certified
// non-realizable row, bi-quadratic final polynomial certificates by exact
// linear programming, M-matrix realizations of graph gaussoids, seeded
// dyadic realization search, and partial correlations.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "oriented.hpp"
#include "simplex.hpp"

namespace gsd {

struct SignVector {
  OrientedGaussoid phi;
  bool positive_definite;
};

// Exact sign of every almost-principal minor plus the PD flag.
SignVector sign_vector(const SymmetricMatrix& sigma);

// One inequality y_lhs[0]+y_lhs[1] < y_rhs[0]+y_rhs[1] between
// log-magnitudes of symbols (ordinals into the symbol table), derived
// from the edge trinomial it indexes.
struct LogInequality {
  int lhs[2];
  int rhs[2];
  std::size_t trinomial;
};

struct SignedLogSystem {
  int n = 0;
  std::vector<Trinomial> trinomials;
  std::vector<LogInequality> inequalities;  // two per trinomial
};

// Builds the magnitude system of a uniform sign map: in each edge
// trinomial the two same-signed terms are each smaller than the lone
// opposite term.  Throws std::invalid_argument when some trinomial has
// all three terms of one sign (the map is not an oriented gaussoid).
SignedLogSystem build_log_system(const OrientedGaussoid& phi);

struct FarkasCertificate {
  std::vector<mpq_class> multipliers;       // per inequality, >= 0
  std::vector<std::size_t> trinomial_support;  // trinomials with weight > 0
  bool verified = false;                    // weighted inequality sum is 0
};

struct BfpResult {
  bool feasible = false;
  std::optional<FarkasCertificate> certificate;  // set when infeasible
};

// Decides strict feasibility of the log system by exact simplex on a
// maximized common slack; on infeasibility returns Farkas multipliers
// mapped back to trinomials.
BfpResult bfp_certificate(const OrientedGaussoid& phi);

// --- fixture table ----------------------------------------------------------

struct Table1Row {
  int id = 0;
  std::string signs;                // 24 characters, canonical a-order
  std::vector<mpq_class> offdiag;   // s12,s13,s14,s23,s24,s34; empty for the LP row
  bool has_matrix() const { return !offdiag.empty(); }
};

std::vector<Table1Row> parse_table1_csv(const std::string& text);

struct Table1Report {
  struct Entry {
    int row = 0;
    std::string status;  // "ok", "lp-infeasible", or a named discrepancy
    bool ok = false;
  };
  std::vector<Entry> entries;
  int verified = 0;
  int discrepancies = 0;
};

// For each row with a matrix: positive definiteness and an exact sign
// match against the printed string; discrepancies are reported by row,
// never silently fixed.  The matrix-free row must come out LP-infeasible
// with a verified certificate.
Table1Report verify_table1(const std::vector<Table1Row>& rows);

// --- graphical realizations -------------------------------------------------

struct MMatrixResult {
  SymmetricMatrix sigma;
  mpq_class t_used;
  bool faithful = false;      // gaussoid of sigma equals the graph gaussoid
  bool nonnegative = false;   // all almost-principal minors >= 0
  int rounds = 0;
};

// sigma = (t Id - adjacency)^{-1}; t must exceed the maximum vertex
// degree.  Doubles t (up to 20 rounds) until the realization is faithful
// with nonnegative a-minors; throws std::runtime_error past the cap.
MMatrixResult mmatrix_realization(const Graph& graph, mpq_class t);

// Seeded random search over unit-diagonal matrices with off-diagonal
// dyadic entries (+-2^-k, k <= 14) whose signs follow phi on the a_{ij};
// returns the first matrix whose full sign vector matches exactly.
std::optional<SymmetricMatrix> search_realization(const OrientedGaussoid& phi, long budget,
                                                  unsigned seed = 0);

// rho_{ij|K} = a_{ij|K} / sqrt(p_iK p_jK), floating point, indexed by
// a-offset; requires a positive definite matrix.
std::vector<double> partial_correlations(const SymmetricMatrix& sigma);

// The five non-realizable gaussoids on [4] (fixtures), and the explicit
// degree-six certificate identity for the first of them, which vanishes
// under minor substitution while its leading block is positive on any
// Gaussian realization.
std::vector<Gaussoid> nonrealizable_gaussoids_n4();
SymbolPolynomial nonrealizability_certificate_n4();

}  // namespace gsd
