// The quadric generators of the relations among principal and
// almost-principal minors: highest-weight constructors, lowering/raising
// operators extended by the Leibniz rule, symbol weights, the dimension
// formula, exact span rank, vanishing verification by substitution, and
// the gaussoid-compatibility sweep.
#pragma once

#include <gmpxx.h>

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gaussoid.hpp"

namespace gsd {

// Sparse quadratic form: unordered symbol pairs (by ordinal, a <= b) with
// rational coefficients; zero coefficients are absent.
struct Quadric {
  int n = 0;
  std::map<std::pair<int, int>, mpq_class> terms;

  explicit Quadric(int n_ = 0) : n(n_) {}
  void add(int a, int b, const mpq_class& coeff);
  bool is_zero() const { return terms.empty(); }
  bool operator==(const Quadric&) const = default;
};

using Weight = std::array<int, 10>;  // entries 1..n used

Weight weight(const Symbol& s, int n);
// Common weight of all monomials; throws std::invalid_argument when the
// quadric is not homogeneous in weight.
Weight weight(const Quadric& q);

Quadric lower(const Quadric& q, int k);
Quadric raise(const Quadric& q, int k);

enum class QuadricKind { I, II, III, IV };

// The four highest-weight families on {1..m} inside [n]:
//   I    p_12 p - p_1 p_2 + a_12^2                      (m ignored)
//   II   sum (-1)^|L| p_L a_{12|Lc} + sum (-1)^|K| a_{1j|K} a_{2j|Kc},  m odd
//   III  the a-part of II alone,                         m even
//   IV   sum over ordered partitions (L,L') of [m] of (-1)^|L| p_L p_L'
//        + 2 sum_j sum over partitions (K,K') of [m]\{1,j}
//          of (-1)^|K| a_{1j|K} a_{1j|K'},               m even, m > 3
// with the printed signs and the coefficient 2 in IV kept as is.
Quadric hw_quadric(QuadricKind kind, int m, const GroundSet& gs);

// dim of the quadric space by the closed formula.
long dim_formula(int n);

// degree C(n+1,2)! / (1^n 3^(n-1) 5^(n-2) ... (2n-1)).
mpz_class lgr_degree(int n);

struct QuadricSpace {
  std::vector<Quadric> basis;    // all S_n-images of the hw quadrics, lowered
  long rank = 0;                 // exact rank of the coefficient matrix
  long zero_lowerings = 0;       // always 0; kept as a self-check
  bool rank_is_modular = false;  // full-row-rank certificate via a prime field
};

// Generates every S_n-image of the highest weight quadrics, closes under
// lowering monomials bounded by the weight, and computes the span rank
// (exact rationals up to n=4; for larger n a full-row-rank result over a
// 61-bit prime field certifies the rational rank).
QuadricSpace quadric_space(const GroundSet& gs);

// True when q is contained in the rational row space of the basis.
bool in_span(const std::vector<Quadric>& basis, const Quadric& q);

// Substitutes the minors of `trials` seeded random rational symmetric
// matrices; exact zero every time.  On failure reports the 1-based trial.
struct VanishReport {
  bool vanishes = true;
  int failing_trial = 0;
};
VanishReport verify_vanishing(const Quadric& q, int trials, unsigned seed = 1);

// Same substitution check for an arbitrary polynomial given as a term
// list (coefficient, symbol factors).
using SymbolPolynomial = std::vector<std::pair<mpq_class, std::vector<Symbol>>>;
VanishReport verify_vanishing_terms(const SymbolPolynomial& poly, int n, int trials,
                                    unsigned seed = 1);

int free_monomial_count(const SymbolTable& tab, const SymbolSet& members, const Quadric& q);
bool is_compatible(const Gaussoid& g, const Quadric& q);

struct CompatibilityReport {
  mpz_class gaussoids_checked = 0;
  std::size_t quadrics = 0;
  bool reduced_to_orbit_representatives = false;
  std::vector<std::pair<std::string, std::size_t>> violations;  // gaussoid line, quadric index
};

// Checks every census gaussoid against every basis quadric.  For n=5 the
// sweep runs on hyperoctahedral orbit representatives: the quadric space
// is stable under the cube symmetries, so compatibility is constant on
// orbits.
CompatibilityReport check_all_compatibility(const GroundSet& gs);

std::string quadric_to_string(const Quadric& q);

}  // namespace gsd
