// CNF construction for the gaussoid axioms, DIMACS export, and a small
// deterministic backtracking solver (unit propagation, fixed branching
// order, false branch first) supporting AllSAT and exact model counting.
//
// Variable v in 1..|A| corresponds to the (v-1)-th a-symbol in canonical
// order; a positive literal means the symbol belongs to the gaussoid (the
// symbol takes the value zero).
#pragma once

#include <gmpxx.h>

#include <functional>
#include <string>
#include <vector>

#include "cube.hpp"

namespace gsd {

struct CnfFormula {
  int nvars = 0;
  std::vector<std::vector<int>> clauses;  // nonzero signed variable ids
};

// Seven clauses per ordered triple (i,j,k) and L subset of the rest: two
// each for (G1)-(G3) and one for (G4).  Duplicate clauses are kept so the
// clause count is exactly 7 * C(n,3) * 2^(n-3) * 3!.
CnfFormula build_gaussoid_cnf(const GroundSet& gs);

// Uniform orientation constraints over variables V_a (true <=> a maps to
// -1): four clauses per edge trinomial.
CnfFormula build_uniform_cnf(const GroundSet& gs);

// Positive maps over variables z_a (true <=> a maps to +1, false <=> 0):
// four clauses per edge trinomial.
CnfFormula build_positive_cnf(const GroundSet& gs);

// Ternary orientation search encoded with two booleans per symbol, for
// external reproduction only; includes one forbidden-configuration clause
// per symbol.
CnfFormula build_oriented_two_boolean_cnf(const GroundSet& gs);

// Byte-deterministic DIMACS text; `comments` go into leading 'c' lines.
std::string to_dimacs(const CnfFormula& f, const std::vector<std::string>& comments = {});

using ModelVisitor = std::function<void(const std::vector<bool>&)>;

// Visits every satisfying total assignment exactly once, in lexicographic
// order of the assignment vector (variable 1 most significant, false
// before true).  Duplicate clauses are deduplicated internally.  Returns
// the exact model count.
mpz_class solve_all(const CnfFormula& f, const ModelVisitor& visitor);

// Exact #SAT on an independent code path (no propagation queue, no
// visitor); used as a cross-check of solve_all.  `jobs` > 1 shards the
// search tree on the first branching variables; the count is unchanged.
mpz_class count_models(const CnfFormula& f, int jobs = 1);

}  // namespace gsd
