// Dense exact-rational primal simplex for the small certificate LPs:
// maximize c^T x subject to A x <= b, x >= 0, with b >= 0 so the slack
// basis is feasible.  Bland's rule, hence terminating; returns the primal
// optimum and the dual values on the rows.
#pragma once

#include <gmpxx.h>

#include <vector>

namespace gsd {

struct LpResult {
  mpq_class objective;
  std::vector<mpq_class> primal;  // structural variables
  std::vector<mpq_class> duals;   // one per row, >= 0 at optimality
};

LpResult simplex_max(const std::vector<std::vector<mpq_class>>& a,
                     const std::vector<mpq_class>& b, const std::vector<mpq_class>& c);

}  // namespace gsd
