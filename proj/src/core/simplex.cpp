#include "simplex.hpp"

#include <stdexcept>

namespace gsd {

LpResult simplex_max(const std::vector<std::vector<mpq_class>>& a,
                     const std::vector<mpq_class>& b, const std::vector<mpq_class>& c) {
  const int m = static_cast<int>(a.size());
  const int n = static_cast<int>(c.size());
  for (const auto& bi : b)
    if (bi < 0) throw std::invalid_argument("simplex_max needs b >= 0");
  // Tableau: columns 0..n-1 structural, n..n+m-1 slack, last column rhs.
  // Row m holds the reduced costs z_j - c_j.
  std::vector<std::vector<mpq_class>> t(m + 1, std::vector<mpq_class>(n + m + 1, 0));
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(a[i].size()) != n)
      throw std::invalid_argument("inconsistent constraint width");
    for (int j = 0; j < n; ++j) t[i][j] = a[i][j];
    t[i][n + i] = 1;
    t[i][n + m] = b[i];
  }
  for (int j = 0; j < n; ++j) t[m][j] = -c[j];
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = n + i;

  while (true) {
    // Bland: entering column with the smallest index among negative
    // reduced costs.
    int enter = -1;
    for (int j = 0; j < n + m; ++j)
      if (t[m][j] < 0) {
        enter = j;
        break;
      }
    if (enter < 0) break;
    // Ratio test, ties by smallest basis variable.
    int leave = -1;
    mpq_class best;
    for (int i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      mpq_class ratio = t[i][n + m] / t[i][enter];
      if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        best = ratio;
        leave = i;
      }
    }
    if (leave < 0) throw std::domain_error("simplex_max: unbounded objective");
    // Pivot.
    mpq_class piv = t[leave][enter];
    for (auto& v : t[leave]) v /= piv;
    for (int i = 0; i <= m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      mpq_class f = t[i][enter];
      for (int j = 0; j <= n + m; ++j) t[i][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }

  LpResult out;
  out.objective = t[m][n + m];
  out.primal.assign(n, 0);
  for (int i = 0; i < m; ++i)
    if (basis[i] < n) out.primal[basis[i]] = t[i][n + m];
  out.duals.assign(m, 0);
  for (int i = 0; i < m; ++i) out.duals[i] = t[m][n + i];
  return out;
}

}  // namespace gsd
