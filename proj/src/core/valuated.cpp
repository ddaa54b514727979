#include "valuated.hpp"

#include <array>
#include <stdexcept>

namespace gsd {

Val operator+(const Val& a, const Val& b) {
  if (a.inf || b.inf) return Val::infinity();
  return Val::of(a.q + b.q);
}

bool val_less(const Val& a, const Val& b) {
  if (a.inf) return false;
  if (b.inf) return true;
  return a.q < b.q;
}

std::string val_str(const Val& v) { return v.inf ? "inf" : v.q.get_str(); }

ValuatedCheck is_valuated_gaussoid(const Valuation& nu) {
  for (const auto& t : all_trinomials(GroundSet(nu.n))) {
    std::array<Val, 3> tv;
    for (int i = 0; i < 3; ++i) tv[i] = nu.values[t.terms[i].a] + nu.values[t.terms[i].b];
    Val min = tv[0];
    for (int i = 1; i < 3; ++i)
      if (val_less(tv[i], min)) min = tv[i];
    int hits = 0;
    for (int i = 0; i < 3; ++i)
      if (tv[i] == min) ++hits;
    if (hits < 2) return ValuatedCheck{false, t};
  }
  return ValuatedCheck{true, std::nullopt};
}

std::vector<Symbol> tropical_order_n3() {
  const auto& tab = SymbolTable::get(3);
  std::vector<Symbol> order;
  for (const char* name : {"a12", "a12|3", "a13", "a13|2", "a23", "a23|1", "p", "p1", "p12",
                           "p123", "p13", "p2", "p23", "p3"})
    order.push_back(tab.parse_symbol(name));
  return order;
}

namespace {

Valuation from_coordinates(const std::array<int, 14>& coords) {
  static const std::vector<Symbol> order = tropical_order_n3();
  Valuation nu(3);
  for (int i = 0; i < 14; ++i) nu.at(order[i]) = Val::of(coords[i]);
  return nu;
}

}  // namespace

std::vector<Ray> ray_valuations_n3() {
  std::vector<Ray> rays;
  // Types a and p: the coordinate vectors themselves.
  for (int i = 0; i < 6; ++i) {
    std::array<int, 14> c{};
    c[i] = 1;
    rays.push_back({'a', from_coordinates(c)});
  }
  for (int i = 6; i < 14; ++i) {
    std::array<int, 14> c{};
    c[i] = 1;
    rays.push_back({'p', from_coordinates(c)});
  }
  // The three quadruples of a-coordinates sharing two pairs.
  const std::array<std::array<int, 4>, 3> quads = {{{0, 1, 2, 3}, {0, 1, 4, 5}, {2, 3, 4, 5}}};
  for (const auto& q : quads) {
    std::array<int, 14> c{};
    for (int i : q) c[i] = 1;
    rays.push_back({'A', from_coordinates(c)});
  }
  // Type B: a quadruple plus 2 on an incident pair of p-coordinates.
  const std::array<std::pair<int, std::pair<int, int>>, 12> type_b = {{
      {0, {6, 7}},    // p, p1
      {1, {6, 11}},   // p, p2
      {2, {6, 13}},   // p, p3
      {1, {7, 8}},    // p1, p12
      {2, {7, 10}},   // p1, p13
      {0, {11, 8}},   // p2, p12
      {2, {11, 12}},  // p2, p23
      {0, {13, 10}},  // p3, p13
      {1, {13, 12}},  // p3, p23
      {2, {8, 9}},    // p12, p123
      {1, {10, 9}},   // p13, p123
      {0, {12, 9}},   // p23, p123
  }};
  for (const auto& [quad, ps] : type_b) {
    std::array<int, 14> c{};
    for (int i : quads[quad]) c[i] = 1;
    c[ps.first] = 2;
    c[ps.second] = 2;
    rays.push_back({'B', from_coordinates(c)});
  }
  // Type C: two a-coordinates plus 2 on two p-coordinates.
  const std::array<std::array<int, 4>, 6> type_c = {{
      {0, 3, 11, 8},   // a12 + a13|2 + 2 p2 + 2 p12
      {4, 1, 13, 12},  // a23 + a12|3 + 2 p3 + 2 p23
      {4, 3, 11, 12},  // a23 + a13|2 + 2 p2 + 2 p23
      {3, 5, 8, 9},    // a13|2 + a23|1 + 2 p12 + 2 p123
      {1, 3, 12, 9},   // a12|3 + a13|2 + 2 p23 + 2 p123
      {1, 5, 10, 9},   // a12|3 + a23|1 + 2 p13 + 2 p123
  }};
  for (const auto& spec : type_c) {
    std::array<int, 14> c{};
    c[spec[0]] = 1;
    c[spec[1]] = 1;
    c[spec[2]] = 2;
    c[spec[3]] = 2;
    rays.push_back({'C', from_coordinates(c)});
  }
  return rays;
}

std::vector<Valuation> lineality_rows_n3() {
  const std::array<std::array<int, 14>, 4> rows = {{
      {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
      {0, 0, 0, 0, -1, 1, -1, 1, 1, 1, 1, -1, -1, -1},
      {0, 0, -1, 1, 0, 0, -1, -1, 1, 1, -1, 1, 1, -1},
      {-1, 1, 0, 0, 0, 0, -1, -1, -1, 1, 1, -1, 1, 1},
  }};
  std::vector<Valuation> out;
  for (const auto& r : rows) out.push_back(from_coordinates(r));
  return out;
}

Valuation add(const Valuation& a, const Valuation& b) {
  if (a.n != b.n) throw std::invalid_argument("valuation ground sets differ");
  Valuation out(a.n);
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] = a.values[i] + b.values[i];
  return out;
}

namespace {

Val poly_valuation(const EpsPoly& p) {
  auto v = p.valuation();
  return v ? Val::of(*v) : Val::infinity();
}

EpsPoly submatrix_det(const EpsMatrix& m, const std::vector<int>& rows,
                      const std::vector<int>& cols) {
  const int k = static_cast<int>(rows.size());
  std::vector<std::vector<EpsPoly>> sub(k, std::vector<EpsPoly>(k));
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c) sub[r][c] = m.at(rows[r], cols[c]);
  return det_eps(std::move(sub));
}

}  // namespace

Valuation minor_valuations(const EpsMatrix& m, bool concentration) {
  const int n = m.n();
  const auto& tab = SymbolTable::get(n);
  Valuation nu(n);
  std::optional<long> det_val;
  if (concentration) {
    std::vector<int> all;
    for (int i = 1; i <= n; ++i) all.push_back(i);
    det_val = submatrix_det(m, all, all).valuation();
    if (!det_val) throw std::domain_error("concentration matrix is singular");
  }
  for (int ord = 0; ord < tab.size(); ++ord) {
    const Symbol& s = tab.symbol(ord);
    std::vector<int> rows, cols;
    if (s.is_p()) {
      rows = mask_elements(s.set);
      cols = rows;
    } else {
      rows.push_back(s.i);
      cols.push_back(s.j);
      for (int e : mask_elements(s.set)) {
        rows.push_back(e);
        cols.push_back(e);
      }
    }
    if (!concentration) {
      nu.values[ord] = poly_valuation(submatrix_det(m, rows, cols));
      continue;
    }
    // Minor of the inverse via the complementary minor: up to sign,
    // det(inv(M)[R,C]) = det(M[C',R']) / det(M); only valuations matter.
    Mask rmask = 0, cmask = 0;
    for (int e : rows) rmask |= mask_of(e);
    for (int e : cols) cmask |= mask_of(e);
    std::vector<int> crows = mask_elements(full_mask(n) & ~cmask);
    std::vector<int> ccols = mask_elements(full_mask(n) & ~rmask);
    auto comp = submatrix_det(m, crows, ccols).valuation();
    if (!comp)
      nu.values[ord] = Val::infinity();
    else
      nu.values[ord] = Val::of(*comp - *det_val);
  }
  return nu;
}

}  // namespace gsd
