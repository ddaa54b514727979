// Valuated gaussoids: rational values on all of P u A such that every
// square and edge trinomial attains its term-valuation minimum at least
// twice, plus exact minor valuations of matrices over Q[e] and the 35
// tropical ray vectors for n=3.
//
// Values live in Q u {+inf}; +inf (an exactly vanishing minor) follows
// the min-plus convention and is an extension of the real-valued
// definition.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cube.hpp"
#include "epspoly.hpp"

namespace gsd {

struct Val {
  bool inf = false;
  mpq_class q = 0;

  static Val infinity() { return Val{true, 0}; }
  static Val of(const mpq_class& v) { return Val{false, v}; }
  bool operator==(const Val&) const = default;
};

Val operator+(const Val& a, const Val& b);
bool val_less(const Val& a, const Val& b);
std::string val_str(const Val& v);

// Total map on P u A, indexed by canonical symbol ordinal.
struct Valuation {
  int n = 0;
  std::vector<Val> values;

  Valuation() = default;
  explicit Valuation(int n_) : n(n_), values(SymbolTable::get(n_).size()) {}
  Val& at(const Symbol& s) { return values[SymbolTable::get(n).index(s)]; }
  const Val& at(const Symbol& s) const { return values[SymbolTable::get(n).index(s)]; }
};

// Checks the min-attained-twice condition over every square and edge
// trinomial; returns the first violating trinomial as a witness.
struct ValuatedCheck {
  bool ok = true;
  std::optional<Trinomial> witness;
};
ValuatedCheck is_valuated_gaussoid(const Valuation& nu);

// The fourteen symbols in the tropical coordinate order used for n=3 ray
// listings: a12, a12|3, a13, a13|2, a23, a23|1, p, p1, p12, p123, p13,
// p2, p23, p3.
std::vector<Symbol> tropical_order_n3();

// The 35 = 6+8+3+12+6 ray vectors (types a, p, A, B, C) as valuations.
struct Ray {
  char type;  // 'a', 'p', 'A', 'B', 'C'
  Valuation nu;
};
std::vector<Ray> ray_valuations_n3();

// The four lineality rows: all-ones and the three signed patterns.
std::vector<Valuation> lineality_rows_n3();

Valuation add(const Valuation& a, const Valuation& b);

// Valuations of every principal and almost-principal minor of an exact
// e-matrix.  When `concentration` is set the minors are those of the
// inverse, computed through complementary minors (no rational-function
// matrix is formed).  An exactly zero minor reports +inf.
Valuation minor_valuations(const EpsMatrix& m, bool concentration = false);

}  // namespace gsd
