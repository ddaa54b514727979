// Canonical indexing of the principal/almost-principal symbol set on the
// n-cube, the square and edge trinomials, and exact evaluation of the
// corresponding minors of a rational symmetric matrix.
//
// Symbols: p_I for I subset of [n], and a_{ij|K} for i<j, K subset of
// [n]\{i,j}.  Canonical order: all p-symbols in graded-lex subset order,
// then all a-symbols by pair (i,j) lex, then K graded-lex.
//
// Sign convention for a_{ij|K}: determinant of the submatrix with rows
// (i, then K ascending) and columns (j, then K ascending).
#pragma once

#include <array>
#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "smallset.hpp"

namespace gsd {

struct GroundSet {
  int n;
  explicit GroundSet(int n_) : n(n_) {
    if (n < 2 || n > 9) throw std::invalid_argument("ground set size must be in 2..9");
  }
};

// i == 0 marks a p-symbol (set = I); otherwise 1 <= i < j <= n and set = K.
struct Symbol {
  std::uint8_t i = 0;
  std::uint8_t j = 0;
  Mask set = 0;

  bool is_p() const { return i == 0; }
  static Symbol P(Mask I) { return Symbol{0, 0, I}; }
  static Symbol A(int i, int j, Mask K);
  bool operator==(const Symbol&) const = default;
};

class SymbolTable {
 public:
  // Cached per-n tables; valid for the lifetime of the process.
  static const SymbolTable& get(int n);

  int n() const { return n_; }
  int p_count() const { return p_count_; }
  int a_count() const { return a_count_; }
  int size() const { return p_count_ + a_count_; }
  int pair_count() const { return n_ * (n_ - 1) / 2; }

  const Symbol& symbol(int ordinal) const { return syms_[ordinal]; }
  const std::vector<Symbol>& symbols() const { return syms_; }

  int index(const Symbol& s) const;
  int p_index(Mask I) const { return p_idx_[I]; }
  int a_index(int i, int j, Mask K) const;  // ordinal in the full table
  int a_offset(int i, int j, Mask K) const { return a_index(i, j, K) - p_count_; }
  // Offset within the A-block for an ordinal known to be an A-symbol.
  int a_offset(int ordinal) const { return ordinal - p_count_; }

  std::string name(int ordinal) const { return name(symbol(ordinal)); }
  static std::string name(const Symbol& s);
  // Parses the text grammar: p, p13, a12, a13|24.  Throws std::invalid_argument
  // with a descriptive message on malformed or out-of-range tokens.
  Symbol parse_symbol(std::string_view token) const;

 private:
  explicit SymbolTable(int n);
  int n_, p_count_, a_count_;
  std::vector<Symbol> syms_;
  std::vector<int> p_idx_;    // by mask
  std::vector<int> a_idx_;    // pair_rank * 2^n + K mask
  int pair_rank(int i, int j) const;  // (i,j), i<j, lex rank
};

struct TrinomialTerm {
  int coeff;  // +1 or -1
  int a, b;   // symbol ordinals, a <= b
};

// A square or edge trinomial, stored structurally (template parameters)
// plus in expanded form.
struct Trinomial {
  enum class Kind { Square, Edge };
  Kind kind;
  // Square: pair (i,j), conditioning set K (outer unused).
  // Edge: face triple {i,j,k} with direction w in the triple, base
  // I subset of triple\{w}, outer M subset of [n]\triple.
  std::uint8_t i = 0, j = 0, k = 0, w = 0;
  Mask base = 0, outer = 0;
  std::array<TrinomialTerm, 3> terms;
};

// One trinomial a_{ij|K}^2 - p_{iK} p_{jK} + p_{ijK} p_K per 2-face;
// count 2^{n-2} * C(n,2).
std::vector<Trinomial> square_trinomials(const GroundSet& gs);

// Twelve trinomials per 3-face of the cube (direction w and base I inside
// the face, every subscript augmented by the outer set M); count
// 12 * 2^{n-3} * C(n,3).  Empty for n < 3.
std::vector<Trinomial> edge_trinomials(const GroundSet& gs);

// Square and edge trinomials together, squares first.
std::vector<Trinomial> all_trinomials(const GroundSet& gs);

class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(int n) : n_(n), e_(std::size_t(n) * n) {}
  static SymmetricMatrix identity(int n);
  // Entries given row by row; throws if not symmetric.
  static SymmetricMatrix from_rows(const std::vector<std::vector<mpq_class>>& rows);
  // Unit diagonal, off-diagonal entries in the order
  // (s12, s13, ..., s1n, s23, ..., s_{n-1,n}).
  static SymmetricMatrix unit_diagonal(int n, const std::vector<mpq_class>& offdiag);

  int n() const { return n_; }
  const mpq_class& at(int i, int j) const { return e_[std::size_t(i - 1) * n_ + (j - 1)]; }
  void set(int i, int j, const mpq_class& v) {
    e_[std::size_t(i - 1) * n_ + (j - 1)] = v;
    e_[std::size_t(j - 1) * n_ + (i - 1)] = v;
  }

 private:
  int n_;
  std::vector<mpq_class> e_;  // row-major, 1-based accessors
};

// Exact minor with the pinned sign convention; p_empty = 1.
mpq_class evaluate_minor(const SymmetricMatrix& sigma, const Symbol& sym);

// Exact determinant of a dense rational matrix (fraction-free elimination
// on the denominator-cleared integer matrix).
mpq_class det_rational(std::vector<std::vector<mpq_class>> m);

// Exact inverse; throws std::domain_error on singular input.
SymmetricMatrix inverse(const SymmetricMatrix& sigma);

// Exact determinant of an integer matrix, Bareiss elimination.
mpz_class bareiss_det(std::vector<std::vector<mpz_class>> m);

}  // namespace gsd
