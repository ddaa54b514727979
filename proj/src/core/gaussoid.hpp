// Gaussoids: subsets of the almost-principal symbols, with the axiom,
// trinomial-compatibility and 3-face checkers, duality, marginal and
// conditional minors, graph gaussoids, and the gaussoid of a matrix.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cube.hpp"

namespace gsd {

// Dynamic bitset over the A-symbols in canonical A-order (bit t = t-th
// A-symbol).  Comparison is lexicographic on the bitstring read in symbol
// order, absent-before-present.
class SymbolSet {
 public:
  SymbolSet() = default;
  explicit SymbolSet(int nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

  int size() const { return nbits_; }
  bool test(int t) const { return (w_[t >> 6] >> (t & 63)) & 1; }
  void set(int t) { w_[t >> 6] |= std::uint64_t{1} << (t & 63); }
  void reset(int t) { w_[t >> 6] &= ~(std::uint64_t{1} << (t & 63)); }
  void assign(int t, bool v) { v ? set(t) : reset(t); }
  int count() const;
  bool any() const;
  std::vector<int> bits() const;

  bool operator==(const SymbolSet&) const = default;
  // Lex order on the bitstring: the set lacking the first differing
  // symbol is smaller.
  bool lex_less(const SymbolSet& o) const;

  std::size_t hash() const;
  const std::vector<std::uint64_t>& words() const { return w_; }

 private:
  int nbits_ = 0;
  std::vector<std::uint64_t> w_;
};

struct SymbolSetHash {
  std::size_t operator()(const SymbolSet& s) const { return s.hash(); }
};

struct Gaussoid {
  int n = 0;
  SymbolSet members;  // over the A-block, canonical order

  Gaussoid() = default;
  explicit Gaussoid(int n_) : n(n_), members(SymbolTable::get(n_).a_count()) {}
  bool operator==(const Gaussoid&) const = default;
};

struct Graph {
  int n = 0;
  Mask adj[10] = {};  // adjacency masks, 1-based vertices

  explicit Graph(int n_ = 0) : n(n_) {}
  void add_edge(int u, int v) {
    adj[u] |= mask_of(v);
    adj[v] |= mask_of(u);
  }
  bool has_edge(int u, int v) const { return mask_has(adj[u], v); }
};

// Axiom checker: (G1)-(G4) over all pairwise distinct i,j,k and
// L subset of [n]\{i,j,k}.
bool is_gaussoid_axioms(const Gaussoid& g);

// Number of terms of the trinomial free of S (no a-factor in S; p-factors
// never count), and the compatibility predicate: compatible unless exactly
// one term is free.
int free_term_count(const SymbolTable& tab, const SymbolSet& members, const Trinomial& t);
bool is_compatible(const Gaussoid& g, const Trinomial& t);

// Compatibility with every edge trinomial (equivalent to the axioms).
bool is_gaussoid_trinomials(const Gaussoid& g);

// Restriction to every 3-face lies in the frozen list of the eleven
// gaussoids on three elements (independent of the other two checkers).
bool is_gaussoid_faces(const Gaussoid& g);

Gaussoid dual(const Gaussoid& g);
Gaussoid marginalize(const Gaussoid& g, int u);
Gaussoid condition(const Gaussoid& g, int u);

// a_{ij|K} is a member iff K separates i from j in the graph.
Gaussoid graph_gaussoid(const Graph& graph);
bool separates(const Graph& graph, int i, int j, Mask K);

struct MatrixGaussoid {
  Gaussoid gaussoid;
  bool positive_definite;
};

// Vanishing almost-principal minors of sigma plus a positive-definiteness
// flag (all 2^n principal minors positive).  Throws std::domain_error when
// some principal minor is zero (degenerate matrix, no pinned convention).
MatrixGaussoid gaussoid_of_matrix(const SymmetricMatrix& sigma);

// Formatting / parsing of the gaussoid line format: comma-separated symbol
// tokens, or '#b' followed by a |A|-character bitstring in canonical order.
std::string to_line(const Gaussoid& g);
std::string to_bitstring_line(const Gaussoid& g);
Gaussoid parse_gaussoid_line(int n, std::string_view line);

}  // namespace gsd
