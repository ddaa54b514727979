#include "gaussoid.hpp"

#include <array>
#include <stdexcept>

namespace gsd {

int SymbolSet::count() const {
  int c = 0;
  for (auto word : w_) c += __builtin_popcountll(word);
  return c;
}

bool SymbolSet::any() const {
  for (auto word : w_)
    if (word) return true;
  return false;
}

std::vector<int> SymbolSet::bits() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < w_.size(); ++i) {
    std::uint64_t word = w_[i];
    while (word) {
      out.push_back(static_cast<int>(i * 64 + __builtin_ctzll(word)));
      word &= word - 1;
    }
  }
  return out;
}

bool SymbolSet::lex_less(const SymbolSet& o) const {
  for (std::size_t i = 0; i < w_.size(); ++i) {
    std::uint64_t x = w_[i] ^ o.w_[i];
    if (x) {
      int bit = __builtin_ctzll(x);
      return !((w_[i] >> bit) & 1);
    }
  }
  return false;
}

std::size_t SymbolSet::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto word : w_) {
    h ^= word;
    h *= 1099511628211ull;
  }
  return h;
}

namespace {

// Bundled fast accessors for axiom loops.
struct AView {
  const SymbolTable& tab;
  const SymbolSet& s;
  bool has(int i, int j, Mask K) const { return s.test(tab.a_offset(i, j, K)); }
};

}  // namespace

bool is_gaussoid_axioms(const Gaussoid& g) {
  const auto& tab = SymbolTable::get(g.n);
  AView v{tab, g.members};
  const int n = g.n;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (j == i) continue;
      for (int k = 1; k <= n; ++k) {
        if (k == i || k == j) continue;
        Mask rest = full_mask(n) & ~(mask_of(i) | mask_of(j) | mask_of(k));
        for (Mask L = 0;; L = (L - rest) & rest) {
          // (G1)
          if (v.has(i, j, L) && v.has(i, k, L | mask_of(j)) &&
              !(v.has(i, k, L) && v.has(i, j, L | mask_of(k))))
            return false;
          // (G2)
          if (v.has(i, j, L | mask_of(k)) && v.has(i, k, L | mask_of(j)) &&
              !(v.has(i, j, L) && v.has(i, k, L)))
            return false;
          // (G3)
          if (v.has(i, j, L) && v.has(i, k, L) &&
              !(v.has(i, j, L | mask_of(k)) && v.has(i, k, L | mask_of(j))))
            return false;
          // (G4)
          if (v.has(i, j, L) && v.has(i, j, L | mask_of(k)) &&
              !(v.has(i, k, L) || v.has(j, k, L)))
            return false;
          if (L == rest) break;
        }
      }
    }
  return true;
}

int free_term_count(const SymbolTable& tab, const SymbolSet& members, const Trinomial& t) {
  int free = 0;
  const int pc = tab.p_count();
  for (const auto& term : t.terms) {
    bool hit = (term.a >= pc && members.test(term.a - pc)) ||
               (term.b >= pc && members.test(term.b - pc));
    if (!hit) ++free;
  }
  return free;
}

bool is_compatible(const Gaussoid& g, const Trinomial& t) {
  return free_term_count(SymbolTable::get(g.n), g.members, t) != 1;
}

namespace {

const std::vector<Trinomial>& cached_edge_trinomials(int n) {
  static std::array<std::vector<Trinomial>, 10> cache;
  static std::array<bool, 10> ready{};
  if (!ready[n]) {
    cache[n] = edge_trinomials(GroundSet(n));
    ready[n] = true;
  }
  return cache[n];
}

}  // namespace

bool is_gaussoid_trinomials(const Gaussoid& g) {
  const auto& tab = SymbolTable::get(g.n);
  for (const auto& t : cached_edge_trinomials(g.n))
    if (free_term_count(tab, g.members, t) == 1) return false;
  return true;
}

bool is_gaussoid_faces(const Gaussoid& g) {
  // The eleven gaussoids on [3] as masks over (a12, a12|3, a13, a13|2, a23, a23|1).
  static constexpr std::array<std::uint8_t, 11> kThreeGaussoids = {0,  1,  2,  4,  8, 16,
                                                                   32, 15, 51, 60, 63};
  const auto& tab = SymbolTable::get(g.n);
  const int n = g.n;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        Mask face = mask_of(i) | mask_of(j) | mask_of(k);
        Mask rest = full_mask(n) & ~face;
        for (Mask M = 0;; M = (M - rest) & rest) {
          std::uint8_t r = 0;
          if (g.members.test(tab.a_offset(i, j, M))) r |= 1;
          if (g.members.test(tab.a_offset(i, j, M | mask_of(k)))) r |= 2;
          if (g.members.test(tab.a_offset(i, k, M))) r |= 4;
          if (g.members.test(tab.a_offset(i, k, M | mask_of(j)))) r |= 8;
          if (g.members.test(tab.a_offset(j, k, M))) r |= 16;
          if (g.members.test(tab.a_offset(j, k, M | mask_of(i)))) r |= 32;
          bool ok = false;
          for (auto m : kThreeGaussoids) ok |= (m == r);
          if (!ok) return false;
          if (M == rest) break;
        }
      }
  return true;
}

Gaussoid dual(const Gaussoid& g) {
  const auto& tab = SymbolTable::get(g.n);
  Gaussoid out(g.n);
  for (int t : g.members.bits()) {
    const Symbol& s = tab.symbol(tab.p_count() + t);
    Mask K = full_mask(g.n) & ~(s.set | mask_of(s.i) | mask_of(s.j));
    out.members.set(tab.a_offset(s.i, s.j, K));
  }
  return out;
}

Gaussoid marginalize(const Gaussoid& g, int u) {
  const auto& tab = SymbolTable::get(g.n);
  Gaussoid out(g.n - 1);
  const auto& sub = SymbolTable::get(g.n - 1);
  for (int t : g.members.bits()) {
    const Symbol& s = tab.symbol(tab.p_count() + t);
    if (s.i == u || s.j == u || mask_has(s.set, u)) continue;
    int i = s.i > u ? s.i - 1 : s.i;
    int j = s.j > u ? s.j - 1 : s.j;
    out.members.set(sub.a_offset(i, j, mask_drop_element(s.set, u)));
  }
  return out;
}

Gaussoid condition(const Gaussoid& g, int u) {
  const auto& tab = SymbolTable::get(g.n);
  Gaussoid out(g.n - 1);
  const auto& sub = SymbolTable::get(g.n - 1);
  for (int t : g.members.bits()) {
    const Symbol& s = tab.symbol(tab.p_count() + t);
    if (s.i == u || s.j == u || !mask_has(s.set, u)) continue;
    int i = s.i > u ? s.i - 1 : s.i;
    int j = s.j > u ? s.j - 1 : s.j;
    out.members.set(sub.a_offset(i, j, mask_drop_element(s.set & ~mask_of(u), u)));
  }
  return out;
}

bool separates(const Graph& graph, int i, int j, Mask K) {
  // BFS from i avoiding K.
  Mask visited = mask_of(i);
  Mask frontier = visited;
  while (frontier) {
    Mask next = 0;
    for (int v : mask_elements(frontier)) next |= graph.adj[v];
    next &= ~visited & ~K;
    if (mask_has(next, j)) return false;
    visited |= next;
    frontier = next;
  }
  return true;
}

Gaussoid graph_gaussoid(const Graph& graph) {
  const auto& tab = SymbolTable::get(graph.n);
  Gaussoid out(graph.n);
  for (int t = 0; t < tab.a_count(); ++t) {
    const Symbol& s = tab.symbol(tab.p_count() + t);
    if (separates(graph, s.i, s.j, s.set)) out.members.set(t);
  }
  return out;
}

MatrixGaussoid gaussoid_of_matrix(const SymmetricMatrix& sigma) {
  const auto& tab = SymbolTable::get(sigma.n());
  MatrixGaussoid out{Gaussoid(sigma.n()), true};
  for (int ord = 0; ord < tab.p_count(); ++ord) {
    mpq_class v = evaluate_minor(sigma, tab.symbol(ord));
    if (v == 0)
      throw std::domain_error("degenerate matrix: principal minor " + tab.name(ord) +
                              " vanishes");
    if (v < 0) out.positive_definite = false;
  }
  for (int t = 0; t < tab.a_count(); ++t)
    if (evaluate_minor(sigma, tab.symbol(tab.p_count() + t)) == 0) out.gaussoid.members.set(t);
  return out;
}

std::string to_line(const Gaussoid& g) {
  const auto& tab = SymbolTable::get(g.n);
  std::string out;
  for (int t : g.members.bits()) {
    if (!out.empty()) out += ',';
    out += tab.name(tab.p_count() + t);
  }
  return out;
}

std::string to_bitstring_line(const Gaussoid& g) {
  std::string out = "#b";
  for (int t = 0; t < g.members.size(); ++t) out += g.members.test(t) ? '1' : '0';
  return out;
}

Gaussoid parse_gaussoid_line(int n, std::string_view line) {
  const auto& tab = SymbolTable::get(n);
  Gaussoid out(n);
  // Trim surrounding whitespace.
  while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
  while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r'))
    line.remove_suffix(1);
  if (line.rfind("#b", 0) == 0) {
    std::string_view bits = line.substr(2);
    if (static_cast<int>(bits.size()) != tab.a_count())
      throw std::invalid_argument("bitstring length must equal the number of a-symbols");
    for (int t = 0; t < tab.a_count(); ++t) {
      if (bits[t] == '1')
        out.members.set(t);
      else if (bits[t] != '0')
        throw std::invalid_argument("bitstring must consist of 0/1");
    }
    return out;
  }
  if (line.empty()) return out;
  std::size_t pos = 0;
  while (pos <= line.size()) {
    std::size_t comma = line.find(',', pos);
    std::string_view tok = line.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (!tok.empty()) {
      Symbol s = tab.parse_symbol(tok);
      if (s.is_p()) throw std::invalid_argument("gaussoid members must be a-symbols");
      out.members.set(tab.a_offset(s.i, s.j, s.set));
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace gsd
