#include "algebra.hpp"

#include <algorithm>
#include <cassert>
#include <filesystem>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "enumerate.hpp"
#include "symmetry.hpp"

namespace gsd {

void Quadric::add(int a, int b, const mpq_class& coeff) {
  if (coeff == 0) return;
  auto key = std::minmax(a, b);
  auto [it, fresh] = terms.emplace(std::pair<int, int>(key.first, key.second), coeff);
  if (!fresh) {
    it->second += coeff;
    if (it->second == 0) terms.erase(it);
  }
}

Weight weight(const Symbol& s, int n) {
  Weight w{};
  for (int k = 1; k <= n; ++k) {
    if (s.is_p())
      w[k] = mask_has(s.set, k) ? -1 : +1;
    else if (k == s.i || k == s.j)
      w[k] = 0;
    else
      w[k] = mask_has(s.set, k) ? -1 : +1;
  }
  return w;
}

Weight weight(const Quadric& q) {
  if (q.is_zero()) throw std::invalid_argument("the zero quadric has no weight");
  const auto& tab = SymbolTable::get(q.n);
  bool first = true;
  Weight w{};
  for (const auto& [mono, coeff] : q.terms) {
    Weight wa = weight(tab.symbol(mono.first), q.n);
    Weight wb = weight(tab.symbol(mono.second), q.n);
    Weight sum{};
    for (int k = 1; k <= q.n; ++k) sum[k] = wa[k] + wb[k];
    if (first) {
      w = sum;
      first = false;
    } else if (sum != w) {
      throw std::invalid_argument("quadric is not weight-homogeneous");
    }
  }
  return w;
}

namespace {

std::optional<Symbol> lower_symbol(const Symbol& s, int k) {
  if (s.is_p()) {
    if (mask_has(s.set, k)) return std::nullopt;
    return Symbol::P(s.set | mask_of(k));
  }
  if (k == s.i || k == s.j || mask_has(s.set, k)) return std::nullopt;
  return Symbol::A(s.i, s.j, s.set | mask_of(k));
}

std::optional<Symbol> raise_symbol(const Symbol& s, int k) {
  if (!mask_has(s.set, k)) return std::nullopt;
  if (s.is_p()) return Symbol::P(s.set & ~mask_of(k));
  return Symbol::A(s.i, s.j, s.set & ~mask_of(k));
}

template <typename Op>
Quadric leibniz(const Quadric& q, int k, Op&& op) {
  const auto& tab = SymbolTable::get(q.n);
  Quadric out(q.n);
  for (const auto& [mono, coeff] : q.terms) {
    Symbol sa = tab.symbol(mono.first);
    Symbol sb = tab.symbol(mono.second);
    if (auto img = op(sa, k)) out.add(tab.index(*img), mono.second, coeff);
    if (auto img = op(sb, k)) out.add(mono.first, tab.index(*img), coeff);
  }
  return out;
}

}  // namespace

Quadric lower(const Quadric& q, int k) {
  return leibniz(q, k, [](const Symbol& s, int kk) { return lower_symbol(s, kk); });
}

Quadric raise(const Quadric& q, int k) {
  return leibniz(q, k, [](const Symbol& s, int kk) { return raise_symbol(s, kk); });
}

Quadric hw_quadric(QuadricKind kind, int m, const GroundSet& gs) {
  const auto& tab = SymbolTable::get(gs.n);
  Quadric q(gs.n);
  auto p = [&](Mask I) { return tab.p_index(I); };
  auto a = [&](int i, int j, Mask K) { return tab.a_index(i, j, K); };
  switch (kind) {
    case QuadricKind::I: {
      q.add(p(mask_of(1) | mask_of(2)), p(0), 1);
      q.add(p(mask_of(1)), p(mask_of(2)), -1);
      q.add(a(1, 2, 0), a(1, 2, 0), 1);
      return q;
    }
    case QuadricKind::II:
    case QuadricKind::III: {
      if (kind == QuadricKind::II && (m < 3 || m > gs.n || m % 2 == 0))
        throw std::invalid_argument("kind II needs odd m in 3..n");
      if (kind == QuadricKind::III && (m < 4 || m > gs.n || m % 2 == 1))
        throw std::invalid_argument("kind III needs even m in 4..n");
      Mask block = full_mask(m);
      if (kind == QuadricKind::II) {
        Mask rest = block & ~(mask_of(1) | mask_of(2));
        for (Mask L = 0;; L = (L - rest) & rest) {
          q.add(p(L), a(1, 2, rest & ~L), (mask_size(L) % 2) ? -1 : 1);
          if (L == rest) break;
        }
      }
      for (int j = 3; j <= m; ++j) {
        Mask rest = block & ~(mask_of(1) | mask_of(2) | mask_of(j));
        for (Mask K = 0;; K = (K - rest) & rest) {
          q.add(a(1, j, K), a(2, j, rest & ~K), (mask_size(K) % 2) ? -1 : 1);
          if (K == rest) break;
        }
      }
      return q;
    }
    case QuadricKind::IV: {
      if (m <= 3 || m > gs.n || m % 2 == 1)
        throw std::invalid_argument("kind IV needs even m in 4..n");
      Mask block = full_mask(m);
      for (Mask L = 0;; L = (L - block) & block) {
        q.add(p(L), p(block & ~L), (mask_size(L) % 2) ? -1 : 1);
        if (L == block) break;
      }
      for (int j = 2; j <= m; ++j) {
        Mask rest = block & ~(mask_of(1) | mask_of(j));
        for (Mask K = 0;; K = (K - rest) & rest) {
          q.add(a(1, j, K), a(1, j, rest & ~K), (mask_size(K) % 2) ? -2 : 2);
          if (K == rest) break;
        }
      }
      return q;
    }
  }
  throw std::logic_error("unreachable");
}

long dim_formula(int n) {
  if (n < 2) throw std::invalid_argument("dimension formula needs n >= 2");
  auto binom = [](int a, int b) -> long {
    if (b < 0 || b > a) return 0;
    long r = 1;
    for (int t = 1; t <= b; ++t) r = r * (a - b + t) / t;
    return r;
  };
  auto pow3 = [](int e) {
    long r = 1;
    while (e-- > 0) r *= 3;
    return r;
  };
  long dim = pow3(n - 2) * binom(n, 2);
  for (int m = 3; m <= n; ++m) dim += 4 * pow3(n - m) * binom(n, m) * binom(m, 2);
  for (int k = 2; 2 * k <= n; ++k) dim += 2L * k * pow3(n - 2 * k) * binom(n, 2 * k);
  return dim;
}

mpz_class lgr_degree(int n) {
  if (n < 2) throw std::invalid_argument("degree formula needs n >= 2");
  mpz_class num;
  mpz_fac_ui(num.get_mpz_t(), n * (n + 1) / 2);
  for (int t = 2; t <= n; ++t) {
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2 * t - 1, n + 1 - t);
    mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  }
  return num;
}

namespace {

Quadric permute(const Quadric& q, const std::array<std::uint8_t, 10>& perm) {
  const auto& tab = SymbolTable::get(q.n);
  CubeSymmetry g{perm, 0};
  Quadric out(q.n);
  for (const auto& [mono, coeff] : q.terms) {
    Symbol sa = act_symbol(g, tab.symbol(mono.first), q.n);
    Symbol sb = act_symbol(g, tab.symbol(mono.second), q.n);
    out.add(tab.index(sa), tab.index(sb), coeff);
  }
  return out;
}

// Sign-normalized copy for dedup: leading coefficient positive.
Quadric normalized(Quadric q) {
  if (!q.terms.empty() && q.terms.begin()->second < 0)
    for (auto& [mono, coeff] : q.terms) coeff = -coeff;
  return q;
}

// Dense integer rows over the monomial column space.
std::vector<std::vector<mpz_class>> coefficient_rows(const std::vector<Quadric>& qs, int n) {
  const auto& tab = SymbolTable::get(n);
  const int s = tab.size();
  auto col = [&](int a, int b) {  // a <= b
    return a * s - a * (a - 1) / 2 + (b - a);
  };
  const int cols = s * (s + 1) / 2;
  std::vector<std::vector<mpz_class>> rows;
  rows.reserve(qs.size());
  for (const auto& q : qs) {
    std::vector<mpz_class> row(cols, 0);
    for (const auto& [mono, coeff] : q.terms) {
      assert(coeff.get_den() == 1);
      row[col(mono.first, mono.second)] = coeff.get_num();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

// Fraction-free row echelon rank of an integer matrix.
long rank_exact(std::vector<std::vector<mpz_class>> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class num = m[i][j] * m[r][c] - m[i][c] * m[r][j];
        mpz_divexact(m[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return static_cast<long>(r);
}

// Rank over GF(2^61-1); a full-row-rank outcome certifies the rational rank.
long rank_modular(const std::vector<std::vector<mpz_class>>& input) {
  if (input.empty()) return 0;
  constexpr std::uint64_t P = (std::uint64_t{1} << 61) - 1;
  auto mulmod = [](std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % P);
  };
  const std::size_t rows = input.size(), cols = input[0].size();
  std::vector<std::vector<std::uint64_t>> m(rows, std::vector<std::uint64_t>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      mpz_class v = input[i][j] % static_cast<long>(P);
      long x = v.get_si();
      m[i][j] = x < 0 ? x + P : x;
    }
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    // Normalize pivot row.
    std::uint64_t inv = 1, base = m[r][c], e = P - 2;
    while (e) {
      if (e & 1) inv = mulmod(inv, base);
      base = mulmod(base, base);
      e >>= 1;
    }
    for (std::size_t j = c; j < cols; ++j) m[r][j] = mulmod(m[r][j], inv);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      std::uint64_t f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) {
        std::uint64_t sub = mulmod(f, m[r][j]);
        m[i][j] = m[i][j] >= sub ? m[i][j] - sub : m[i][j] + P - sub;
      }
    }
    ++r;
  }
  return static_cast<long>(r);
}

}  // namespace

QuadricSpace quadric_space(const GroundSet& gs) {
  if (gs.n > 6) throw std::invalid_argument("quadric span is desk-scale: n <= 6");
  std::vector<Quadric> hws;
  hws.push_back(hw_quadric(QuadricKind::I, 0, gs));
  for (int m = 3; m <= gs.n; m += 2) hws.push_back(hw_quadric(QuadricKind::II, m, gs));
  for (int m = 4; m <= gs.n; m += 2) {
    hws.push_back(hw_quadric(QuadricKind::III, m, gs));
    hws.push_back(hw_quadric(QuadricKind::IV, m, gs));
  }
  // All S_n-images, deduplicated up to sign.
  std::set<std::map<std::pair<int, int>, mpq_class>> seen;
  std::vector<Quadric> images;
  for (const auto& g : group_elements(gs.n, SymGroup::SN))
    for (const auto& hw : hws) {
      Quadric img = normalized(permute(hw, g.perm));
      if (seen.insert(img.terms).second) images.push_back(img);
    }
  QuadricSpace out;
  for (const auto& img : images) {
    Weight w = weight(img);
    // Apply every lowering monomial bounded by the weight.
    std::function<void(int, const Quadric&)> descend = [&](int k, const Quadric& q) {
      if (k > gs.n) {
        out.basis.push_back(q);
        return;
      }
      Quadric cur = q;
      int cap = std::max(w[k], 0);
      for (int t = 0; t <= cap; ++t) {
        descend(k + 1, cur);
        if (t < cap) {
          cur = lower(cur, k);
          if (cur.is_zero()) {
            ++out.zero_lowerings;
            return;
          }
        }
      }
    };
    descend(1, img);
  }
  auto rows = coefficient_rows(out.basis, gs.n);
  if (gs.n <= 4) {
    out.rank = rank_exact(std::move(rows));
  } else {
    out.rank = rank_modular(rows);
    out.rank_is_modular = true;
    if (out.rank < static_cast<long>(out.basis.size()))
      out.rank = rank_exact(std::move(rows));  // rare: certify exactly
  }
  return out;
}

bool in_span(const std::vector<Quadric>& basis, const Quadric& q) {
  if (basis.empty()) return q.is_zero();
  const int n = basis.front().n;
  std::vector<Quadric> all = basis;
  all.push_back(q);
  auto rows_with = coefficient_rows(all, n);
  auto rows_without = rows_with;
  rows_without.pop_back();
  return rank_exact(std::move(rows_without)) == rank_exact(std::move(rows_with));
}

namespace {

SymmetricMatrix seeded_random_matrix(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  SymmetricMatrix m(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      mpq_class v(num(rng), den(rng));
      v.canonicalize();
      m.set(i, j, v);
    }
  return m;
}

}  // namespace

VanishReport verify_vanishing(const Quadric& q, int trials, unsigned seed) {
  const auto& tab = SymbolTable::get(q.n);
  std::mt19937_64 rng(seed);
  for (int trial = 1; trial <= trials; ++trial) {
    SymmetricMatrix m = seeded_random_matrix(q.n, rng);
    std::vector<std::optional<mpq_class>> cache(tab.size());
    auto value = [&](int ord) -> const mpq_class& {
      if (!cache[ord]) cache[ord] = evaluate_minor(m, tab.symbol(ord));
      return *cache[ord];
    };
    mpq_class sum = 0;
    for (const auto& [mono, coeff] : q.terms) sum += coeff * value(mono.first) * value(mono.second);
    if (sum != 0) return VanishReport{false, trial};
  }
  return VanishReport{true, 0};
}

VanishReport verify_vanishing_terms(const SymbolPolynomial& poly, int n, int trials,
                                    unsigned seed) {
  const auto& tab = SymbolTable::get(n);
  std::mt19937_64 rng(seed);
  for (int trial = 1; trial <= trials; ++trial) {
    SymmetricMatrix m = seeded_random_matrix(n, rng);
    std::vector<std::optional<mpq_class>> cache(tab.size());
    auto value = [&](const Symbol& s) {
      int ord = tab.index(s);
      if (!cache[ord]) cache[ord] = evaluate_minor(m, s);
      return *cache[ord];
    };
    mpq_class sum = 0;
    for (const auto& [coeff, factors] : poly) {
      mpq_class prod = coeff;
      for (const auto& s : factors) prod *= value(s);
      sum += prod;
    }
    if (sum != 0) return VanishReport{false, trial};
  }
  return VanishReport{true, 0};
}

int free_monomial_count(const SymbolTable& tab, const SymbolSet& members, const Quadric& q) {
  const int pc = tab.p_count();
  int free = 0;
  for (const auto& [mono, coeff] : q.terms) {
    bool hit = (mono.first >= pc && members.test(mono.first - pc)) ||
               (mono.second >= pc && members.test(mono.second - pc));
    if (!hit) ++free;
  }
  return free;
}

bool is_compatible(const Gaussoid& g, const Quadric& q) {
  return free_monomial_count(SymbolTable::get(g.n), g.members, q) != 1;
}

CompatibilityReport check_all_compatibility(const GroundSet& gs) {
  if (gs.n > 5) throw std::invalid_argument("compatibility sweep is desk-scale: n <= 5");
  CompatibilityReport report;
  auto space = quadric_space(gs);
  report.quadrics = space.basis.size();
  const auto& tab = SymbolTable::get(gs.n);
  auto check = [&](const Gaussoid& g) {
    ++report.gaussoids_checked;
    for (std::size_t qi = 0; qi < space.basis.size(); ++qi)
      if (free_monomial_count(tab, g.members, space.basis[qi]) == 1)
        report.violations.emplace_back(to_line(g), qi);
  };
  if (gs.n <= 4) {
    enumerate_gaussoids(gs, check);
  } else {
    // Compatibility is an orbit invariant for the cube symmetries (they
    // permute the quadric space's monomial supports), so representatives
    // suffice.
    report.reduced_to_orbit_representatives = true;
    auto scratch = std::filesystem::temp_directory_path() / "gaussoid_sweep";
    streamed_orbit_reps(gs, SymGroup::HYPEROCT, scratch.string(),
                        [&](const Gaussoid& rep, std::size_t) { check(rep); });
  }
  return report;
}

std::string quadric_to_string(const Quadric& q) {
  const auto& tab = SymbolTable::get(q.n);
  if (q.is_zero()) return "0";
  std::string out;
  for (const auto& [mono, coeff] : q.terms) {
    mpq_class c = coeff;
    if (out.empty()) {
      if (c < 0) {
        out += "-";
        c = -c;
      }
    } else {
      out += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    }
    if (c != 1) out += c.get_str() + "*";
    if (mono.first == mono.second)
      out += tab.name(mono.first) + "^2";
    else
      out += tab.name(mono.first) + "*" + tab.name(mono.second);
  }
  return out;
}

}  // namespace gsd
