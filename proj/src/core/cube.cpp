#include "cube.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>

namespace gsd {

Symbol Symbol::A(int i, int j, Mask K) {
  if (i > j) std::swap(i, j);
  return Symbol{static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j), K};
}

SymbolTable::SymbolTable(int n) : n_(n) {
  p_count_ = 1 << n;
  a_count_ = (n * (n - 1) / 2) << (n - 2);
  p_idx_.assign(p_count_, -1);
  a_idx_.assign(std::size_t(pair_count()) << n, -1);
  syms_.reserve(size());
  for (Mask I : subsets_graded(full_mask(n))) {
    p_idx_[I] = static_cast<int>(syms_.size());
    syms_.push_back(Symbol::P(I));
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      Mask rest = full_mask(n) & ~(mask_of(i) | mask_of(j));
      for (Mask K : subsets_graded(rest)) {
        a_idx_[(std::size_t(pair_rank(i, j)) << n) | K] = static_cast<int>(syms_.size());
        syms_.push_back(Symbol::A(i, j, K));
      }
    }
}

const SymbolTable& SymbolTable::get(int n) {
  GroundSet check(n);
  static std::mutex mu;
  static std::map<int, std::unique_ptr<SymbolTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (!slot) slot.reset(new SymbolTable(n));
  return *slot;
}

int SymbolTable::pair_rank(int i, int j) const {
  // (1,2),(1,3),...,(1,n),(2,3),... lexicographic
  return (i - 1) * n_ - i * (i - 1) / 2 + (j - i - 1);
}

int SymbolTable::a_index(int i, int j, Mask K) const {
  if (i > j) std::swap(i, j);
  int idx = a_idx_[(std::size_t(pair_rank(i, j)) << n_) | K];
  if (idx < 0) throw std::invalid_argument("almost-principal symbol out of range");
  return idx;
}

int SymbolTable::index(const Symbol& s) const {
  if (s.is_p()) {
    if (s.set >= Mask(p_count_)) throw std::invalid_argument("principal symbol out of range");
    return p_idx_[s.set];
  }
  if (s.i < 1 || s.j > n_ || s.i >= s.j || (s.set & (mask_of(s.i) | mask_of(s.j))) ||
      s.set >= Mask(1 << n_))
    throw std::invalid_argument("almost-principal symbol out of range");
  return a_index(s.i, s.j, s.set);
}

std::string SymbolTable::name(const Symbol& s) {
  std::string out;
  if (s.is_p()) {
    out = "p";
    for (int e : mask_elements(s.set)) out += char('0' + e);
  } else {
    out = "a";
    out += char('0' + s.i);
    out += char('0' + s.j);
    if (s.set) {
      out += '|';
      for (int e : mask_elements(s.set)) out += char('0' + e);
    }
  }
  return out;
}

Symbol SymbolTable::parse_symbol(std::string_view token) const {
  auto fail = [&](const char* why) {
    throw std::invalid_argument("bad symbol '" + std::string(token) + "': " + why);
  };
  if (token.empty()) fail("empty token");
  auto digits = [&](std::string_view d, const char* what) -> Mask {
    Mask m = 0;
    int prev = 0;
    for (char c : d) {
      if (!std::isdigit(static_cast<unsigned char>(c))) fail("non-digit index");
      int e = c - '0';
      if (e < 1 || e > n_) fail("index outside the ground set");
      if (e <= prev) fail(what);
      prev = e;
      m |= mask_of(e);
    }
    return m;
  };
  if (token[0] == 'p') {
    return Symbol::P(digits(token.substr(1), "indices must be strictly ascending"));
  }
  if (token[0] == 'a') {
    if (token.size() < 3) fail("an a-symbol needs two indices");
    int i = token[1] - '0';
    int j = token[2] - '0';
    if (!std::isdigit(static_cast<unsigned char>(token[1])) ||
        !std::isdigit(static_cast<unsigned char>(token[2])))
      fail("non-digit pair");
    if (i < 1 || j > n_ || i >= j) fail("pair must satisfy 1 <= i < j <= n");
    Mask K = 0;
    if (token.size() > 3) {
      if (token[3] != '|') fail("expected '|' before the conditioning set");
      K = digits(token.substr(4), "conditioning indices must be strictly ascending");
      if (K == 0) fail("empty conditioning set after '|'");
    }
    if (K & (mask_of(i) | mask_of(j))) fail("conditioning set meets the pair");
    return Symbol::A(i, j, K);
  }
  fail("must start with 'p' or 'a'");
  return Symbol{};  // unreachable
}

std::vector<Trinomial> square_trinomials(const GroundSet& gs) {
  const auto& tab = SymbolTable::get(gs.n);
  std::vector<Trinomial> out;
  out.reserve(std::size_t(tab.a_count()));
  for (int i = 1; i <= gs.n; ++i)
    for (int j = i + 1; j <= gs.n; ++j) {
      Mask rest = full_mask(gs.n) & ~(mask_of(i) | mask_of(j));
      for (Mask K : subsets_graded(rest)) {
        Trinomial t;
        t.kind = Trinomial::Kind::Square;
        t.i = i;
        t.j = j;
        t.base = K;
        int a = tab.a_index(i, j, K);
        int piK = tab.p_index(K | mask_of(i));
        int pjK = tab.p_index(K | mask_of(j));
        int pijK = tab.p_index(K | mask_of(i) | mask_of(j));
        int pK = tab.p_index(K);
        t.terms = {TrinomialTerm{+1, a, a}, TrinomialTerm{-1, std::min(piK, pjK), std::max(piK, pjK)},
                   TrinomialTerm{+1, std::min(pijK, pK), std::max(pijK, pK)}};
        out.push_back(t);
      }
    }
  return out;
}

std::vector<Trinomial> edge_trinomials(const GroundSet& gs) {
  std::vector<Trinomial> out;
  if (gs.n < 3) return out;  // no 3-faces
  const auto& tab = SymbolTable::get(gs.n);
  out.reserve(std::size_t(12) * (gs.n * (gs.n - 1) * (gs.n - 2) / 6) << (gs.n - 3));
  for (int i = 1; i <= gs.n; ++i)
    for (int j = i + 1; j <= gs.n; ++j)
      for (int k = j + 1; k <= gs.n; ++k) {
        Mask face = mask_of(i) | mask_of(j) | mask_of(k);
        for (Mask M : subsets_graded(full_mask(gs.n) & ~face)) {
          for (int w : {i, j, k}) {
            int jp = (w == i) ? j : i;
            int kp = (w == k) ? j : k;  // {jp,kp} = face\{w}, jp < kp
            for (Mask I : subsets_graded(face & ~mask_of(w))) {
              Trinomial t;
              t.kind = Trinomial::Kind::Edge;
              t.i = i;
              t.j = j;
              t.k = k;
              t.w = w;
              t.base = I;
              t.outer = M;
              int p_hi = tab.p_index(I | mask_of(w) | M);
              int p_lo = tab.p_index(I | M);
              int a_free = tab.a_index(jp, kp, M);
              int a_cond = tab.a_index(jp, kp, M | mask_of(w));
              int a_wj = tab.a_index(w, jp, (I & ~mask_of(jp)) | M);
              int a_wk = tab.a_index(w, kp, (I & ~mask_of(kp)) | M);
              t.terms = {TrinomialTerm{+1, std::min(p_hi, a_free), std::max(p_hi, a_free)},
                         TrinomialTerm{-1, std::min(p_lo, a_cond), std::max(p_lo, a_cond)},
                         TrinomialTerm{-1, std::min(a_wj, a_wk), std::max(a_wj, a_wk)}};
              out.push_back(t);
            }
          }
        }
      }
  return out;
}

std::vector<Trinomial> all_trinomials(const GroundSet& gs) {
  std::vector<Trinomial> out = square_trinomials(gs);
  std::vector<Trinomial> edges = edge_trinomials(gs);
  out.insert(out.end(), edges.begin(), edges.end());
  return out;
}

SymmetricMatrix SymmetricMatrix::identity(int n) {
  SymmetricMatrix m(n);
  for (int i = 1; i <= n; ++i) m.set(i, i, 1);
  return m;
}

SymmetricMatrix SymmetricMatrix::from_rows(const std::vector<std::vector<mpq_class>>& rows) {
  int n = static_cast<int>(rows.size());
  SymmetricMatrix m(n);
  for (int i = 1; i <= n; ++i) {
    if (static_cast<int>(rows[i - 1].size()) != n)
      throw std::invalid_argument("matrix rows must have length n");
    for (int j = 1; j <= n; ++j) {
      if (i > j && rows[i - 1][j - 1] != rows[j - 1][i - 1])
        throw std::invalid_argument("matrix is not symmetric");
      m.set(i, j, rows[i - 1][j - 1]);
    }
  }
  return m;
}

SymmetricMatrix SymmetricMatrix::unit_diagonal(int n, const std::vector<mpq_class>& offdiag) {
  if (static_cast<int>(offdiag.size()) != n * (n - 1) / 2)
    throw std::invalid_argument("expected C(n,2) off-diagonal entries");
  SymmetricMatrix m = identity(n);
  std::size_t pos = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) m.set(i, j, offdiag[pos++]);
  return m;
}

mpz_class bareiss_det(std::vector<std::vector<mpz_class>> m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  mpz_class prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int piv = -1;
      for (int r = k + 1; r < n; ++r)
        if (m[r][k] != 0) {
          piv = r;
          break;
        }
      if (piv < 0) return 0;
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (int r = k + 1; r < n; ++r)
      for (int c = k + 1; c < n; ++c) {
        mpz_class num = m[r][c] * m[k][k] - m[r][k] * m[k][c];
        mpz_divexact(m[r][c].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : mpz_class(-m[n - 1][n - 1]);
}

mpq_class det_rational(std::vector<std::vector<mpq_class>> m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  mpz_class den = 1;
  for (const auto& row : m)
    for (const auto& v : row) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
  std::vector<std::vector<mpz_class>> mi(n, std::vector<mpz_class>(n));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      mpq_class scaled = m[r][c] * den;
      mi[r][c] = scaled.get_num();  // exact: den clears every denominator
    }
  mpq_class det(bareiss_det(std::move(mi)));
  mpz_class scale;
  mpz_pow_ui(scale.get_mpz_t(), den.get_mpz_t(), n);
  det /= mpq_class(scale);
  return det;
}

mpq_class evaluate_minor(const SymmetricMatrix& sigma, const Symbol& sym) {
  std::vector<int> rows, cols;
  if (sym.is_p()) {
    rows = mask_elements(sym.set);
    cols = rows;
  } else {
    rows.push_back(sym.i);
    cols.push_back(sym.j);
    for (int e : mask_elements(sym.set)) {
      rows.push_back(e);
      cols.push_back(e);
    }
  }
  const int k = static_cast<int>(rows.size());
  if (k == 0) return 1;  // p_empty
  std::vector<std::vector<mpq_class>> sub(k, std::vector<mpq_class>(k));
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c) sub[r][c] = sigma.at(rows[r], cols[c]);
  return det_rational(std::move(sub));
}

SymmetricMatrix inverse(const SymmetricMatrix& sigma) {
  const int n = sigma.n();
  // Gauss-Jordan over exact rationals on [sigma | I].
  std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(2 * n));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) m[r][c] = sigma.at(r + 1, c + 1);
    m[r][n + r] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (m[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::domain_error("matrix is singular");
    std::swap(m[col], m[piv]);
    mpq_class inv = 1 / m[col][col];
    for (int c = 0; c < 2 * n; ++c) m[col][c] *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      mpq_class f = m[r][col];
      for (int c = 0; c < 2 * n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  SymmetricMatrix out(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) out.set(i, j, m[i - 1][n + j - 1]);
  return out;
}

}  // namespace gsd
