#include "cnf.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <set>
#include <thread>

namespace gsd {

CnfFormula build_gaussoid_cnf(const GroundSet& gs) {
  if (gs.n < 3) throw std::invalid_argument("the axiom cnf needs n >= 3");
  const auto& tab = SymbolTable::get(gs.n);
  const int n = gs.n;
  CnfFormula f;
  f.nvars = tab.a_count();
  auto var = [&](int i, int j, Mask K) { return tab.a_offset(i, j, K) + 1; };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (j == i) continue;
      for (int k = 1; k <= n; ++k) {
        if (k == i || k == j) continue;
        Mask rest = full_mask(n) & ~(mask_of(i) | mask_of(j) | mask_of(k));
        for (Mask L = 0;; L = (L - rest) & rest) {
          int ij_L = var(i, j, L), ik_L = var(i, k, L);
          int ij_kL = var(i, j, L | mask_of(k)), ik_jL = var(i, k, L | mask_of(j));
          int jk_L = var(j, k, L);
          // (G1)  a_ij|L & a_ik|jL  =>  a_ik|L & a_ij|kL
          f.clauses.push_back({ik_L, -ij_L, -ik_jL});
          f.clauses.push_back({ij_kL, -ij_L, -ik_jL});
          // (G2)  a_ij|kL & a_ik|jL  =>  a_ij|L & a_ik|L
          f.clauses.push_back({ij_L, -ij_kL, -ik_jL});
          f.clauses.push_back({ik_L, -ij_kL, -ik_jL});
          // (G3)  a_ij|L & a_ik|L  =>  a_ij|kL & a_ik|jL
          f.clauses.push_back({ij_kL, -ij_L, -ik_L});
          f.clauses.push_back({ik_jL, -ij_L, -ik_L});
          // (G4)  a_ij|L & a_ij|kL  =>  a_ik|L | a_jk|L
          f.clauses.push_back({ik_L, jk_L, -ij_L, -ij_kL});
          if (L == rest) break;
        }
      }
    }
  return f;
}

namespace {

// The three terms of an edge trinomial carry exactly one a-factor in the
// two mixed terms and two in the pure term, with signs (+,-,-).
struct EdgeVars {
  int a, b, c, d;  // 1-based cnf variables for a1, a2, x, y
};

EdgeVars edge_vars(const SymbolTable& tab, const Trinomial& t) {
  assert(t.kind == Trinomial::Kind::Edge);
  const int pc = tab.p_count();
  auto a_of = [&](const TrinomialTerm& term) {
    assert((term.a < pc) != (term.b < pc));
    return (term.a >= pc ? term.a : term.b) - pc + 1;
  };
  assert(t.terms[0].coeff == 1 && t.terms[1].coeff == -1 && t.terms[2].coeff == -1);
  assert(t.terms[2].a >= pc && t.terms[2].b >= pc);
  return EdgeVars{a_of(t.terms[0]), a_of(t.terms[1]), t.terms[2].a - pc + 1,
                  t.terms[2].b - pc + 1};
}

}  // namespace

CnfFormula build_uniform_cnf(const GroundSet& gs) {
  const auto& tab = SymbolTable::get(gs.n);
  CnfFormula f;
  f.nvars = tab.a_count();
  for (const auto& t : edge_trinomials(gs)) {
    auto [a, b, c, d] = edge_vars(tab, t);
    // Forbid all three terms taking the same sign (V true <=> symbol -> -1).
    f.clauses.push_back({a, -b, c, -d});
    f.clauses.push_back({a, -b, -c, d});
    f.clauses.push_back({-a, b, c, d});
    f.clauses.push_back({-a, b, -c, -d});
  }
  return f;
}

CnfFormula build_positive_cnf(const GroundSet& gs) {
  const auto& tab = SymbolTable::get(gs.n);
  CnfFormula f;
  f.nvars = tab.a_count();
  for (const auto& t : edge_trinomials(gs)) {
    auto [a, b, c, d] = edge_vars(tab, t);
    // z true <=> symbol -> +1; a positive term appears iff a negative does.
    f.clauses.push_back({-a, b, c});
    f.clauses.push_back({-a, b, d});
    f.clauses.push_back({a, -b});
    f.clauses.push_back({a, -c, -d});
  }
  return f;
}

CnfFormula build_oriented_two_boolean_cnf(const GroundSet& gs) {
  const auto& tab = SymbolTable::get(gs.n);
  CnfFormula f;
  f.nvars = 2 * tab.a_count();
  // Symbol t is encoded by variables 2t+1, 2t+2:
  // (0,0) -> +1, (1,0) -> -1, (0,1) -> 0, (1,1) forbidden.
  for (int t = 0; t < tab.a_count(); ++t) f.clauses.push_back({-(2 * t + 1), -(2 * t + 2)});
  auto decode = [](int b1, int b2) { return b2 ? 0 : (b1 ? -1 : +1); };
  for (const auto& t : edge_trinomials(gs)) {
    auto [a, b, c, d] = edge_vars(tab, t);
    int sym[4] = {a - 1, b - 1, c - 1, d - 1};  // a-offsets
    for (unsigned bits = 0; bits < 256; ++bits) {
      int val[4];
      bool forbidden = false;
      for (int s = 0; s < 4; ++s) {
        int b1 = (bits >> (2 * s)) & 1, b2 = (bits >> (2 * s + 1)) & 1;
        if (b1 && b2) forbidden = true;
        val[s] = decode(b1, b2);
      }
      if (forbidden) continue;  // covered by the per-symbol clause
      int t1 = val[0], t2 = -val[1], t3 = -val[2] * val[3];
      bool has_pos = t1 > 0 || t2 > 0 || t3 > 0;
      bool has_neg = t1 < 0 || t2 < 0 || t3 < 0;
      if (has_pos == has_neg) continue;  // allowed sign set
      std::vector<int> clause;
      for (int s = 0; s < 4; ++s) {
        int b1 = (bits >> (2 * s)) & 1, b2 = (bits >> (2 * s + 1)) & 1;
        clause.push_back(b1 ? -(2 * sym[s] + 1) : (2 * sym[s] + 1));
        clause.push_back(b2 ? -(2 * sym[s] + 2) : (2 * sym[s] + 2));
      }
      f.clauses.push_back(std::move(clause));
    }
  }
  return f;
}

std::string to_dimacs(const CnfFormula& f, const std::vector<std::string>& comments) {
  std::string out;
  for (const auto& c : comments) out += "c " + c + "\n";
  out += "p cnf " + std::to_string(f.nvars) + " " + std::to_string(f.clauses.size()) + "\n";
  for (const auto& clause : f.clauses) {
    for (int lit : clause) {
      out += std::to_string(lit);
      out += ' ';
    }
    out += "0\n";
  }
  return out;
}

namespace {

// Deduplicated, tautology-free clause list with sorted literals.
std::vector<std::vector<int>> clean_clauses(const CnfFormula& f) {
  std::set<std::vector<int>> uniq;
  for (auto clause : f.clauses) {
    std::sort(clause.begin(), clause.end(),
              [](int x, int y) { return std::abs(x) != std::abs(y) ? std::abs(x) < std::abs(y) : x < y; });
    clause.erase(std::unique(clause.begin(), clause.end()), clause.end());
    bool taut = false;
    for (std::size_t i = 0; i + 1 < clause.size(); ++i)
      if (clause[i] == -clause[i + 1]) taut = true;
    if (!taut) uniq.insert(std::move(clause));
  }
  return {uniq.begin(), uniq.end()};
}

// Backtracking enumerator with unit propagation and counter-based clause
// states (satisfied-literal and unassigned-literal counts per clause; an
// assignment only touches the occurrence lists of the flipped variable).
class AllSatSearch {
 public:
  AllSatSearch(int nvars, std::vector<std::vector<int>> clauses, const ModelVisitor& visitor)
      : nvars_(nvars),
        clauses_(std::move(clauses)),
        visitor_(visitor),
        value_(nvars + 1, 0),
        model_(nvars, false) {
    pos_occ_.resize(nvars + 1);
    neg_occ_.resize(nvars + 1);
    sat_count_.assign(clauses_.size(), 0);
    unassigned_.resize(clauses_.size());
    for (std::size_t ci = 0; ci < clauses_.size(); ++ci) {
      unassigned_[ci] = static_cast<int>(clauses_[ci].size());
      for (int lit : clauses_[ci]) (lit > 0 ? pos_occ_ : neg_occ_)[std::abs(lit)].push_back(ci);
    }
  }

  mpz_class run() {
    for (const auto& c : clauses_)
      if (c.empty()) return 0;
    search(1);
    return count_;
  }

 private:
  // Assigns and drains the unit queue; returns false on conflict (the
  // trail still records everything assigned, so undo_to stays exact).
  bool assign_and_propagate(int var, bool val) {
    units_.clear();
    if (!assign(var, val)) return false;
    std::size_t qi = 0;
    while (qi < units_.size()) {
      int lit = units_[qi++];
      int v = std::abs(lit);
      if (value_[v] != 0) {
        if ((value_[v] > 0) != (lit > 0)) return false;
        continue;
      }
      if (!assign(v, lit > 0)) return false;
    }
    return true;
  }

  bool assign(int var, bool val) {
    value_[var] = val ? 1 : -1;
    trail_.push_back(var);
    const auto& made_true = val ? pos_occ_[var] : neg_occ_[var];
    const auto& made_false = val ? neg_occ_[var] : pos_occ_[var];
    for (std::size_t ci : made_true) ++sat_count_[ci];
    bool ok = true;
    for (std::size_t ci : made_false) {
      if (--unassigned_[ci] > 1 || sat_count_[ci] > 0) continue;
      if (unassigned_[ci] == 0) {
        ok = false;
      } else {
        for (int lit : clauses_[ci])
          if (value_[std::abs(lit)] == 0) {
            units_.push_back(lit);
            break;
          }
      }
    }
    return ok;
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      int var = trail_.back();
      trail_.pop_back();
      bool val = value_[var] > 0;
      const auto& made_true = val ? pos_occ_[var] : neg_occ_[var];
      const auto& made_false = val ? neg_occ_[var] : pos_occ_[var];
      for (std::size_t ci : made_true) --sat_count_[ci];
      for (std::size_t ci : made_false) ++unassigned_[ci];
      value_[var] = 0;
    }
  }

  void search(int from_var) {
    int var = from_var;
    while (var <= nvars_ && value_[var] != 0) ++var;
    if (var > nvars_) {
      if (visitor_) {
        for (int v = 1; v <= nvars_; ++v) model_[v - 1] = value_[v] > 0;
        visitor_(model_);
      }
      ++count_;
      return;
    }
    for (bool val : {false, true}) {
      std::size_t mark = trail_.size();
      if (assign_and_propagate(var, val)) search(var + 1);
      undo_to(mark);
    }
  }

  int nvars_;
  std::vector<std::vector<int>> clauses_;
  const ModelVisitor& visitor_;
  std::vector<int> value_;
  std::vector<bool> model_;
  std::vector<std::vector<std::size_t>> pos_occ_, neg_occ_;
  std::vector<int> sat_count_, unassigned_;
  std::vector<int> trail_;
  std::vector<int> units_;
  mpz_class count_ = 0;
};

}  // namespace

mpz_class solve_all(const CnfFormula& f, const ModelVisitor& visitor) {
  AllSatSearch search(f.nvars, clean_clauses(f), visitor);
  return search.run();
}

namespace {

// Plain recursive counter over a fixed clause list: clauses are evaluated
// on the fly, forced literals are applied eagerly, and fully satisfied
// residues contribute 2^(free variables).  Kept free of the solver's
// occurrence/trail machinery so the two counts are independent.
class CountSearch {
 public:
  CountSearch(int nvars, const std::vector<std::vector<int>>& clauses)
      : nvars_(nvars), clauses_(clauses), value_(nvars + 1, 0) {}

  mpz_class count(const std::vector<std::pair<int, bool>>& assumptions) {
    for (auto [var, val] : assumptions) value_[var] = val ? 1 : -1;
    mpz_class out = recurse();
    for (auto [var, val] : assumptions) value_[var] = 0;
    return out;
  }

 private:
  mpz_class recurse() {
    // Evaluate every clause; find a forced literal or a branching variable.
    while (true) {
      int forced = 0;
      bool all_satisfied = true;
      for (const auto& clause : clauses_) {
        bool satisfied = false;
        int unassigned = 0, last_free = 0;
        for (int lit : clause) {
          int v = value_[std::abs(lit)];
          if (v == 0) {
            ++unassigned;
            last_free = lit;
          } else if ((v > 0) == (lit > 0)) {
            satisfied = true;
            break;
          }
        }
        if (satisfied) continue;
        if (unassigned == 0) return 0;
        all_satisfied = false;
        if (unassigned == 1) forced = last_free;
      }
      if (all_satisfied) {
        int free = 0;
        for (int v = 1; v <= nvars_; ++v)
          if (value_[v] == 0) ++free;
        mpz_class out;
        mpz_ui_pow_ui(out.get_mpz_t(), 2, free);
        return out;
      }
      if (forced == 0) break;
      value_[std::abs(forced)] = forced > 0 ? 1 : -1;
      forced_trail_.push_back(std::abs(forced));
      // Re-evaluate with the forced literal in place.
      mpz_class out = recurse();
      value_[forced_trail_.back()] = 0;
      forced_trail_.pop_back();
      return out;
    }
    // Branch on the lowest-index variable of the first unsatisfied clause.
    int var = 0;
    for (const auto& clause : clauses_) {
      bool satisfied = false;
      int lowest = 0;
      for (int lit : clause) {
        int v = value_[std::abs(lit)];
        if ((v > 0) == (lit > 0) && v != 0) {
          satisfied = true;
          break;
        }
        if (v == 0 && (lowest == 0 || std::abs(lit) < lowest)) lowest = std::abs(lit);
      }
      if (!satisfied && lowest) {
        var = lowest;
        break;
      }
    }
    mpz_class total = 0;
    for (int sign : {-1, 1}) {
      value_[var] = sign;
      total += recurse();
    }
    value_[var] = 0;
    return total;
  }

  int nvars_;
  const std::vector<std::vector<int>>& clauses_;
  std::vector<int> value_;
  std::vector<int> forced_trail_;
};

}  // namespace

mpz_class count_models(const CnfFormula& f, int jobs) {
  for (const auto& clause : f.clauses)
    if (clause.empty()) return 0;
  if (jobs <= 1 || f.nvars == 0) {
    CountSearch search(f.nvars, f.clauses);
    return search.count({});
  }
  // Static sharding on the first k variables.
  int k = 1;
  while ((1 << k) < 4 * jobs && k < f.nvars && k < 12) ++k;
  const int shards = 1 << k;
  std::vector<mpz_class> partial(shards, 0);
  std::atomic<int> next{0};
  auto worker = [&]() {
    CountSearch search(f.nvars, f.clauses);
    while (true) {
      int shard = next.fetch_add(1);
      if (shard >= shards) break;
      std::vector<std::pair<int, bool>> assumptions;
      for (int v = 0; v < k; ++v) assumptions.emplace_back(v + 1, (shard >> v) & 1);
      partial[shard] = search.count(assumptions);
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  mpz_class total = 0;
  for (const auto& p : partial) total += p;
  return total;
}

}  // namespace gsd
