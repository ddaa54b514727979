#include "enumerate.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <cstdio>
#include <filesystem>
#include <stdexcept>

namespace gsd {

mpz_class enumerate_gaussoids(const GroundSet& gs, const GaussoidVisitor& visitor) {
  CnfFormula f = build_gaussoid_cnf(gs);
  return solve_all(f, [&](const std::vector<bool>& model) {
    if (!visitor) return;
    Gaussoid g(gs.n);
    for (std::size_t t = 0; t < model.size(); ++t)
      if (model[t]) g.members.set(static_cast<int>(t));
    visitor(g);
  });
}

mpz_class count_gaussoids(const GroundSet& gs, int jobs) {
  return count_models(build_gaussoid_cnf(gs), jobs);
}

namespace {

// Ternary search state for the ALL mode.  Terms are tracked per trinomial:
// a term is determined once all of its a-factors are assigned or any
// assigned factor is zero.
class TernarySearch {
 public:
  TernarySearch(const GroundSet& gs, const OrientedVisitor& visitor)
      : n_(gs.n),
        tab_(SymbolTable::get(gs.n)),
        trinomials_(edge_trinomials(gs)),
        visitor_(visitor),
        value_(tab_.a_count(), kUnassigned) {
    occ_.resize(tab_.a_count());
    for (std::size_t ti = 0; ti < trinomials_.size(); ++ti) {
      int last = 0;
      for (const auto& term : trinomials_[ti].terms)
        for (int ord : {term.a, term.b})
          if (ord >= tab_.p_count()) last = std::max(last, ord - tab_.p_count());
      occ_[last].push_back(ti);
    }
  }

  mpz_class run() {
    search(0);
    return count_;
  }

 private:
  static constexpr int kUnassigned = 2;

  int term_value(const TrinomialTerm& term) const {
    int v = term.coeff;
    for (int ord : {term.a, term.b}) {
      if (ord < tab_.p_count()) continue;  // p-factors evaluate to +1
      int s = value_[ord - tab_.p_count()];
      assert(s != kUnassigned);
      v *= s;
    }
    return v;
  }

  bool trinomial_ok(const Trinomial& t) const {
    bool pos = false, neg = false;
    for (const auto& term : t.terms) {
      int v = term_value(term);
      pos |= v > 0;
      neg |= v < 0;
    }
    return pos == neg;  // {0}, {-1,+1} or {-1,0,+1}
  }

  void search(int offset) {
    if (offset == tab_.a_count()) {
      ++count_;
      if (visitor_) {
        OrientedGaussoid phi(n_);
        for (int t = 0; t < tab_.a_count(); ++t) phi.set_value(t, value_[t]);
        visitor_(phi);
      }
      return;
    }
    for (int v : {0, +1, -1}) {
      value_[offset] = v;
      bool ok = true;
      for (std::size_t ti : occ_[offset])
        if (!trinomial_ok(trinomials_[ti])) {
          ok = false;
          break;
        }
      if (ok) search(offset + 1);
    }
    value_[offset] = kUnassigned;
  }

  int n_;
  const SymbolTable& tab_;
  std::vector<Trinomial> trinomials_;
  const OrientedVisitor& visitor_;
  std::vector<int> value_;
  std::vector<std::vector<std::size_t>> occ_;  // trinomials completed by each symbol
  mpz_class count_ = 0;
};

OrientedGaussoid oriented_from_uniform_model(int n, const std::vector<bool>& model) {
  OrientedGaussoid phi(n);
  for (std::size_t t = 0; t < model.size(); ++t)
    phi.set_value(static_cast<int>(t), model[t] ? -1 : +1);
  return phi;
}

OrientedGaussoid oriented_from_positive_model(int n, const std::vector<bool>& model) {
  OrientedGaussoid phi(n);
  for (std::size_t t = 0; t < model.size(); ++t)
    phi.set_value(static_cast<int>(t), model[t] ? +1 : 0);
  return phi;
}

}  // namespace

mpz_class enumerate_oriented(const GroundSet& gs, OrientedMode mode,
                             const OrientedVisitor& visitor) {
  if (gs.n < 3) throw std::invalid_argument("oriented censuses need n >= 3");
  switch (mode) {
    case OrientedMode::ALL: {
      TernarySearch search(gs, visitor);
      return search.run();
    }
    case OrientedMode::UNIFORM:
      return solve_all(build_uniform_cnf(gs), [&](const std::vector<bool>& m) {
        if (visitor) visitor(oriented_from_uniform_model(gs.n, m));
      });
    case OrientedMode::POSITIVE:
      return solve_all(build_positive_cnf(gs), [&](const std::vector<bool>& m) {
        if (visitor) visitor(oriented_from_positive_model(gs.n, m));
      });
  }
  return 0;
}

mpz_class count_oriented(const GroundSet& gs, OrientedMode mode) {
  if (gs.n < 3) throw std::invalid_argument("oriented censuses need n >= 3");
  switch (mode) {
    case OrientedMode::ALL: {
      TernarySearch search(gs, nullptr);
      return search.run();
    }
    case OrientedMode::UNIFORM:
      return count_models(build_uniform_cnf(gs));
    case OrientedMode::POSITIVE:
      return count_models(build_positive_cnf(gs));
  }
  return 0;
}

std::vector<OrientedGaussoid> enumerate_orientations(const Gaussoid& g) {
  const GroundSet gs(g.n);
  const auto& tab = SymbolTable::get(g.n);
  // Variables range over the symbols outside G; V true <=> symbol -> -1.
  std::vector<int> var_of(tab.a_count(), 0);
  std::vector<int> sym_of;
  for (int t = 0; t < tab.a_count(); ++t)
    if (!g.members.test(t)) {
      sym_of.push_back(t);
      var_of[t] = static_cast<int>(sym_of.size());
    }
  CnfFormula f;
  f.nvars = static_cast<int>(sym_of.size());
  for (const auto& t : edge_trinomials(gs)) {
    // Mutilation: a term containing a member of G evaluates to zero and is
    // dropped; a gaussoid never leaves exactly one term alive.
    std::vector<std::pair<int, std::vector<int>>> alive;  // sign, variables
    for (const auto& term : t.terms) {
      bool dead = false;
      std::vector<int> vars;
      for (int ord : {term.a, term.b}) {
        if (ord < tab.p_count()) continue;
        int off = ord - tab.p_count();
        if (g.members.test(off))
          dead = true;
        else
          vars.push_back(var_of[off]);
      }
      if (!dead) alive.emplace_back(term.coeff, std::move(vars));
    }
    if (alive.empty()) continue;
    if (alive.size() == 1)
      throw std::invalid_argument("zero set is not a gaussoid: lone term in an edge relation");
    // Block every assignment of the involved variables whose term signs
    // come out all equal.
    std::vector<int> vars;
    for (const auto& [sign, vs] : alive)
      for (int v : vs) vars.push_back(v);
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    const int k = static_cast<int>(vars.size());
    for (unsigned bits = 0; bits < (1u << k); ++bits) {
      auto value = [&](int var) {
        int idx = static_cast<int>(std::lower_bound(vars.begin(), vars.end(), var) - vars.begin());
        return (bits >> idx) & 1 ? -1 : +1;
      };
      int first = 0;
      bool all_same = true;
      for (const auto& [sign, vs] : alive) {
        int v = sign;
        for (int var : vs) v *= value(var);
        if (first == 0)
          first = v;
        else
          all_same &= (v == first);
      }
      if (!all_same) continue;
      std::vector<int> clause;
      for (int idx = 0; idx < k; ++idx)
        clause.push_back((bits >> idx) & 1 ? -vars[idx] : vars[idx]);
      f.clauses.push_back(std::move(clause));
    }
  }
  std::vector<OrientedGaussoid> out;
  solve_all(f, [&](const std::vector<bool>& model) {
    OrientedGaussoid phi(g.n);
    for (int t = 0; t < tab.a_count(); ++t) {
      if (g.members.test(t))
        phi.set_value(t, 0);
      else
        phi.set_value(t, model[var_of[t] - 1] ? -1 : +1);
    }
    out.push_back(phi);
  });
  return out;
}

std::vector<Gaussoid> all_gaussoids(const GroundSet& gs) {
  std::vector<Gaussoid> out;
  enumerate_gaussoids(gs, [&](const Gaussoid& g) { out.push_back(g); });
  return out;
}

std::vector<OrientedGaussoid> all_oriented(const GroundSet& gs, OrientedMode mode) {
  std::vector<OrientedGaussoid> out;
  enumerate_oriented(gs, mode, [&](const OrientedGaussoid& phi) { out.push_back(phi); });
  return out;
}

namespace {

// 80 bits fit in ten bytes for the n=5 bucket files.
std::array<unsigned char, 10> pack10(const SymbolSet& s) {
  std::array<unsigned char, 10> out{};
  const auto& words = s.words();
  for (int byte = 0; byte < 10; ++byte) {
    std::size_t wi = byte / 8;
    if (wi < words.size()) out[byte] = (words[wi] >> (8 * (byte % 8))) & 0xff;
  }
  return out;
}

}  // namespace

StreamedOrbitCount streamed_orbit_reps(const GroundSet& gs, SymGroup group,
                                       const std::string& scratch_dir,
                                       const OrbitRepVisitor& visitor) {
  const auto& tab = SymbolTable::get(gs.n);
  if (tab.a_count() > 80)
    throw std::invalid_argument("streamed orbit counting is sized for n <= 5");
  namespace fs = std::filesystem;
  fs::create_directories(scratch_dir);
  const int buckets = tab.a_count() + 1;
  std::vector<FILE*> files(buckets, nullptr);
  std::vector<fs::path> paths(buckets);
  for (int c = 0; c < buckets; ++c) {
    paths[c] = fs::path(scratch_dir) / ("bucket_" + std::to_string(c) + ".bin");
    files[c] = std::fopen(paths[c].string().c_str(), "wb");
    if (!files[c]) throw std::runtime_error("cannot open scratch file " + paths[c].string());
  }
  mpz_class total = enumerate_gaussoids(gs, [&](const Gaussoid& g) {
    auto bytes = pack10(g.members);
    std::fwrite(bytes.data(), 1, bytes.size(), files[g.members.count()]);
  });
  for (FILE* fp : files) std::fclose(fp);

  // Precompute the group's a-block permutations once.
  std::vector<std::vector<int>> tables;
  for (const auto& g : group_elements(gs.n, group)) tables.push_back(a_permutation(g, gs.n));

  std::size_t orbits = 0;
  using Key = unsigned __int128;
  auto unpack_key = [](const unsigned char* b) {
    Key k = 0;
    for (int i = 9; i >= 0; --i) k = (k << 8) | b[i];
    return k;
  };
  for (int c = 0; c < buckets; ++c) {
    std::vector<Key> items;
    {
      FILE* fp = std::fopen(paths[c].string().c_str(), "rb");
      std::fseek(fp, 0, SEEK_END);
      long size = std::ftell(fp);
      std::fseek(fp, 0, SEEK_SET);
      items.reserve(size / 10);
      std::array<unsigned char, 10> buf;
      while (std::fread(buf.data(), 1, 10, fp) == 10) items.push_back(unpack_key(buf.data()));
      std::fclose(fp);
    }
    fs::remove(paths[c]);
    std::sort(items.begin(), items.end());
    std::vector<bool> seen(items.size(), false);
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (seen[i]) continue;
      ++orbits;
      std::size_t orbit_size = 0;
      for (const auto& table : tables) {
        Key img = 0;
        Key m = items[i];
        while (m) {
          std::uint64_t lo = static_cast<std::uint64_t>(m);
          int bit = lo ? __builtin_ctzll(lo)
                       : 64 + __builtin_ctzll(static_cast<std::uint64_t>(m >> 64));
          img |= Key(1) << table[bit];
          m &= m - 1;
        }
        auto it = std::lower_bound(items.begin(), items.end(), img);
        if (it == items.end() || *it != img)
          throw std::logic_error("orbit image missing from its cardinality bucket");
        std::size_t pos = it - items.begin();
        if (!seen[pos]) {
          seen[pos] = true;
          ++orbit_size;
        }
      }
      if (visitor) {
        Gaussoid rep(gs.n);
        Key m = items[i];
        while (m) {
          std::uint64_t lo = static_cast<std::uint64_t>(m);
          int bit = lo ? __builtin_ctzll(lo)
                       : 64 + __builtin_ctzll(static_cast<std::uint64_t>(m >> 64));
          rep.members.set(bit);
          m &= m - 1;
        }
        visitor(rep, orbit_size);
      }
    }
  }
  return StreamedOrbitCount{total, orbits};
}

StreamedOrbitCount streamed_orbit_count(const GroundSet& gs, SymGroup group,
                                        const std::string& scratch_dir) {
  return streamed_orbit_reps(gs, group, scratch_dir, nullptr);
}

}  // namespace gsd
