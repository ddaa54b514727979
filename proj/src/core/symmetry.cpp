#include "symmetry.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace gsd {

CubeSymmetry CubeSymmetry::identity(int n) {
  CubeSymmetry g;
  for (int i = 1; i <= n; ++i) g.perm[i] = i;
  return g;
}

std::vector<CubeSymmetry> group_elements(int n, SymGroup grp) {
  std::vector<std::array<std::uint8_t, 10>> perms;
  std::array<int, 10> p{};
  std::iota(p.begin() + 1, p.begin() + n + 1, 1);
  do {
    std::array<std::uint8_t, 10> a{};
    for (int i = 1; i <= n; ++i) a[i] = p[i];
    perms.push_back(a);
  } while (std::next_permutation(p.begin() + 1, p.begin() + n + 1));

  std::vector<Mask> flips;
  switch (grp) {
    case SymGroup::SN:
      flips = {0};
      break;
    case SymGroup::DUAL_SN:
      flips = {0, full_mask(n)};
      break;
    case SymGroup::HYPEROCT:
      for (Mask f = 0; f <= full_mask(n); ++f) flips.push_back(f);
      break;
  }
  std::vector<CubeSymmetry> out;
  out.reserve(perms.size() * flips.size());
  for (Mask f : flips)
    for (const auto& perm : perms) out.push_back(CubeSymmetry{perm, f});
  return out;
}

namespace {

Mask apply_perm(const std::array<std::uint8_t, 10>& perm, Mask m) {
  Mask out = 0;
  while (m) {
    int b = __builtin_ctz(m);
    out |= mask_of(perm[b + 1]);
    m &= m - 1;
  }
  return out;
}

}  // namespace

Symbol act_symbol(const CubeSymmetry& g, const Symbol& s, int n) {
  (void)n;
  if (s.is_p()) return Symbol::P(apply_perm(g.perm, s.set) ^ g.flip);
  int i = g.perm[s.i], j = g.perm[s.j];
  Mask K = apply_perm(g.perm, s.set) ^ (g.flip & ~(mask_of(i) | mask_of(j)));
  return Symbol::A(i, j, K);
}

std::vector<int> a_permutation(const CubeSymmetry& g, int n) {
  const auto& tab = SymbolTable::get(n);
  std::vector<int> out(tab.a_count());
  for (int t = 0; t < tab.a_count(); ++t) {
    Symbol img = act_symbol(g, tab.symbol(tab.p_count() + t), n);
    out[t] = tab.a_offset(img.i, img.j, img.set);
  }
  return out;
}

Gaussoid act_gaussoid(const CubeSymmetry& g, const Gaussoid& x) {
  const auto& tab = SymbolTable::get(x.n);
  Gaussoid out(x.n);
  for (int t : x.members.bits()) {
    Symbol img = act_symbol(g, tab.symbol(tab.p_count() + t), x.n);
    out.members.set(tab.a_offset(img.i, img.j, img.set));
  }
  return out;
}

namespace {

// Per-(n, group) cache of the A-block permutation tables.
const std::vector<std::vector<int>>& action_tables(int n, SymGroup grp) {
  static std::mutex mu;
  static std::unordered_map<int, std::vector<std::vector<int>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  int key = n * 8 + static_cast<int>(grp);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<std::vector<int>> tables;
  for (const auto& g : group_elements(n, grp)) tables.push_back(a_permutation(g, n));
  return cache.emplace(key, std::move(tables)).first->second;
}

Gaussoid apply_table(const std::vector<int>& table, const Gaussoid& x) {
  Gaussoid out(x.n);
  for (int t : x.members.bits()) out.members.set(table[t]);
  return out;
}

}  // namespace

Gaussoid canonical_form(const Gaussoid& x, SymGroup group) {
  Gaussoid best = x;
  for (const auto& table : action_tables(x.n, group)) {
    Gaussoid img = apply_table(table, x);
    if (img.members.lex_less(best.members)) best = img;
  }
  return best;
}

std::vector<Orbit> orbit_partition(const std::vector<Gaussoid>& items, SymGroup group) {
  if (items.empty()) return {};
  const int n = items.front().n;
  std::unordered_map<SymbolSet, std::size_t, SymbolSetHash> index;
  index.reserve(items.size() * 2);
  for (std::size_t i = 0; i < items.size(); ++i) index.emplace(items[i].members, i);
  std::vector<bool> seen(items.size(), false);
  std::vector<Orbit> orbits;
  const auto& tables = action_tables(n, group);
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (seen[i]) continue;
    Orbit orbit{0, i};
    for (const auto& table : tables) {
      Gaussoid img = apply_table(table, items[i]);
      auto it = index.find(img.members);
      if (it == index.end())
        throw std::invalid_argument("item list not closed under the group: missing image " +
                                    to_line(img) + " of " + to_line(items[i]));
      if (!seen[it->second]) {
        seen[it->second] = true;
        ++orbit.size;
      }
    }
    orbits.push_back(orbit);
  }
  return orbits;
}

OrientedGaussoid act_oriented(const Reorientation& r, const std::array<std::uint8_t, 10>& perm,
                              const OrientedGaussoid& phi) {
  const auto& tab = SymbolTable::get(phi.n);
  CubeSymmetry relabel{perm, 0};
  OrientedGaussoid out(phi.n);
  for (int t = 0; t < tab.a_count(); ++t) {
    int v = phi.value(t);
    Symbol img = act_symbol(relabel, tab.symbol(tab.p_count() + t), phi.n);
    int hits = mask_size(r.flip_set & (mask_of(img.i) | mask_of(img.j)));
    if (hits & 1) v = -v;
    out.set_value(tab.a_offset(img.i, img.j, img.set), v);
  }
  return out;
}

std::vector<OrientedSymmetry> reorient_sn_elements(int n) {
  std::vector<OrientedSymmetry> out;
  for (const auto& g : group_elements(n, SymGroup::SN))
    for (Mask L = 0; L < mask_of(n); ++L)  // representatives without element n
      out.push_back(OrientedSymmetry{g.perm, L});
  std::stable_sort(out.begin(), out.end(),
                   [](const OrientedSymmetry& a, const OrientedSymmetry& b) {
                     return a.flip_set < b.flip_set;
                   });
  return out;
}

namespace {

bool sign_less(const OrientedGaussoid& a, const OrientedGaussoid& b) {
  if (a.zero_set != b.zero_set) return a.zero_set.lex_less(b.zero_set);
  return b.negative_set == a.negative_set ? false : a.negative_set.lex_less(b.negative_set);
}

}  // namespace

OrientedGaussoid canonical_form_oriented(const OrientedGaussoid& phi) {
  OrientedGaussoid best = phi;
  for (const auto& g : reorient_sn_elements(phi.n)) {
    OrientedGaussoid img = act_oriented(Reorientation{g.flip_set}, g.perm, phi);
    if (sign_less(img, best)) best = img;
  }
  return best;
}

std::vector<Orbit> orbit_partition_oriented(const std::vector<OrientedGaussoid>& items) {
  if (items.empty()) return {};
  struct Hash {
    std::size_t operator()(const OrientedGaussoid& s) const {
      return s.zero_set.hash() * 1000003u ^ s.negative_set.hash();
    }
  };
  std::unordered_map<OrientedGaussoid, std::size_t, Hash> index;
  for (std::size_t i = 0; i < items.size(); ++i) index.emplace(items[i], i);
  std::vector<bool> seen(items.size(), false);
  std::vector<Orbit> orbits;
  const auto elements = reorient_sn_elements(items.front().n);
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (seen[i]) continue;
    Orbit orbit{0, i};
    for (const auto& g : elements) {
      OrientedGaussoid img = act_oriented(Reorientation{g.flip_set}, g.perm, items[i]);
      auto it = index.find(img);
      if (it == index.end())
        throw std::invalid_argument("sign-map list not closed under reorientation+permutation: " +
                                    sign_string(img));
      if (!seen[it->second]) {
        seen[it->second] = true;
        ++orbit.size;
      }
    }
    orbits.push_back(orbit);
  }
  return orbits;
}

}  // namespace gsd
