// Finite group actions on the symbol set: index permutations, duality,
// the full hyperoctahedral action (permute + swap indices in/out of the
// subscript sets), and reorientations for sign maps.  Orbits are computed
// by explicit group enumeration; the largest group used is B_5 with 3840
// elements.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oriented.hpp"

namespace gsd {

// A cube symmetry: relabel by perm, then swap indices of F in and out of
// the subscript sets.  Duality is (identity, F = [n]).
struct CubeSymmetry {
  std::array<std::uint8_t, 10> perm{};  // perm[i] for i in 1..n
  Mask flip = 0;

  static CubeSymmetry identity(int n);
};

enum class SymGroup { SN, DUAL_SN, HYPEROCT };

std::vector<CubeSymmetry> group_elements(int n, SymGroup g);

Symbol act_symbol(const CubeSymmetry& g, const Symbol& s, int n);

// Precomputed action of one group element on the A-block: table[t] is the
// image offset of the t-th a-symbol.
std::vector<int> a_permutation(const CubeSymmetry& g, int n);

Gaussoid act_gaussoid(const CubeSymmetry& g, const Gaussoid& x);

// Lexicographically minimal image over the group; constant on orbits,
// distinct across orbits.
Gaussoid canonical_form(const Gaussoid& x, SymGroup group);

struct Orbit {
  std::size_t size = 0;
  std::size_t representative = 0;  // index into the input item list
};

// Partitions `items` (distinct, closed under the group) into orbits, in
// order of first appearance.  Throws std::invalid_argument naming a
// missing image when the list is not closed.
std::vector<Orbit> orbit_partition(const std::vector<Gaussoid>& items, SymGroup group);

// --- sign maps -------------------------------------------------------------

// Reorientation along L (phi_L = phi_{[n]\L}; 2^{n-1} distinct ones) and
// index relabeling: relabel by perm first, then flip the sign of a_{ij|K}
// when |{i,j} ^ L| is odd.
struct Reorientation {
  Mask flip_set = 0;
  static Reorientation canonical(Mask L, int n) {
    return Reorientation{mask_has(L, n) ? Mask(full_mask(n) & ~L) : L};
  }
};

OrientedGaussoid act_oriented(const Reorientation& r, const std::array<std::uint8_t, 10>& perm,
                              const OrientedGaussoid& phi);

// All (reorientation, permutation) pairs, 2^{n-1} * n! of them.
struct OrientedSymmetry {
  std::array<std::uint8_t, 10> perm{};
  Mask flip_set = 0;
};
std::vector<OrientedSymmetry> reorient_sn_elements(int n);

OrientedGaussoid canonical_form_oriented(const OrientedGaussoid& phi);
std::vector<Orbit> orbit_partition_oriented(const std::vector<OrientedGaussoid>& items);

}  // namespace gsd
