// Census machinery: gaussoid enumeration through the axiom cnf, the
// ternary backtracking search for oriented gaussoids, per-gaussoid
// orientation enumeration via the mutilated edge relations, and the
// streaming orbit classifier used for the large n=5 runs.
#pragma once

#include <gmpxx.h>

#include <functional>
#include <string>
#include <vector>

#include "cnf.hpp"
#include "gaussoid.hpp"
#include "symmetry.hpp"

namespace gsd {

using GaussoidVisitor = std::function<void(const Gaussoid&)>;
using OrientedVisitor = std::function<void(const OrientedGaussoid&)>;

// Every emitted item satisfies the gaussoid axioms; deterministic
// (lexicographic) order.  Returns the exact count.
mpz_class enumerate_gaussoids(const GroundSet& gs, const GaussoidVisitor& visitor);
mpz_class count_gaussoids(const GroundSet& gs, int jobs = 1);

enum class OrientedMode { ALL, UNIFORM, POSITIVE };

// ALL runs a native three-valued backtracking search over the maps
// A -> {0,+1,-1} (term-value set of every edge trinomial must be {0},
// {-1,+1} or {-1,0,+1}); UNIFORM and POSITIVE enumerate their boolean
// encodings.  Deterministic order; returns the exact count.
mpz_class enumerate_oriented(const GroundSet& gs, OrientedMode mode,
                             const OrientedVisitor& visitor);
mpz_class count_oriented(const GroundSet& gs, OrientedMode mode);

// All orientations of a fixed gaussoid: maps with zero set exactly G that
// are compatible with the mutilated edge relations.
std::vector<OrientedGaussoid> enumerate_orientations(const Gaussoid& g);

// Materialized censuses for desk-scale n.
std::vector<Gaussoid> all_gaussoids(const GroundSet& gs);
std::vector<OrientedGaussoid> all_oriented(const GroundSet& gs, OrientedMode mode);

// Streaming orbit classification for censuses too large to hold as
// objects: enumerates once, buckets items by cardinality (an invariant of
// all three groups) in temp files under scratch_dir, then partitions each
// bucket.  The visitor receives one representative per orbit with its
// orbit size.  Returns the orbit count and the total item count.
struct StreamedOrbitCount {
  mpz_class items;
  std::size_t orbits;
};
using OrbitRepVisitor = std::function<void(const Gaussoid&, std::size_t)>;
StreamedOrbitCount streamed_orbit_reps(const GroundSet& gs, SymGroup group,
                                       const std::string& scratch_dir,
                                       const OrbitRepVisitor& visitor);
StreamedOrbitCount streamed_orbit_count(const GroundSet& gs, SymGroup group,
                                        const std::string& scratch_dir);

}  // namespace gsd
