#pragma once

// Weyl-group orbits: dominant representatives, orbit sizes and lazy
// traversal of W.v as a tree rooted at the dominant point (Snow's method),
// with early-exit scans for points lying in a subspace.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "properlie/exactlin.hpp"
#include "properlie/rootsys.hpp"

namespace properlie {

struct DominantRepresentative {
  RationalVector point;
  std::vector<int> word;  // applying these reflections to the input gives point
};

DominantRepresentative dominant_representative(const RootSystem& rs, const RationalVector& v);
bool same_orbit(const RootSystem& rs, const RationalVector& u, const RationalVector& v);
std::uint64_t orbit_size(const RootSystem& rs, const RationalVector& v);

// Orbit points are visited in preorder of the traversal tree; children are
// produced by simple reflections in ascending index order.
struct TraversalSummary {
  std::uint64_t visited = 0;
  bool stopped = false;
};
// Return false to stop. `word` maps the seed to `point`.
using OrbitVisitor = std::function<bool(const RationalVector& point, std::span<const int> word)>;
TraversalSummary orbit_iterate(const RootSystem& rs, const RationalVector& v, const OrbitVisitor& visit);

std::vector<RationalVector> orbit_points(const RootSystem& rs, const RationalVector& v);

struct OrbitWitness {
  RationalVector point;
  std::vector<int> word;  // applied to the seed, first index first
};

enum class ScanOutcome { empty_intersection, witness_found, aborted };

struct OrbitScanResult {
  ScanOutcome outcome = ScanOutcome::empty_intersection;
  std::optional<OrbitWitness> witness;
  std::uint64_t points_visited = 0;
};

enum class ScanMode { serial, parallel };

struct ScanOptions {
  ScanMode mode = ScanMode::parallel;
  std::uint64_t budget = 0;  // maximum visits; 0 means unlimited
  std::uint64_t progress_interval = 1'000'000;
  std::function<void(std::uint64_t visited)> progress;
  // Extra test applied to a point already known to lie in the subspace; a
  // rejected point does not end the scan. Must be safe to call concurrently.
  std::function<bool(const OrbitWitness&)> accept;
};

// First point of W.v (in traversal order) lying in S. The parallel mode
// returns the same witness as the serial one.
OrbitScanResult orbit_meets_subspace(const RootSystem& rs, const RationalVector& v, const Subspace& s,
                                     const ScanOptions& options = {});

// Applies a word of simple reflections, first index first.
RationalVector apply_word(const RootSystem& rs, std::span<const int> word, RationalVector v);

}  // namespace properlie
