#pragma once

#include <optional>
#include <vector>

namespace mlradii {

/// A point (x, beta) with x = 1/omega, omega > 1. The zero-reality region W_i
/// lives in these coordinates.
struct RegionPoint {
  double x;
  double beta;

  void validate() const;  // 0 < x < 1, beta > 0, finite
};

/// The three maps generating W_i from W_b:
///   A: (x, beta) -> (x/2, beta)
///   B: (x, beta) -> (x/2, 1/x + beta)
///   C: (x, beta) -> (x, beta - 1) if beta > 1, identity otherwise
enum class RegionMap { A, B, C };

const char* to_string(RegionMap m);

RegionPoint transform(RegionMap map, RegionPoint p);

/// W_a = { (1/omega, beta) : 1 < omega < 2, beta in [omega-1, 1] u [omega, 2] },
/// boundaries inclusive.
bool in_Wa(RegionPoint p);

enum class WiStatus { Member, NonMember, Unknown };

const char* to_string(WiStatus s);

/// Derivation chain for a Member verdict: applying `maps` left to right to
/// `wa_point` (a W_a member; the first map is the A or B that produces the
/// W_b seed) reproduces the queried point.
struct WiWitness {
  RegionPoint wa_point;
  std::vector<RegionMap> maps;
};

struct WiVerdict {
  WiStatus status;
  std::optional<WiWitness> witness;
};

/// Decides membership in W_i, the smallest superset of W_b = A(W_a) u B(W_a)
/// invariant under A, B and C, by breadth-first preimage search.
///
/// Inverse A/B applications double x and are exhausted once x >= 1/2 (every
/// W_i point has x < 1/2); inverse C applications along a path are capped at
/// max_c_depth. NonMember is only reported when the pruned search space was
/// exhausted by those analytic rules; a search cut short by the depth cap
/// yields Unknown.
WiVerdict in_Wi(RegionPoint p, int max_c_depth = 64);

}  // namespace mlradii
