#include "mlradii/region.hpp"

#include <cmath>
#include <cstdint>
#include <cstring>
#include <deque>
#include <unordered_map>
#include <vector>

#include "mlradii/errors.hpp"

namespace mlradii {

void RegionPoint::validate() const {
  if (!(x > 0.0) || !(x < 1.0) || !std::isfinite(x) || !(beta > 0.0) || !std::isfinite(beta)) {
    throw DomainError("RegionPoint: requires 0 < x < 1 and beta > 0");
  }
}

const char* to_string(RegionMap m) {
  switch (m) {
    case RegionMap::A: return "A";
    case RegionMap::B: return "B";
    case RegionMap::C: return "C";
  }
  return "?";
}

const char* to_string(WiStatus s) {
  switch (s) {
    case WiStatus::Member: return "member";
    case WiStatus::NonMember: return "non_member";
    case WiStatus::Unknown: return "unknown";
  }
  return "?";
}

RegionPoint transform(RegionMap map, RegionPoint p) {
  p.validate();
  switch (map) {
    case RegionMap::A:
      return {p.x / 2.0, p.beta};
    case RegionMap::B:
      return {p.x / 2.0, 1.0 / p.x + p.beta};
    case RegionMap::C:
      if (p.beta > 1.0) return {p.x, p.beta - 1.0};
      return p;
  }
  return p;
}

bool in_Wa(RegionPoint p) {
  p.validate();
  const double omega = 1.0 / p.x;
  if (!(omega > 1.0 && omega < 2.0)) return false;  // strict per the definition
  const double b = p.beta;
  return (b >= omega - 1.0 && b <= 1.0) || (b >= omega && b <= 2.0);
}

namespace {

// W_b = A(W_a) u B(W_a). Reports which seed map reaches p and from where.
bool in_Wb(RegionPoint p, RegionPoint* wa_point, RegionMap* seed_map) {
  const double x2 = 2.0 * p.x;
  if (!(x2 < 1.0)) return false;
  RegionPoint a_pre{x2, p.beta};
  if (in_Wa(a_pre)) {
    *wa_point = a_pre;
    *seed_map = RegionMap::A;
    return true;
  }
  const double bb = p.beta - 1.0 / x2;
  if (bb > 0.0) {
    RegionPoint b_pre{x2, bb};
    if (in_Wa(b_pre)) {
      *wa_point = b_pre;
      *seed_map = RegionMap::B;
      return true;
    }
  }
  return false;
}

struct PointKey {
  std::uint64_t xb, bb;
  bool operator==(const PointKey& o) const { return xb == o.xb && bb == o.bb; }
};

struct PointKeyHash {
  std::size_t operator()(const PointKey& k) const {
    std::uint64_t h = k.xb * 0x9E3779B97F4A7C15ull;
    h ^= k.bb + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

PointKey key_of(RegionPoint p) {
  PointKey k;
  std::memcpy(&k.xb, &p.x, sizeof k.xb);
  std::memcpy(&k.bb, &p.beta, sizeof k.bb);
  return k;
}

// Largest beta decrement still available through inverse-B moves: each one
// subtracts 1/(2^(i+1) x) while the doubled x stays below 1. A node whose
// beta exceeds 2 plus this budget can never land back in W_a.
double beta_budget(double x) {
  double budget = 0.0;
  double xx = 2.0 * x;
  while (xx < 1.0) {
    budget += 1.0 / xx;
    xx *= 2.0;
  }
  return budget;
}

struct SearchNode {
  RegionPoint p;
  int c_used;
  int parent;     // arena index, -1 for the query
  RegionMap map;  // forward map from this node to its parent
};

constexpr std::size_t kNodeBudget = 1u << 20;

}  // namespace

WiVerdict in_Wi(RegionPoint query, int max_c_depth) {
  query.validate();
  if (max_c_depth < 1) throw DomainError("in_Wi: max_c_depth must be >= 1");

  // Every W_b point has x in (1/4, 1/2) and neither A, B nor C ever raises x,
  // so x >= 1/2 settles the question outright.
  if (query.x >= 0.5) return {WiStatus::NonMember, std::nullopt};

  std::vector<SearchNode> arena;
  std::deque<int> frontier;
  std::unordered_map<PointKey, int, PointKeyHash> best_c_seen;
  bool truncated = false;

  auto enqueue = [&](RegionPoint p, int c_used, int parent, RegionMap map) {
    if (p.x >= 0.5) return;                               // analytically dead
    if (p.beta > 2.0 + beta_budget(p.x) + 1e-12) return;  // beta can never recover
    auto [it, fresh] = best_c_seen.try_emplace(key_of(p), c_used);
    if (!fresh) {
      if (it->second <= c_used) return;  // seen with at least as much C headroom
      it->second = c_used;
    }
    if (arena.size() >= kNodeBudget) {
      truncated = true;
      return;
    }
    arena.push_back({p, c_used, parent, map});
    frontier.push_back(static_cast<int>(arena.size()) - 1);
  };

  arena.push_back({query, 0, -1, RegionMap::A});
  frontier.push_back(0);
  best_c_seen.emplace(key_of(query), 0);

  while (!frontier.empty()) {
    const int idx = frontier.front();
    frontier.pop_front();
    const SearchNode node = arena[idx];

    RegionPoint wa{};
    RegionMap seed{};
    if (in_Wb(node.p, &wa, &seed)) {
      WiWitness witness;
      witness.wa_point = wa;
      witness.maps.push_back(seed);
      // Forward chain: walk from the found node back up to the query.
      std::vector<RegionMap> chain;
      for (int cur = idx; arena[cur].parent != -1; cur = arena[cur].parent) {
        chain.push_back(arena[cur].map);
      }
      witness.maps.insert(witness.maps.end(), chain.begin(), chain.end());
      return {WiStatus::Member, witness};
    }

    const double x2 = 2.0 * node.p.x;
    if (x2 < 1.0) {
      enqueue({x2, node.p.beta}, node.c_used, idx, RegionMap::A);  // undo A
      const double bb = node.p.beta - 1.0 / x2;
      if (bb > 0.0) enqueue({x2, bb}, node.c_used, idx, RegionMap::B);  // undo B
    }
    if (node.c_used < max_c_depth) {
      enqueue({node.p.x, node.p.beta + 1.0}, node.c_used + 1, idx, RegionMap::C);  // undo C
    } else {
      truncated = true;
    }
  }

  return {truncated ? WiStatus::Unknown : WiStatus::NonMember, std::nullopt};
}

}  // namespace mlradii
