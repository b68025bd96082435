#pragma once
// Reference evaluators over bitmask graphs (at most 64 states), written
// directly from the definitions and sharing no code with the library
// algorithms they are compared against.

#include "atcalc/attack_tree.hpp"
#include "atcalc/kripke.hpp"
#include "atcalc/state_set.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using Mask = std::uint64_t;

inline Mask full(std::size_t n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }
inline bool has(Mask m, std::size_t i) { return ((m >> i) & 1U) != 0; }

/// succ[i] = mask of successors of state i.
struct Graph {
  std::size_t n = 0;
  std::vector<Mask> succ;
};

/// Adjacency packed row-major: bit i*n + j encodes i -> j.
inline Graph from_adjacency(std::size_t n, Mask adjacency) {
  Graph g{n, std::vector<Mask>(n, 0)};
  for (std::size_t i = 0; i < n; ++i) g.succ[i] = (adjacency >> (i * n)) & full(n);
  return g;
}

inline atcalc::TransitionSystem to_system(const Graph& g) {
  std::vector<std::vector<atcalc::StateId>> succ(g.n);
  for (std::size_t i = 0; i < g.n; ++i)
    for (std::size_t j = 0; j < g.n; ++j)
      if (has(g.succ[i], j)) succ[i].push_back(atcalc::StateId{static_cast<std::uint32_t>(j)});
  return atcalc::TransitionSystem(succ);
}

inline atcalc::StateSet set(std::size_t n, Mask m) { return atcalc::StateSet::from_mask(n, m); }

// --- paths ------------------------------------------------------------------------

/// States reachable from x along some path (including x), by explicit
/// depth-first enumeration of paths.
inline Mask reachable_from(const Graph& g, std::size_t x) {
  Mask seen = 0;
  std::vector<std::size_t> stack{x};
  while (!stack.empty()) {
    const std::size_t y = stack.back();
    stack.pop_back();
    if (has(seen, y)) continue;
    seen |= Mask{1} << y;
    for (std::size_t z = 0; z < g.n; ++z)
      if (has(g.succ[y], z)) stack.push_back(z);
  }
  return seen;
}

inline Mask reachable_from_set(const Graph& g, Mask init) {
  Mask out = 0;
  for (std::size_t x = 0; x < g.n; ++x)
    if (has(init, x)) out |= reachable_from(g, x);
  return out;
}

/// EF f: some path from x hits f.
inline Mask ef(const Graph& g, Mask f) {
  Mask out = 0;
  for (std::size_t x = 0; x < g.n; ++x)
    if ((reachable_from(g, x) & f) != 0) out |= Mask{1} << x;
  return out;
}

inline Mask ex(const Graph& g, Mask f) {
  Mask out = 0;
  for (std::size_t x = 0; x < g.n; ++x)
    if ((g.succ[x] & f) != 0) out |= Mask{1} << x;
  return out;
}

/// AX f, vacuously true at states without successors.
inline Mask ax(const Graph& g, Mask f) {
  Mask out = 0;
  for (std::size_t x = 0; x < g.n; ++x)
    if ((g.succ[x] & ~f) == 0) out |= Mask{1} << x;
  return out;
}

/// Length of the shortest path from x into f, or -1.
inline int distance(const Graph& g, std::size_t x, Mask f) {
  Mask frontier = Mask{1} << x;
  Mask seen = frontier;
  for (int d = 0; frontier != 0; ++d) {
    if ((frontier & f) != 0) return d;
    Mask next = 0;
    for (std::size_t y = 0; y < g.n; ++y)
      if (has(frontier, y)) next |= g.succ[y];
    frontier = next & ~seen;
    seen |= next;
  }
  return -1;
}

// --- attack tree validity -----------------------------------------------------------

inline bool valid(const Graph& g, const atcalc::AttackTree& t) {
  const Mask pre = t.goal().pre.mask();
  const Mask post = t.goal().post.mask();
  const auto kids = t.children();
  switch (t.kind()) {
    case atcalc::AttackTree::Kind::base:
      for (std::size_t x = 0; x < g.n; ++x)
        if (has(pre, x) && (g.succ[x] & post) == 0) return false;
      return true;
    case atcalc::AttackTree::Kind::conjunction: {
      if (kids.empty()) return (pre & ~post) == 0;
      // The children line up: first starts at pre, each ends where the next
      // starts, and the last ends exactly at post.
      if (kids.front().goal().pre.mask() != pre || kids.back().goal().post.mask() != post) return false;
      for (std::size_t i = 0; i + 1 < kids.size(); ++i)
        if (kids[i].goal().post.mask() != kids[i + 1].goal().pre.mask()) return false;
      return std::all_of(kids.begin(), kids.end(), [&](const auto& c) { return valid(g, c); });
    }
    case atcalc::AttackTree::Kind::disjunction: {
      if (kids.empty()) return (pre & ~post) == 0;
      // Each alternative covers part of what is still uncovered; the last one
      // has to cover all the rest. Every alternative ends inside post.
      Mask uncovered = pre;
      for (std::size_t i = 0; i < kids.size(); ++i) {
        const Mask p = kids[i].goal().pre.mask();
        if ((kids[i].goal().post.mask() & ~post) != 0 || !valid(g, kids[i])) return false;
        if (i + 1 == kids.size()) {
          if ((uncovered & ~p) != 0) return false;
        } else {
          if ((p & ~uncovered) != 0) return false;
          uncovered &= ~p;
        }
      }
      return true;
    }
  }
  return false;
}

// --- isomorphism classes ------------------------------------------------------------

/// One adjacency mask per isomorphism class of digraphs (self-loops allowed)
/// on n ≤ 5 nodes: the numerically least mask of each orbit under relabeling.
inline std::vector<Mask> isomorphism_representatives(std::size_t n) {
  std::vector<std::array<std::uint8_t, 8>> perms;
  std::array<std::uint8_t, 8> p{};
  std::iota(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(n), std::uint8_t{0});
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(n)));

  // row_table[k][r] = row bits r relabeled through perms[k].
  const std::size_t rows = std::size_t{1} << n;
  std::vector<std::vector<Mask>> row_table(perms.size(), std::vector<Mask>(rows, 0));
  for (std::size_t k = 0; k < perms.size(); ++k)
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t j = 0; j < n; ++j)
        if (has(r, j)) row_table[k][r] |= Mask{1} << perms[k][j];

  std::vector<Mask> reps;
  const Mask total = Mask{1} << (n * n);
  for (Mask m = 0; m < total; ++m) {
    bool least = true;
    for (std::size_t k = 1; k < perms.size() && least; ++k) {
      Mask image = 0;
      for (std::size_t i = 0; i < n; ++i) image |= row_table[k][(m >> (i * n)) & full(n)] << (perms[k][i] * n);
      least = image >= m;
    }
    if (least) reps.push_back(m);
  }
  return reps;
}

// --- random generation --------------------------------------------------------------

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

inline Mask random_subset(Rng& rng, std::size_t n, double p = 0.5) {
  Mask m = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (coin(rng, p)) m |= Mask{1} << i;
  return m;
}

inline Mask random_nonempty_subset(Rng& rng, std::size_t n, double p = 0.4) {
  Mask m = random_subset(rng, n, p);
  if (m == 0) m = Mask{1} << uniform(rng, 0, n - 1);
  return m;
}

inline Graph random_graph(Rng& rng, std::size_t n) {
  const double density = std::uniform_real_distribution<double>(0.1, 0.6)(rng);
  Graph g{n, std::vector<Mask>(n, 0)};
  for (auto& row : g.succ) row = random_subset(rng, n, density);
  return g;
}

inline Mask image(const Graph& g, Mask s) {
  Mask out = 0;
  for (std::size_t x = 0; x < g.n; ++x)
    if (has(s, x)) out |= g.succ[x];
  return out;
}

/// Random subset of m (possibly empty).
inline Mask random_part(Rng& rng, Mask m) { return m & random_subset(rng, 64); }

/// Unstructured tree: goals and children drawn independently.
inline atcalc::AttackTree random_tree(Rng& rng, std::size_t n, std::size_t depth, Mask pre, Mask post) {
  atcalc::AttackGoal goal{set(n, pre), set(n, post)};
  if (depth == 0 || coin(rng, 0.3)) return atcalc::AttackTree::base(std::move(goal));
  std::vector<atcalc::AttackTree> kids;
  const std::size_t k = uniform(rng, 0, 3);
  for (std::size_t i = 0; i < k; ++i)
    kids.push_back(random_tree(rng, n, depth - 1, random_subset(rng, n), random_subset(rng, n)));
  return coin(rng) ? atcalc::AttackTree::and_node(std::move(kids), std::move(goal))
                   : atcalc::AttackTree::or_node(std::move(kids), std::move(goal));
}

/// Tree whose shape respects the composition rules (and-children chain,
/// or-children split the pre-set) with intermediate sets often taken from
/// one-step images, so a good share of them is valid.
inline atcalc::AttackTree coherent_tree(Rng& rng, const Graph& g, std::size_t depth, Mask pre, Mask post) {
  const std::size_t n = g.n;
  atcalc::AttackGoal goal{set(n, pre), set(n, post)};
  if (depth == 0 || coin(rng, 0.25)) return atcalc::AttackTree::base(std::move(goal));
  std::vector<atcalc::AttackTree> kids;
  const std::size_t k = uniform(rng, coin(rng, 0.1) ? 0 : 1, 3);
  if (coin(rng)) {
    Mask from = pre;
    for (std::size_t i = 0; i < k; ++i) {
      Mask to = post;
      if (i + 1 < k) to = coin(rng, 0.7) ? (image(g, from) | random_subset(rng, n, 0.1)) : random_subset(rng, n);
      kids.push_back(coherent_tree(rng, g, depth - 1, from, to));
      from = to;
    }
    return atcalc::AttackTree::and_node(std::move(kids), std::move(goal));
  }
  Mask rest = pre;
  for (std::size_t i = 0; i < k; ++i) {
    const Mask part = i + 1 == k ? rest : random_part(rng, rest);
    const Mask target = coin(rng, 0.8) ? post : random_subset(rng, n);
    kids.push_back(coherent_tree(rng, g, depth - 1, part, target & (coin(rng, 0.9) ? post : full(n))));
    rest &= ~part;
  }
  return atcalc::AttackTree::or_node(std::move(kids), std::move(goal));
}

}  // namespace oracle
