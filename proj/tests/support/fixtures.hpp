#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "pnc/circuit.hpp"
#include "pnc/family.hpp"
#include "pnc/generator.hpp"
#include "pnc/nesting.hpp"

namespace pnc::testing {

inline Circuit circuit_of(const std::string& text) {
  std::istringstream tokens(text);
  std::vector<Label> labels;
  for (std::string t; tokens >> t;) labels.push_back(t);
  return validate_circuit(std::move(labels));
}

/// v_0 ... v_18 with v_2 = v_12, v_6 = v_10, v_0 = v_18.
inline Circuit three_link() {
  return circuit_of("v0 v1 v2 v3 v4 v5 v6 v7 v8 v9 v6 v11 v2 v13 v14 v15 v16 v17 v0");
}

/// v_0 ... v_18 with v_1 = v_5, v_7 = v_11, v_13 = v_17, v_0 = v_18.
inline Circuit three_loop() {
  return circuit_of("v0 v1 v2 v3 v4 v1 v6 v7 v8 v9 v10 v7 v12 v13 v14 v15 v16 v13 v0");
}

/// The reduction family of three_loop(), written out by
/// hand from the loop structure: index 0 is the root.
inline std::vector<Circuit> three_loop_family() {
  return {
      three_loop(),
      circuit_of("v0 v1 v6 v7 v8 v9 v10 v7 v12 v13 v14 v15 v16 v13 v0"),  // 1: drop loop at v1
      circuit_of("v0 v1 v2 v3 v4 v1 v6 v7 v12 v13 v14 v15 v16 v13 v0"),   // 2: drop loop at v7
      circuit_of("v0 v1 v2 v3 v4 v1 v6 v7 v8 v9 v10 v7 v12 v13 v0"),      // 3: drop loop at v13
      circuit_of("v0 v1 v2 v3 v4 v1 v6 v7 v12 v13 v0"),                   // 4
      circuit_of("v0 v1 v6 v7 v8 v9 v10 v7 v12 v13 v0"),                  // 5
      circuit_of("v0 v1 v6 v7 v12 v13 v14 v15 v16 v13 v0"),               // 6
      circuit_of("v0 v1 v6 v7 v12 v13 v0"),                               // 7
      circuit_of("v1 v2 v3 v4 v1"),                                       // 8
      circuit_of("v7 v8 v9 v10 v7"),                                      // 9
      circuit_of("v13 v14 v15 v16 v13"),                                  // 10
  };
}

/// Arrows of the cover diagram, as (greater, lesser) indices into
/// three_loop_family().
inline std::set<std::pair<std::size_t, std::size_t>> three_loop_arrows() {
  return {{0, 1}, {0, 2}, {0, 3}, {1, 5}, {1, 6}, {2, 4}, {2, 6}, {3, 4},
          {3, 5}, {4, 7}, {4, 8}, {5, 7}, {5, 9}, {6, 7}, {6, 10}};
}

struct CorpusEntry {
  std::uint64_t seed;
  std::size_t depth;
  NestedCircuit pnc;
};

/// 200 seeded PNCs, depth cycling through 0..8, links of length 3..8.
inline const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = [] {
    std::vector<CorpusEntry> out;
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
      const std::size_t depth = static_cast<std::size_t>((seed - 1) % 9);
      out.push_back({seed, depth, random_pnc(seed, depth, 8)});
    }
    return out;
  }();
  return entries;
}

/// Nesting test straight from the sub-circuit characterization: every proper
/// sub-circuit avoids the endpoints and any two are strictly nested. Returns
/// the (open, close) pairs outermost first, or nullopt when not nested.
inline std::optional<std::vector<std::pair<std::size_t, std::size_t>>> brute_force_nesting(
    const Circuit& c) {
  const std::size_t n = c.size();
  std::vector<std::pair<std::size_t, std::size_t>> subs;
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j)
      if (c[i] == c[j] && !(i == 0 && j == n)) subs.emplace_back(i, j);
  for (const auto& [i, j] : subs)
    if (i == 0 || j == n) return std::nullopt;
  for (const auto& a : subs) {
    for (const auto& b : subs) {
      if (a == b) continue;
      const bool a_in_b = b.first < a.first && a.second < b.second;
      const bool b_in_a = a.first < b.first && b.second < a.second;
      if (!a_in_b && !b_in_a) return std::nullopt;
    }
  }
  std::sort(subs.begin(), subs.end());
  return subs;
}

/// A random closed trail on the complete graph over `labels` vertices.
inline Circuit random_trail(std::mt19937_64& rng, std::size_t labels) {
  for (;;) {
    std::set<std::pair<std::size_t, std::size_t>> used;
    std::vector<std::size_t> walk{0};
    for (;;) {
      const std::size_t at = walk.back();
      if (at == 0 && walk.size() >= 4 && rng() % 3 == 0) break;
      std::vector<std::size_t> options;
      for (std::size_t next = 0; next < labels; ++next) {
        if (next == at) continue;
        if (!used.contains({std::min(at, next), std::max(at, next)})) options.push_back(next);
      }
      if (options.empty()) break;
      const std::size_t next = options[rng() % options.size()];
      used.insert({std::min(at, next), std::max(at, next)});
      walk.push_back(next);
    }
    if (walk.back() != 0 || walk.size() < 4) continue;
    std::vector<Label> names;
    for (std::size_t v : walk) names.push_back("x" + std::to_string(v));
    return validate_circuit(std::move(names));
  }
}

/// Every 0-1 path from the root, by exhaustive search over 0-/1-reductions.
/// Maps each reached circuit to the set of (length, zeros, ones) seen.
inline std::map<Circuit, std::set<std::tuple<std::size_t, std::size_t, std::size_t>>>
all_zero_one_paths(const NestedCircuit& root) {
  std::map<Circuit, std::set<std::tuple<std::size_t, std::size_t, std::size_t>>> seen;
  struct Frame {
    NestedCircuit node;
    std::size_t zeros;
    std::size_t ones;
  };
  std::vector<Frame> stack{{root, 0, 0}};
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    seen[f.node.circuit()].insert({f.zeros + f.ones, f.zeros, f.ones});
    if (f.node.depth() == 0) continue;
    stack.push_back({zero_reduction(f.node), f.zeros + 1, f.ones});
    stack.push_back({one_reduction(f.node), f.zeros, f.ones + 1});
  }
  return seen;
}

}  // namespace pnc::testing
