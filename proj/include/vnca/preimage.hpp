#pragma once

#include <cstdint>
#include <vector>

#include "vnca/periodic_config.hpp"
#include "vnca/rule_table.hpp"

namespace vnca {

/// de Bruijn-style preimage graph for a rule and a periodic target x.
///
/// A node (i, w) pairs a position residue i mod p with an overlap word
/// w = (y[i-l], ..., y[i+r-1]) of length left+right.  The edge labelled s
/// leaves (i, w) and enters (i+1 mod p, w') where w' drops the leading symbol
/// of w and appends s; it is present iff the rule maps the full window word
/// w.s to cell i of x.  Bi-infinite preimages of x correspond to cycles, and
/// every cycle length is a positive multiple of p.
struct PreimageGraph {
  std::size_t period = 0;
  std::size_t overlap_words = 0;  // q^(left+right)
  unsigned alphabet = 0;
  /// adjacency[node] lists target nodes; node = residue * overlap_words + word.
  std::vector<std::vector<std::uint32_t>> adjacency;

  std::size_t node_count() const { return period * overlap_words; }
  std::size_t node_residue(std::size_t node) const { return node / overlap_words; }
  std::size_t node_word(std::size_t node) const { return node % overlap_words; }
};

PreimageGraph build_preimage_graph(const RuleTable& rule, const PeriodicConfig& x);

/// True iff the graph contains a cycle (computed by iteratively trimming
/// nodes that lack in- or out-edges).
bool has_cycle(const PreimageGraph& graph);

/// True iff some configuration of the full line (not necessarily periodic)
/// maps to x under the rule.
bool has_preimage(const RuleTable& rule, const PeriodicConfig& x);

/// All configurations of stored period `period` mapping to x, in ascending
/// word order.  `period` must be a multiple of least_period(x).
std::vector<PeriodicConfig> periodic_preimages(const RuleTable& rule,
                                               const PeriodicConfig& x,
                                               std::size_t period);

}  // namespace vnca
