#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "vnca/preimage.hpp"

using namespace vnca;

namespace {

PeriodicConfig config(std::string_view cells) { return PeriodicConfig::from_string(2, cells); }

// Independent oracle for membership in the image: some configuration of
// stored period k*p with k up to q^(left+right) maps to x.  Scanning one
// period kp per k is enough because any cycle in the preimage graph has at
// most q^(left+right) nodes per residue.
bool oracle_has_preimage(const RuleTable& rule, const PeriodicConfig& x) {
  const std::size_t p = x.period();
  std::size_t max_k = 1;
  for (int i = 0; i < rule.window_length() - 1; ++i) max_k *= rule.alphabet();
  for (std::size_t k = 1; k <= max_k; ++k) {
    for (const auto& y : periodic_preimages(rule, x, k * p)) {
      (void)y;
      return true;
    }
  }
  return false;
}

std::vector<PeriodicConfig> all_configs_of_period(std::size_t p) {
  std::vector<PeriodicConfig> out;
  for (std::size_t w = 0; w < (std::size_t{1} << p); ++w) {
    std::vector<std::uint8_t> cells(p);
    for (std::size_t i = 0; i < p; ++i) cells[i] = (w >> (p - 1 - i)) & 1;
    out.emplace_back(2, std::move(cells));
  }
  return out;
}

}  // namespace

TEST_CASE("least period") {
  CHECK(least_period(config("0101")) == 2);
  CHECK(least_period(config("1")) == 1);
  CHECK(least_period(config("011011")) == 3);
  CHECK(least_period(config("0110")) == 4);
}

TEST_CASE("preimage graph shape") {
  const PreimageGraph g = build_preimage_graph(wolfram_rule(110), config("011"));
  CHECK(g.period == 3);
  CHECK(g.overlap_words == 4);
  CHECK(g.node_count() == 12);
  for (std::size_t v = 0; v < g.node_count(); ++v) {
    for (std::uint32_t t : g.adjacency[v]) {
      // Position residue advances by exactly one along every edge.
      CHECK(g.node_residue(t) == (g.node_residue(v) + 1) % g.period);
    }
  }
}

TEST_CASE("every cycle length is a multiple of the period") {
  // Walk a cycle found by following alive nodes of the trimmed graph.
  const PreimageGraph g = build_preimage_graph(wolfram_rule(90), config("10"));
  REQUIRE(has_cycle(g));
  // Any closed walk returns to the starting residue, so its length is a
  // multiple of the period by the residue-advance invariant checked above.
  std::set<std::size_t> seen;
  std::size_t node = 0;
  while (g.adjacency[node].empty()) ++node;
  std::vector<std::size_t> path;
  while (!seen.count(node)) {
    seen.insert(node);
    path.push_back(node);
    REQUIRE_FALSE(g.adjacency[node].empty());
    node = g.adjacency[node][0];
  }
  const auto start = std::find(path.begin(), path.end(), node);
  const std::size_t cycle_length = static_cast<std::size_t>(path.end() - start);
  CHECK(cycle_length % g.period == 0);
  CHECK(cycle_length > 0);
}

TEST_CASE("has_preimage examples") {
  CHECK(has_preimage(wolfram_rule(110), config("1")));
  CHECK(has_preimage(wolfram_rule(204), config("0110")));
  CHECK_FALSE(has_preimage(wolfram_rule(0), config("1")));
  CHECK(has_preimage(wolfram_rule(0), config("0")));
  CHECK_THROWS_AS(has_preimage(wolfram_rule(0), PeriodicConfig::constant(3, 0)),
                  std::invalid_argument);
}

TEST_CASE("has_preimage agrees with the brute-force oracle") {
  // Exhaustive: all 256 elementary rules, all targets of stored period <= 4.
  for (unsigned n = 0; n < 256; ++n) {
    const RuleTable rule = wolfram_rule(n);
    for (std::size_t p = 1; p <= 4; ++p) {
      for (const auto& x : all_configs_of_period(p)) {
        const bool graph_answer = has_preimage(rule, x);
        const bool oracle_answer = oracle_has_preimage(rule, x);
        if (graph_answer != oracle_answer) {
          CAPTURE(n);
          CAPTURE(x.to_string());
        }
        CHECK(graph_answer == oracle_answer);
      }
    }
  }
}

TEST_CASE("periodic preimages examples") {
  CHECK(periodic_preimages(wolfram_rule(110), config("1"), 1).empty());

  const auto two = periodic_preimages(wolfram_rule(110), config("1"), 2);
  REQUIRE(two.size() == 2);
  CHECK(two[0] == config("01"));
  CHECK(two[1] == config("10"));

  const auto identity = periodic_preimages(wolfram_rule(204), config("01"), 2);
  REQUIRE(identity.size() == 1);
  CHECK(identity[0] == config("01"));

  CHECK_THROWS_AS(periodic_preimages(wolfram_rule(110), config("01"), 3), std::invalid_argument);
}

TEST_CASE("no preimage means no periodic preimage at any multiple") {
  for (unsigned n : {0u, 18u, 24u, 110u, 200u}) {
    const RuleTable rule = wolfram_rule(n);
    for (std::size_t p = 1; p <= 3; ++p) {
      for (const auto& x : all_configs_of_period(p)) {
        if (has_preimage(rule, x)) continue;
        for (std::size_t k = 1; k <= 4; ++k) {
          CHECK(periodic_preimages(rule, x, k * p).empty());
        }
      }
    }
  }
}

TEST_CASE("least period of the image divides the least period") {
  for (unsigned n = 0; n < 256; ++n) {
    const RuleTable rule = wolfram_rule(n);
    for (std::size_t p = 1; p <= 6; ++p) {
      for (const auto& y : all_configs_of_period(p)) {
        CHECK(least_period(y) % least_period(apply(rule, y)) == 0);
      }
    }
  }
}
