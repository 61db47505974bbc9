#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "vnca/rule_table.hpp"

using namespace vnca;

namespace {

PeriodicConfig config(std::string_view cells) { return PeriodicConfig::from_string(2, cells); }

// All binary configurations with stored period up to max_period.
std::vector<PeriodicConfig> all_configs_up_to(std::size_t max_period) {
  std::vector<PeriodicConfig> out;
  for (std::size_t p = 1; p <= max_period; ++p) {
    for (std::size_t w = 0; w < (std::size_t{1} << p); ++w) {
      std::vector<std::uint8_t> cells(p);
      for (std::size_t i = 0; i < p; ++i) cells[i] = (w >> (p - 1 - i)) & 1;
      out.emplace_back(2, std::move(cells));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("wolfram numbering") {
  const RuleTable r110 = wolfram_rule(110);
  // 110 = 01101110 in the descending-word order 111,110,...,000.
  CHECK(r110.output(0b111) == 0);
  CHECK(r110.output(0b110) == 1);
  CHECK(r110.output(0b101) == 1);
  CHECK(r110.output(0b100) == 0);
  CHECK(r110.output(0b011) == 1);
  CHECK(r110.output(0b010) == 1);
  CHECK(r110.output(0b001) == 1);
  CHECK(r110.output(0b000) == 0);
  CHECK(wolfram_number(r110) == 110);

  const RuleTable zero = wolfram_rule(0);
  for (std::size_t w = 0; w < 8; ++w) CHECK(zero.output(w) == 0);

  // 204 keeps the centre cell.
  const RuleTable identity = wolfram_rule(204);
  for (std::size_t w = 0; w < 8; ++w) CHECK(identity.output(w) == ((w >> 1) & 1));

  CHECK_THROWS_AS(wolfram_rule(256), std::invalid_argument);
}

TEST_CASE("apply on periodic configurations") {
  CHECK(apply(wolfram_rule(110), config("01")) == config("11"));
  CHECK(apply(wolfram_rule(128), config("1")) == config("1"));
  for (unsigned n : {0u, 30u, 110u, 204u}) {
    for (const auto& x : all_configs_up_to(4)) {
      const PeriodicConfig y = apply(wolfram_rule(n), x);
      CHECK(y.period() == x.period());
      if (n == 204) CHECK(y == x);
    }
  }
  CHECK_THROWS_AS(apply(wolfram_rule(110), PeriodicConfig::constant(3, 0)), std::invalid_argument);
}

TEST_CASE("compose agrees with sequential application") {
  // Exhaustive over all elementary pairs and all stored periods up to 8.
  const auto configs = all_configs_up_to(8);
  std::vector<RuleTable> rules;
  rules.reserve(256);
  for (unsigned n = 0; n < 256; ++n) rules.push_back(wolfram_rule(n));
  for (unsigned a = 0; a < 256; ++a) {
    for (unsigned b = 0; b < 256; ++b) {
      const RuleTable ab = compose(rules[a], rules[b]);
      bool ok = true;
      for (const auto& x : configs) {
        if (apply(ab, x) != apply(rules[b], apply(rules[a], x))) {
          ok = false;
          break;
        }
      }
      if (!ok) {
        CAPTURE(a);
        CAPTURE(b);
        CHECK(ok);
      }
    }
  }
}

TEST_CASE("compose examples") {
  CHECK(rules_equal(compose(wolfram_rule(51), wolfram_rule(51)), wolfram_rule(204)));
  CHECK(rules_equal(compose(wolfram_rule(204), wolfram_rule(110)), wolfram_rule(110)));
  // min.max.min = min on rules 128 and 254.
  const RuleTable r128 = wolfram_rule(128);
  CHECK(rules_equal(compose(compose(r128, wolfram_rule(254)), r128), r128));
  CHECK_THROWS_AS(compose(wolfram_rule(0), RuleTable(3, 0, 0, {0, 1, 2})), std::invalid_argument);
}

TEST_CASE("compose is associative on sampled triples") {
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<unsigned> dist(0, 255);
  for (int i = 0; i < 60; ++i) {
    const RuleTable a = wolfram_rule(dist(rng));
    const RuleTable b = wolfram_rule(dist(rng));
    const RuleTable c = wolfram_rule(dist(rng));
    CHECK(rules_equal(compose(compose(a, b), c), compose(a, compose(b, c))));
  }
}

TEST_CASE("minimal memory") {
  // Rule 51 padded to radius 2 reduces to the radius-0 complement table.
  RuleTable padded = compose(compose(wolfram_rule(204), wolfram_rule(51)), wolfram_rule(204));
  REQUIRE(padded.left() == 3);
  const RuleTable reduced = minimal_memory(padded);
  CHECK(reduced.left() == 0);
  CHECK(reduced.right() == 0);
  CHECK(reduced.output(0) == 1);
  CHECK(reduced.output(1) == 0);

  // Rule 110 depends on all three coordinates: check by exhausting the table.
  const RuleTable r110 = wolfram_rule(110);
  CHECK(minimal_memory(r110) == r110);
  bool left_matters = false, centre_matters = false, right_matters = false;
  for (std::size_t w = 0; w < 8; ++w) {
    left_matters |= r110.output(w) != r110.output(w ^ 0b100);
    centre_matters |= r110.output(w) != r110.output(w ^ 0b010);
    right_matters |= r110.output(w) != r110.output(w ^ 0b001);
  }
  CHECK(left_matters);
  CHECK(centre_matters);
  CHECK(right_matters);

  const RuleTable identity = minimal_memory(compose(wolfram_rule(51), wolfram_rule(51)));
  CHECK(identity.left() == 0);
  CHECK(identity.right() == 0);
  CHECK(identity.output(0) == 0);
  CHECK(identity.output(1) == 1);

  // A rule reading only the left neighbour keeps the centre in its window.
  const RuleTable shift = minimal_memory(wolfram_rule(240));
  CHECK(shift.left() == 1);
  CHECK(shift.right() == 0);
}

TEST_CASE("rules_equal") {
  CHECK(rules_equal(wolfram_rule(204), compose(wolfram_rule(51), wolfram_rule(51))));
  CHECK_FALSE(rules_equal(wolfram_rule(110), wolfram_rule(124)));
  for (unsigned n : {0u, 51u, 90u, 110u, 255u}) {
    CHECK(rules_equal(wolfram_rule(n), minimal_memory(wolfram_rule(n))));
  }
}

TEST_CASE("rules_equal matches pointwise application on short periods") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<unsigned> dist(0, 255);
  const auto configs = all_configs_up_to(3);  // union window length for two elementary rules
  for (int i = 0; i < 200; ++i) {
    const RuleTable a = wolfram_rule(dist(rng));
    const RuleTable b = wolfram_rule(dist(rng));
    bool pointwise = true;
    for (const auto& x : configs) {
      if (apply(a, x) != apply(b, x)) {
        pointwise = false;
        break;
      }
    }
    CHECK(rules_equal(a, b) == pointwise);
  }
}

TEST_CASE("mirror") {
  CHECK(wolfram_number(mirror(wolfram_rule(110))) == 124);
  CHECK(wolfram_number(mirror(wolfram_rule(204))) == 204);
  CHECK(wolfram_number(mirror(wolfram_rule(128))) == 128);
  for (unsigned n = 0; n < 256; ++n) {
    CHECK(mirror(mirror(wolfram_rule(n))) == wolfram_rule(n));
  }
}

TEST_CASE("mirror distributes over composition") {
  // (a then b) mirrored = (a mirrored) then (b mirrored), all elementary pairs.
  for (unsigned a = 0; a < 256; ++a) {
    const RuleTable ma = mirror(wolfram_rule(a));
    for (unsigned b = 0; b < 256; ++b) {
      const RuleTable lhs = mirror(compose(wolfram_rule(a), wolfram_rule(b)));
      const RuleTable rhs = compose(ma, mirror(wolfram_rule(b)));
      if (!rules_equal(lhs, rhs)) {
        CAPTURE(a);
        CAPTURE(b);
        REQUIRE(rules_equal(lhs, rhs));
      }
    }
  }
}

TEST_CASE("complements") {
  CHECK(wolfram_number(complement_right(wolfram_rule(128))) == 127);
  for (unsigned n : {0u, 51u, 110u, 170u}) {
    const RuleTable r = wolfram_rule(n);
    CHECK(complement_left(complement_left(r)) == r);
    CHECK(complement_right(complement_right(r)) == r);
    CHECK(complement_left(complement_right(r)) == complement_right(complement_left(r)));
  }
  CHECK(complement_left(complement_right(wolfram_rule(51))) == wolfram_rule(51));
  CHECK_THROWS_AS(complement_left(RuleTable(3, 0, 0, {0, 1, 2})), std::invalid_argument);
}

TEST_CASE("constant configurations stay constant") {
  for (unsigned n = 0; n < 256; ++n) {
    for (std::uint8_t k : {0, 1}) {
      const PeriodicConfig image = apply(wolfram_rule(n), PeriodicConfig::constant(2, k, 3));
      CHECK(least_period(image) == 1);
    }
  }
}

TEST_CASE("rule literals round-trip") {
  CHECK(rule_literal(wolfram_rule(110)) == "eca:110");
  CHECK(parse_rule_literal("eca:110") == wolfram_rule(110));

  const RuleTable composed = compose(wolfram_rule(110), wolfram_rule(30));
  const std::string literal = rule_literal(composed);
  CHECK(literal.rfind("table:q=2,l=2,r=2,hex=", 0) == 0);
  CHECK(parse_rule_literal(literal) == composed);

  const RuleTable ternary(3, 1, 0, {0, 1, 2, 1, 2, 0, 2, 0, 1});
  CHECK(parse_rule_literal(rule_literal(ternary)) == ternary);

  CHECK_THROWS_AS(parse_rule_literal("eca:256"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rule_literal("table:q=2,l=1,r=1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rule_literal("table:q=2,l=1,r=1,hex=zz"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rule_literal("nope"), std::invalid_argument);
  // A hex value larger than the table must be rejected.
  CHECK_THROWS_AS(parse_rule_literal("table:q=2,l=0,r=0,hex=5"), std::invalid_argument);
}

TEST_CASE("rule table validation") {
  CHECK_THROWS_AS(RuleTable(2, 1, 1, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(RuleTable(2, -1, 1, std::vector<std::uint8_t>(2, 0)), std::invalid_argument);
  CHECK_THROWS_AS(RuleTable(2, 0, 0, {0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(RuleTable(1, 0, 0, {0}), std::invalid_argument);
}
