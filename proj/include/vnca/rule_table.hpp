#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vnca/periodic_config.hpp"

namespace vnca {

/// A one-dimensional CA presented by its local rule on the cell window
/// [-left, right].  The table is a flat array of q^(left+right+1) output
/// symbols indexed by the window word read as a base-q integer, leftmost cell
/// most significant.  For q = 2, left = right = 1 this matches the Wolfram
/// numbering: rule N sends window word w to bit w of N.
///
/// Values are immutable after construction; all operations below are pure.
class RuleTable {
public:
  RuleTable(unsigned alphabet, int left, int right, std::vector<std::uint8_t> table);

  unsigned alphabet() const { return alphabet_; }
  int left() const { return left_; }
  int right() const { return right_; }
  int window_length() const { return left_ + right_ + 1; }
  std::size_t table_size() const { return table_.size(); }
  std::uint8_t output(std::size_t word) const { return table_[word]; }
  const std::vector<std::uint8_t>& table() const { return table_; }

  bool operator==(const RuleTable&) const = default;

private:
  unsigned alphabet_;
  int left_;
  int right_;
  std::vector<std::uint8_t> table_;
};

/// q^window_length with a sanity cap; throws std::invalid_argument when the
/// table would be unreasonably large (the cap leaves room for window length
/// 24 at q = 2).
std::size_t checked_table_size(unsigned alphabet, int window_length);

/// The elementary rule with the given Wolfram number (0..255).
RuleTable wolfram_rule(unsigned number);

/// Wolfram number of a rule whose minimal memory set fits inside [-1, 1] at
/// q = 2; nullopt otherwise.
std::optional<unsigned> wolfram_number(const RuleTable& rule);

/// One synchronous step on a periodic configuration.  The stored period of
/// the result equals the stored period of the input.
PeriodicConfig apply(const RuleTable& rule, const PeriodicConfig& x);

/// The rule computing "a, then b" as a single table on the summed window.
RuleTable compose(const RuleTable& a, const RuleTable& b);

/// The same CA on the smallest sub-window [-l', r'] (l', r' >= 0) whose
/// dropped coordinates never influence the output.
RuleTable minimal_memory(const RuleTable& rule);

/// Equality as transformations of the full configuration space: the tables
/// agree on every word of the union window.
bool rules_equal(const RuleTable& a, const RuleTable& b);

/// Conjugation by spatial reflection; swaps the window ends.
RuleTable mirror(const RuleTable& rule);

/// Binary complement applied before the rule (q = 2 only).
RuleTable complement_left(const RuleTable& rule);

/// Binary complement applied after the rule (q = 2 only).
RuleTable complement_right(const RuleTable& rule);

/// Textual rule literals: "eca:<0..255>" when q = 2 and left = right = 1,
/// otherwise "table:q=<q>,l=<l>,r=<r>,hex=<digits>" where the hex digits
/// encode the outputs concatenated in descending input order, packed as a
/// big-endian base-q integer.  parse_rule_literal(rule_literal(r)) == r.
std::string rule_literal(const RuleTable& rule);
RuleTable parse_rule_literal(const std::string& text);

}  // namespace vnca
