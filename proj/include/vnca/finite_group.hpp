#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace vnca::finite {

/// A finite group given by its Cayley table over element indices 0..n-1.
/// Associativity, identity and inverses are validated at construction.
class FiniteGroup {
public:
  /// table[a * n + b] is the index of a*b.
  explicit FiniteGroup(std::vector<int> table);

  static FiniteGroup cyclic(int n);
  static FiniteGroup klein_four();
  static FiniteGroup symmetric_3();
  static FiniteGroup dihedral_4();  // symmetries of the square, order 8

  int order() const { return order_; }
  int identity() const { return identity_; }
  int op(int a, int b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  int inverse(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  const std::vector<int>& table() const { return table_; }

private:
  int order_;
  int identity_;
  std::vector<int> table_;
  std::vector<int> inverse_;
};

/// Element subsets as bit masks; group orders are capped at 20.
using ElementMask = std::uint32_t;

inline constexpr int kMaxGroupOrder = 20;

struct Subgroup {
  ElementMask mask = 0;
  std::vector<int> elements;  // sorted ascending

  bool operator==(const Subgroup&) const = default;
};

struct SubgroupClass {
  Subgroup representative;            // smallest mask in the class
  std::vector<ElementMask> members;   // all conjugates, sorted
  ElementMask normalizer = 0;         // normalizer of the representative
  int quotient_order = 0;             // |N(H)| / |H|
};

/// Closure of the given elements under the group operation.
ElementMask subgroup_closure(const FiniteGroup& g, ElementMask seed);

/// Every subgroup, found by closing generating sets; sorted by (size, mask).
std::vector<Subgroup> all_subgroups(const FiniteGroup& g);

/// Subgroups grouped by conjugacy, sorted by (|H|, representative mask).
std::vector<SubgroupClass> subgroup_conjugacy_classes(const FiniteGroup& g);

/// Group specs accepted by the CLI: "zn:<n>", "s3", "d4", "klein4", or
/// "cayley:<file>" where the file holds n followed by the n*n index matrix,
/// whitespace-separated.
FiniteGroup parse_group_spec(const std::string& spec);

}  // namespace vnca::finite
