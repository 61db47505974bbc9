#include "vnca/finite_group.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace vnca::finite {

FiniteGroup::FiniteGroup(std::vector<int> table) : table_(std::move(table)) {
  // Order from the table size.
  int n = 0;
  while (static_cast<std::size_t>(n) * n < table_.size()) ++n;
  if (static_cast<std::size_t>(n) * n != table_.size() || n == 0) {
    throw std::invalid_argument("Cayley table must be a nonempty square matrix");
  }
  if (n > kMaxGroupOrder) throw std::invalid_argument("group order exceeds the supported cap");
  order_ = n;

  for (int v : table_) {
    if (v < 0 || v >= n) throw std::invalid_argument("Cayley table entry out of range");
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (op(op(a, b), c) != op(a, op(b, c))) {
          throw std::invalid_argument("Cayley table is not associative");
        }
      }
    }
  }

  identity_ = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = op(e, a) == a && op(a, e) == a;
    if (ok) {
      identity_ = e;
      break;
    }
  }
  if (identity_ < 0) throw std::invalid_argument("Cayley table has no identity element");

  inverse_.assign(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (op(a, b) == identity_ && op(b, a) == identity_) {
        inverse_[static_cast<std::size_t>(a)] = b;
        break;
      }
    }
    if (inverse_[static_cast<std::size_t>(a)] < 0) {
      throw std::invalid_argument("Cayley table element has no inverse");
    }
  }
}

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) throw std::invalid_argument("cyclic group order must be positive");
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) table[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
  }
  return FiniteGroup(std::move(table));
}

FiniteGroup FiniteGroup::klein_four() {
  std::vector<int> table(16);
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) table[static_cast<std::size_t>(a) * 4 + b] = a ^ b;
  }
  return FiniteGroup(std::move(table));
}

namespace {

// Closure of permutation generators; elements are indexed in the order they
// are discovered from the identity, products composed left-to-right
// ((a*b)(x) = b(a(x))).
FiniteGroup from_permutation_generators(int points, const std::vector<std::vector<int>>& gens) {
  std::vector<std::vector<int>> elems;
  std::vector<int> id(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) id[static_cast<std::size_t>(i)] = i;
  elems.push_back(id);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : gens) {
      std::vector<int> prod(static_cast<std::size_t>(points));
      for (int x = 0; x < points; ++x) {
        prod[static_cast<std::size_t>(x)] = g[static_cast<std::size_t>(elems[i][static_cast<std::size_t>(x)])];
      }
      if (std::find(elems.begin(), elems.end(), prod) == elems.end()) elems.push_back(prod);
    }
  }
  std::sort(elems.begin(), elems.end());

  const int n = static_cast<int>(elems.size());
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      std::vector<int> prod(static_cast<std::size_t>(points));
      for (int x = 0; x < points; ++x) {
        prod[static_cast<std::size_t>(x)] =
            elems[static_cast<std::size_t>(b)][static_cast<std::size_t>(elems[static_cast<std::size_t>(a)][static_cast<std::size_t>(x)])];
      }
      const auto it = std::find(elems.begin(), elems.end(), prod);
      table[static_cast<std::size_t>(a) * n + b] = static_cast<int>(it - elems.begin());
    }
  }
  return FiniteGroup(std::move(table));
}

}  // namespace

FiniteGroup FiniteGroup::symmetric_3() {
  return from_permutation_generators(3, {{1, 0, 2}, {1, 2, 0}});
}

FiniteGroup FiniteGroup::dihedral_4() {
  return from_permutation_generators(4, {{1, 2, 3, 0}, {3, 2, 1, 0}});
}

ElementMask subgroup_closure(const FiniteGroup& g, ElementMask seed) {
  ElementMask mask = seed | (ElementMask{1} << g.identity());
  bool grew = true;
  while (grew) {
    grew = false;
    for (int a = 0; a < g.order(); ++a) {
      if (!(mask >> a & 1)) continue;
      for (int b = 0; b < g.order(); ++b) {
        if (!(mask >> b & 1)) continue;
        const int c = g.op(a, b);
        if (!(mask >> c & 1)) {
          mask |= ElementMask{1} << c;
          grew = true;
        }
      }
    }
  }
  return mask;
}

namespace {

std::vector<int> mask_elements(ElementMask mask, int order) {
  std::vector<int> out;
  for (int i = 0; i < order; ++i) {
    if (mask >> i & 1) out.push_back(i);
  }
  return out;
}

ElementMask conjugate_mask(const FiniteGroup& g, ElementMask mask, int by) {
  // g^-1 H g
  ElementMask out = 0;
  const int inv = g.inverse(by);
  for (int h = 0; h < g.order(); ++h) {
    if (mask >> h & 1) out |= ElementMask{1} << g.op(g.op(inv, h), by);
  }
  return out;
}

}  // namespace

std::vector<Subgroup> all_subgroups(const FiniteGroup& g) {
  std::set<ElementMask> found;
  std::vector<ElementMask> queue;
  const ElementMask trivial = subgroup_closure(g, 0);
  found.insert(trivial);
  queue.push_back(trivial);
  while (!queue.empty()) {
    const ElementMask h = queue.back();
    queue.pop_back();
    for (int x = 0; x < g.order(); ++x) {
      if (h >> x & 1) continue;
      const ElementMask k = subgroup_closure(g, h | (ElementMask{1} << x));
      if (found.insert(k).second) queue.push_back(k);
    }
  }
  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (ElementMask mask : found) out.push_back(Subgroup{mask, mask_elements(mask, g.order())});
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    const auto pa = std::popcount(a.mask), pb = std::popcount(b.mask);
    return pa != pb ? pa < pb : a.mask < b.mask;
  });
  return out;
}

std::vector<SubgroupClass> subgroup_conjugacy_classes(const FiniteGroup& g) {
  const std::vector<Subgroup> subgroups = all_subgroups(g);
  std::set<ElementMask> assigned;
  std::vector<SubgroupClass> classes;
  for (const Subgroup& h : subgroups) {
    if (assigned.count(h.mask)) continue;
    SubgroupClass cls;
    std::set<ElementMask> members;
    for (int x = 0; x < g.order(); ++x) members.insert(conjugate_mask(g, h.mask, x));
    for (ElementMask m : members) assigned.insert(m);
    cls.members.assign(members.begin(), members.end());
    const ElementMask rep = cls.members.front();
    cls.representative = Subgroup{rep, mask_elements(rep, g.order())};

    ElementMask normalizer = 0;
    for (int x = 0; x < g.order(); ++x) {
      if (conjugate_mask(g, rep, x) == rep) normalizer |= ElementMask{1} << x;
    }
    cls.normalizer = normalizer;
    cls.quotient_order = std::popcount(normalizer) / std::popcount(rep);
    classes.push_back(std::move(cls));
  }
  std::sort(classes.begin(), classes.end(), [](const SubgroupClass& a, const SubgroupClass& b) {
    const auto pa = std::popcount(a.representative.mask), pb = std::popcount(b.representative.mask);
    return pa != pb ? pa < pb : a.representative.mask < b.representative.mask;
  });
  return classes;
}

FiniteGroup parse_group_spec(const std::string& spec) {
  if (spec.rfind("zn:", 0) == 0) {
    int n = 0;
    try {
      n = std::stoi(spec.substr(3));
    } catch (const std::exception&) {
      throw std::invalid_argument("invalid cyclic group order in " + spec);
    }
    return FiniteGroup::cyclic(n);
  }
  if (spec == "s3") return FiniteGroup::symmetric_3();
  if (spec == "d4") return FiniteGroup::dihedral_4();
  if (spec == "klein4") return FiniteGroup::klein_four();
  if (spec.rfind("cayley:", 0) == 0) {
    const std::string path = spec.substr(7);
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open Cayley table file " + path);
    int n = 0;
    if (!(in >> n) || n < 1) throw std::invalid_argument("Cayley table file must start with the order");
    std::vector<int> table(static_cast<std::size_t>(n) * n);
    for (auto& v : table) {
      if (!(in >> v)) throw std::invalid_argument("Cayley table file is truncated");
    }
    return FiniteGroup(std::move(table));
  }
  throw std::invalid_argument("unknown group spec: " + spec +
                              " (expected zn:<n>, s3, d4, klein4 or cayley:<file>)");
}

}  // namespace vnca::finite
