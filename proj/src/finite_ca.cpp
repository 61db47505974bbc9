#include "vnca/finite_ca.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace vnca::finite {

ConfigSpace::ConfigSpace(FiniteGroup group, unsigned alphabet, std::size_t max_configs)
    : group_(std::move(group)), alphabet_(alphabet) {
  if (alphabet_ < 2) throw std::invalid_argument("alphabet size must be at least 2");
  const int n = group_.order();
  std::size_t size = 1;
  for (int i = 0; i < n; ++i) {
    if (size > max_configs / alphabet_) throw std::invalid_argument("configuration space too large");
    size *= alphabet_;
  }
  size_ = size;

  // x . g at element h reads x at h g^-1.
  action_.assign(static_cast<std::size_t>(n) * size_, 0);
  std::vector<std::uint8_t> values(static_cast<std::size_t>(n));
  for (std::uint32_t c = 0; c < size_; ++c) {
    std::uint32_t v = c;
    for (int i = n; i-- > 0;) {
      values[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(v % alphabet_);
      v /= alphabet_;
    }
    for (int g = 0; g < n; ++g) {
      const int ginv = group_.inverse(g);
      std::uint32_t moved = 0;
      for (int h = 0; h < n; ++h) {
        moved = moved * alphabet_ + values[static_cast<std::size_t>(group_.op(h, ginv))];
      }
      action_[static_cast<std::size_t>(g) * size_ + c] = moved;
    }
  }

  stabilizer_.assign(size_, 0);
  orbit_rep_.assign(size_, 0);
  std::vector<char> visited(size_, 0);
  for (std::uint32_t c = 0; c < size_; ++c) {
    ElementMask stab = 0;
    for (int g = 0; g < n; ++g) {
      if (act(c, g) == c) stab |= ElementMask{1} << g;
    }
    stabilizer_[c] = stab;
    if (!visited[c]) {
      orbit_reps_.push_back(c);
      for (int g = 0; g < n; ++g) {
        const std::uint32_t m = act(c, g);
        visited[m] = 1;
        orbit_rep_[m] = c;  // c is minimal: configs are scanned ascending
      }
    }
  }
}

std::vector<std::uint32_t> ConfigSpace::orbit(std::uint32_t config) const {
  std::vector<std::uint32_t> out;
  for (int g = 0; g < group_.order(); ++g) out.push_back(act(config, g));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::uint8_t> ConfigSpace::decode(std::uint32_t config) const {
  const int n = group_.order();
  std::vector<std::uint8_t> values(static_cast<std::size_t>(n));
  for (int i = n; i-- > 0;) {
    values[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(config % alphabet_);
    config /= alphabet_;
  }
  return values;
}

std::uint32_t ConfigSpace::encode(const std::vector<std::uint8_t>& values) const {
  if (values.size() != static_cast<std::size_t>(group_.order())) {
    throw std::invalid_argument("configuration length must equal the group order");
  }
  std::uint32_t c = 0;
  for (std::uint8_t v : values) {
    if (v >= alphabet_) throw std::invalid_argument("configuration symbol out of range");
    c = c * alphabet_ + v;
  }
  return c;
}

bool is_equivariant(const ConfigSpace& space, const std::vector<std::uint32_t>& images) {
  if (images.size() != space.size()) return false;
  for (std::uint32_t v : images) {
    if (v >= space.size()) return false;
  }
  for (std::uint32_t c = 0; c < space.size(); ++c) {
    for (int g = 0; g < space.group().order(); ++g) {
      if (images[space.act(c, g)] != space.act(images[c], g)) return false;
    }
  }
  return true;
}

EquivariantMap make_equivariant(const ConfigSpace& space, std::vector<std::uint32_t> images) {
  if (!is_equivariant(space, images)) {
    throw std::invalid_argument("image table is not G-equivariant");
  }
  return EquivariantMap{std::move(images)};
}

EquivariantMap identity_map(const ConfigSpace& space) {
  std::vector<std::uint32_t> images(space.size());
  for (std::uint32_t c = 0; c < space.size(); ++c) images[c] = c;
  return EquivariantMap{std::move(images)};
}

EquivariantMap compose(const ConfigSpace& space, const EquivariantMap& a, const EquivariantMap& b) {
  std::vector<std::uint32_t> images(space.size());
  for (std::uint32_t c = 0; c < space.size(); ++c) images[c] = b.images[a.images[c]];
  return EquivariantMap{std::move(images)};
}

bool exists_ca_mapping(const ConfigSpace& space, std::uint32_t x, std::uint32_t y) {
  const ElementMask sx = space.stabilizer(x);
  return (sx & space.stabilizer(y)) == sx;
}

bool exists_ica_mapping(const ConfigSpace& space, std::uint32_t x, std::uint32_t y) {
  return space.stabilizer(x) == space.stabilizer(y);
}

std::optional<std::uint32_t> nonregularity_witness(const ConfigSpace& space,
                                                   const EquivariantMap& map) {
  std::vector<char> in_image(space.size(), 0);
  std::vector<char> has_matched_preimage(space.size(), 0);
  for (std::uint32_t c = 0; c < space.size(); ++c) {
    const std::uint32_t y = map.images[c];
    in_image[y] = 1;
    if (space.stabilizer(c) == space.stabilizer(y)) has_matched_preimage[y] = 1;
  }
  for (std::uint32_t y = 0; y < space.size(); ++y) {
    if (in_image[y] && !has_matched_preimage[y]) return y;
  }
  return std::nullopt;
}

bool is_regular(const ConfigSpace& space, const EquivariantMap& map) {
  return !nonregularity_witness(space, map).has_value();
}

std::optional<EquivariantMap> weak_inverse(const ConfigSpace& space, const EquivariantMap& map) {
  std::vector<char> in_image(space.size(), 0);
  for (std::uint32_t c = 0; c < space.size(); ++c) in_image[map.images[c]] = 1;

  std::vector<std::uint32_t> phi(space.size());
  for (std::uint32_t c = 0; c < space.size(); ++c) phi[c] = c;

  for (std::uint32_t rep : space.orbit_reps()) {
    if (!in_image[rep]) continue;  // image is orbit-closed, checking reps suffices
    // Smallest preimage with the same stabilizer.
    std::optional<std::uint32_t> back;
    for (std::uint32_t c = 0; c < space.size(); ++c) {
      if (map.images[c] == rep && space.stabilizer(c) == space.stabilizer(rep)) {
        back = c;
        break;
      }
    }
    if (!back) return std::nullopt;
    for (int g = 0; g < space.group().order(); ++g) {
      phi[space.act(rep, g)] = space.act(*back, g);
    }
  }

  EquivariantMap result{std::move(phi)};
  if (!is_equivariant(space, result.images)) {
    throw std::logic_error("constructed weak inverse is not equivariant");
  }
  const EquivariantMap round_trip = compose(space, compose(space, map, result), map);
  if (round_trip != map) {
    throw std::logic_error("constructed weak inverse fails tau.phi.tau = tau");
  }
  return result;
}

BoxDecomposition compute_boxes(const ConfigSpace& space) {
  BoxDecomposition out;
  out.classes = subgroup_conjugacy_classes(space.group());
  out.boxes.resize(out.classes.size());

  std::map<ElementMask, int> class_of_mask;
  for (std::size_t i = 0; i < out.classes.size(); ++i) {
    out.boxes[i].subgroup_class = static_cast<int>(i);
    out.boxes[i].orbit_size = static_cast<std::uint64_t>(space.group().order()) /
                              static_cast<std::uint64_t>(out.classes[i].representative.elements.size());
    for (ElementMask m : out.classes[i].members) class_of_mask[m] = static_cast<int>(i);
  }

  for (std::uint32_t c = 0; c < space.size(); ++c) {
    const auto it = class_of_mask.find(space.stabilizer(c));
    if (it == class_of_mask.end()) throw std::logic_error("stabilizer is not a known subgroup");
    ++out.boxes[static_cast<std::size_t>(it->second)].config_count;
  }
  for (std::uint32_t rep : space.orbit_reps()) {
    Box& box = out.boxes[static_cast<std::size_t>(class_of_mask.at(space.stabilizer(rep)))];
    ++box.orbit_count;
    box.orbit_reps.push_back(rep);
  }

  for (const Box& box : out.boxes) {
    if (box.config_count != box.orbit_count * box.orbit_size) {
      throw std::logic_error("box does not split into equal-size orbits");
    }
  }
  return out;
}

namespace {

std::vector<EquivariantMap> enumerate_by_choice(const ConfigSpace& space, bool exact_stabilizer,
                                                std::size_t max_configs, std::size_t max_maps) {
  if (space.size() > max_configs) {
    throw std::invalid_argument("configuration count exceeds the enumeration cap");
  }
  const auto& reps = space.orbit_reps();
  std::vector<std::vector<std::uint32_t>> candidates(reps.size());
  std::size_t total = 1;
  bool overflow = false;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::uint32_t y = 0; y < space.size(); ++y) {
      const bool ok = exact_stabilizer ? exists_ica_mapping(space, reps[i], y)
                                       : exists_ca_mapping(space, reps[i], y);
      if (ok) candidates[i].push_back(y);
    }
    if (total > max_maps / candidates[i].size()) overflow = true;
    if (!overflow) total *= candidates[i].size();
  }
  if (overflow || total > max_maps) {
    throw std::invalid_argument("map count exceeds the enumeration cap");
  }

  std::vector<EquivariantMap> out;
  out.reserve(total);
  std::vector<std::size_t> pick(reps.size(), 0);
  std::vector<std::uint32_t> images(space.size());
  while (true) {
    for (std::size_t i = 0; i < reps.size(); ++i) {
      const std::uint32_t y = candidates[i][pick[i]];
      for (int g = 0; g < space.group().order(); ++g) {
        images[space.act(reps[i], g)] = space.act(y, g);
      }
    }
    out.push_back(EquivariantMap{images});
    // Odometer, last representative fastest.
    std::size_t i = reps.size();
    while (i > 0) {
      --i;
      if (++pick[i] < candidates[i].size()) break;
      pick[i] = 0;
      if (i == 0) return out;
    }
  }
}

}  // namespace

std::vector<EquivariantMap> enumerate_ca(const ConfigSpace& space, std::size_t max_configs,
                                         std::size_t max_maps) {
  return enumerate_by_choice(space, false, max_configs, max_maps);
}

bool preserves_stabilizers(const ConfigSpace& space, const EquivariantMap& map) {
  for (std::uint32_t c = 0; c < space.size(); ++c) {
    if (space.stabilizer(c) != space.stabilizer(map.images[c])) return false;
  }
  return true;
}

std::vector<EquivariantMap> enumerate_stabilizer_preserving(const ConfigSpace& space,
                                                            std::size_t max_configs,
                                                            std::size_t max_maps) {
  return enumerate_by_choice(space, true, max_configs, max_maps);
}

BigInt stabilizer_preserving_size_formula(const ConfigSpace& space) {
  const BoxDecomposition decomposition = compute_boxes(space);
  BigInt size = 1;
  for (std::size_t i = 0; i < decomposition.classes.size(); ++i) {
    const BigInt quotient = decomposition.classes[i].quotient_order;
    const std::uint64_t alpha = decomposition.boxes[i].orbit_count;
    BigInt term = 1;
    for (std::uint64_t j = 0; j < alpha; ++j) term *= quotient * alpha;
    size *= term;
  }
  return size;
}

BigInt stabilizer_preserving_size_by_images(const ConfigSpace& space) {
  // Count, per orbit representative, the configurations with exactly the
  // same stabilizer; each independent choice extends to one map in R.
  std::map<ElementMask, std::uint64_t> exact_count;
  for (std::uint32_t c = 0; c < space.size(); ++c) ++exact_count[space.stabilizer(c)];
  BigInt size = 1;
  for (std::uint32_t rep : space.orbit_reps()) size *= exact_count.at(space.stabilizer(rep));
  return size;
}

}  // namespace vnca::finite
