#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "vnca/bigint.hpp"
#include "vnca/finite_group.hpp"

namespace vnca::finite {

/// The configuration space A^G for a finite group G and alphabet {0..q-1},
/// with the right shift action precomputed.  Configurations are encoded as
/// base-q integers, the value at the group identity-ordered element 0 most
/// significant, so numeric order equals lexicographic order on value words.
class ConfigSpace {
public:
  ConfigSpace(FiniteGroup group, unsigned alphabet, std::size_t max_configs = std::size_t{1} << 20);

  const FiniteGroup& group() const { return group_; }
  unsigned alphabet() const { return alphabet_; }
  std::size_t size() const { return size_; }

  /// x . g under the right action ((h)(x.g) = (h g^-1) x).
  std::uint32_t act(std::uint32_t config, int g) const {
    return action_[static_cast<std::size_t>(g) * size_ + config];
  }

  ElementMask stabilizer(std::uint32_t config) const { return stabilizer_[config]; }
  std::uint32_t orbit_rep(std::uint32_t config) const { return orbit_rep_[config]; }
  const std::vector<std::uint32_t>& orbit_reps() const { return orbit_reps_; }
  std::vector<std::uint32_t> orbit(std::uint32_t config) const;

  std::vector<std::uint8_t> decode(std::uint32_t config) const;
  std::uint32_t encode(const std::vector<std::uint8_t>& values) const;

private:
  FiniteGroup group_;
  unsigned alphabet_;
  std::size_t size_;
  std::vector<std::uint32_t> action_;      // |G| x size
  std::vector<ElementMask> stabilizer_;    // per config
  std::vector<std::uint32_t> orbit_rep_;   // smallest config in the orbit
  std::vector<std::uint32_t> orbit_reps_;  // ascending
};

/// A G-equivariant transformation of A^G as a full image table; when G and A
/// are finite these are exactly the CA over A^G.
struct EquivariantMap {
  std::vector<std::uint32_t> images;

  auto operator<=>(const EquivariantMap&) const = default;
};

bool is_equivariant(const ConfigSpace& space, const std::vector<std::uint32_t>& images);

/// Validates equivariance; throws std::invalid_argument otherwise.
EquivariantMap make_equivariant(const ConfigSpace& space, std::vector<std::uint32_t> images);

EquivariantMap identity_map(const ConfigSpace& space);

/// "a then b" as maps of A^G.
EquivariantMap compose(const ConfigSpace& space, const EquivariantMap& a, const EquivariantMap& b);

/// Some CA maps x to y iff the stabilizer of x is contained in that of y;
/// some invertible CA does iff the stabilizers are equal.
bool exists_ca_mapping(const ConfigSpace& space, std::uint32_t x, std::uint32_t y);
bool exists_ica_mapping(const ConfigSpace& space, std::uint32_t x, std::uint32_t y);

/// A configuration in the image with no stabilizer-equal preimage, if any;
/// its existence is equivalent to the map not being vN-regular.
std::optional<std::uint32_t> nonregularity_witness(const ConfigSpace& space,
                                                   const EquivariantMap& map);

bool is_regular(const ConfigSpace& space, const EquivariantMap& map);

/// A weak inverse built from orbit representatives of the image: each image
/// orbit representative y is sent back to its smallest stabilizer-equal
/// preimage, extended equivariantly; everything outside the image is fixed.
/// Empty iff the map is not regular.  Verified before returning.
std::optional<EquivariantMap> weak_inverse(const ConfigSpace& space, const EquivariantMap& map);

/// The box of a stabilizer conjugacy class: the configurations whose
/// stabilizer is conjugate to the class representative.
struct Box {
  int subgroup_class = 0;        // index into BoxDecomposition::classes
  std::uint64_t config_count = 0;
  std::uint64_t orbit_size = 0;
  std::uint64_t orbit_count = 0;  // the class's alpha
  std::vector<std::uint32_t> orbit_reps;
};

struct BoxDecomposition {
  std::vector<SubgroupClass> classes;
  std::vector<Box> boxes;  // parallel to classes
};

BoxDecomposition compute_boxes(const ConfigSpace& space);

/// All equivariant maps, built by freely choosing an image with a larger
/// stabilizer for every orbit representative.  Guarded by caps on both the
/// configuration count and the number of maps.
std::vector<EquivariantMap> enumerate_ca(const ConfigSpace& space, std::size_t max_configs = 16,
                                         std::size_t max_maps = 4000000);

bool preserves_stabilizers(const ConfigSpace& space, const EquivariantMap& map);

/// The stabilizer-preserving maps, enumerated as in enumerate_ca but with
/// exact stabilizer matches.
std::vector<EquivariantMap> enumerate_stabilizer_preserving(const ConfigSpace& space,
                                                            std::size_t max_configs = 16,
                                                            std::size_t max_maps = 4000000);

/// |R| from the wreath-product structure: the product over stabilizer classes
/// of |N(H)/H|^alpha * alpha^alpha.
BigInt stabilizer_preserving_size_formula(const ConfigSpace& space);

/// |R| by direct counting: the product over orbit representatives of the
/// number of configurations with exactly the same stabilizer.
BigInt stabilizer_preserving_size_by_images(const ConfigSpace& space);

}  // namespace vnca::finite
