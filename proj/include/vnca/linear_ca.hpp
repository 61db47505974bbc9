#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "vnca/bigint.hpp"
#include "vnca/fp_poly.hpp"

namespace vnca::linear {

/// An element of F_p[x] / <x^n - 1>, the algebra of one-dimensional linear CA
/// over the cyclic group of order n.
struct RingElement {
  std::uint32_t p = 2;
  std::uint32_t n = 1;
  FpPoly value;  // degree < n

  bool operator==(const RingElement&) const = default;
};

/// Reduces the coefficients cyclically (x^n = 1), so any length is accepted.
RingElement ring_element(std::uint32_t p, std::uint32_t n, const std::vector<std::uint32_t>& coeffs);
RingElement ring_element(std::uint32_t p, std::uint32_t n, const FpPoly& value);

RingElement ring_add(const RingElement& a, const RingElement& b);
RingElement ring_mul(const RingElement& a, const RingElement& b);

struct RegularityCheck {
  bool regular = false;
  std::optional<RingElement> inverse;  // satisfies aba = a and bab = b
};

/// Componentwise test through the factorization of x^n - 1: the element must
/// reduce to zero or to a unit modulo every p_i^{m_i}.  When regular, the
/// generalized inverse combines the component inverses by the Chinese
/// remainder theorem (zero components stay zero) and is re-verified.
RegularityCheck is_regular_element(const RingElement& a);
RegularityCheck is_regular_element(const RingElement& a, const CyclotomicFactorization& factorization);

/// Nonzero and divisible by every irreducible factor of x^n - 1.
bool is_nilpotent(const RingElement& a);
bool is_nilpotent(const RingElement& a, const CyclotomicFactorization& factorization);

/// Number of vN-regular elements of F_p[x] / <x^n - 1>: the product over the
/// factorization of (p^d_i - 1) * p^(d_i (m_i - 1)) + 1.
BigInt count_regular_elements(std::uint32_t n, std::uint32_t p);
BigInt count_regular_elements(const CyclotomicFactorization& factorization);

/// Oracle: enumerates every a and searches for b with a*a*b = a (equivalent
/// to aba = a by commutativity).  Guarded by a cap on p^n.
std::uint64_t brute_force_regular_count(std::uint32_t n, std::uint32_t p,
                                        std::uint64_t max_elements = std::uint64_t{1} << 16);

}  // namespace vnca::linear
