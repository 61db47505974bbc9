#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vnca/bigint.hpp"

namespace vnca::linear {

bool is_prime(std::uint32_t n);

/// A polynomial over the prime field F_p, coefficients stored lowest degree
/// first with no trailing zeros (the zero polynomial has no coefficients).
class FpPoly {
public:
  explicit FpPoly(std::uint32_t p);  // zero
  FpPoly(std::uint32_t p, std::vector<std::uint32_t> coeffs);  // reduced mod p

  static FpPoly constant(std::uint32_t p, std::uint32_t value);
  static FpPoly monomial(std::uint32_t p, int degree, std::uint32_t coeff = 1);

  std::uint32_t prime() const { return p_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return coeffs_.empty(); }
  std::uint32_t coeff(int i) const {
    return i >= 0 && i < static_cast<int>(coeffs_.size()) ? coeffs_[static_cast<std::size_t>(i)] : 0;
  }
  std::uint32_t leading() const { return coeffs_.empty() ? 0 : coeffs_.back(); }
  const std::vector<std::uint32_t>& coeffs() const { return coeffs_; }

  bool operator==(const FpPoly&) const = default;

private:
  std::uint32_t p_;
  std::vector<std::uint32_t> coeffs_;
};

FpPoly operator+(const FpPoly& a, const FpPoly& b);
FpPoly operator-(const FpPoly& a, const FpPoly& b);
FpPoly operator*(const FpPoly& a, const FpPoly& b);

/// Quotient and remainder; the divisor must be nonzero.
std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b);
FpPoly operator/(const FpPoly& a, const FpPoly& b);
FpPoly operator%(const FpPoly& a, const FpPoly& b);

FpPoly monic(const FpPoly& a);
FpPoly gcd(const FpPoly& a, const FpPoly& b);  // monic, gcd(0,0) = 0
FpPoly pow_mod(const FpPoly& base, const BigInt& exponent, const FpPoly& modulus);
std::optional<FpPoly> inverse_mod(const FpPoly& a, const FpPoly& modulus);

bool is_irreducible(const FpPoly& f);

/// Total order used to canonicalize factor lists: by degree, then by
/// coefficients from the highest degree down.
bool poly_less(const FpPoly& a, const FpPoly& b);

std::string to_string(const FpPoly& a);  // e.g. "x^2 + x + 1"

struct FactorPower {
  FpPoly factor;
  std::uint32_t multiplicity = 0;
  std::uint32_t degree = 0;
};

struct CyclotomicFactorization {
  std::uint32_t p = 0;
  std::uint32_t n = 0;
  std::vector<FactorPower> factors;  // sorted by poly_less
};

/// Factorization of x^n - 1 over F_p: writing n = m * p^v with p not dividing
/// m, x^n - 1 = (x^m - 1)^(p^v) and the squarefree part splits by
/// distinct-degree separation with deterministic gcd refinement.  All
/// multiplicities equal p^v.
CyclotomicFactorization factor_xn_minus_one(std::uint32_t n, std::uint32_t p);

}  // namespace vnca::linear
