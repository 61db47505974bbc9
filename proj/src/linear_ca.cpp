#include "vnca/linear_ca.hpp"

#include <algorithm>
#include <stdexcept>

namespace vnca::linear {

namespace {

void require_same_ring(const RingElement& a, const RingElement& b) {
  if (a.p != b.p || a.n != b.n) throw std::invalid_argument("ring mismatch");
}

FpPoly cyclic_reduce(std::uint32_t p, std::uint32_t n, const std::vector<std::uint32_t>& coeffs) {
  std::vector<std::uint32_t> folded(n, 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    auto& slot = folded[i % n];
    slot = (slot + coeffs[i]) % p;
  }
  return FpPoly(p, std::move(folded));
}

}  // namespace

RingElement ring_element(std::uint32_t p, std::uint32_t n, const std::vector<std::uint32_t>& coeffs) {
  if (n < 1) throw std::invalid_argument("group order must be at least 1");
  return RingElement{p, n, cyclic_reduce(p, n, coeffs)};
}

RingElement ring_element(std::uint32_t p, std::uint32_t n, const FpPoly& value) {
  if (value.prime() != p) throw std::invalid_argument("field characteristic mismatch");
  return ring_element(p, n, value.coeffs());
}

RingElement ring_add(const RingElement& a, const RingElement& b) {
  require_same_ring(a, b);
  return RingElement{a.p, a.n, a.value + b.value};
}

RingElement ring_mul(const RingElement& a, const RingElement& b) {
  require_same_ring(a, b);
  // Cyclic convolution: x^n = 1.
  std::vector<std::uint32_t> out(a.n, 0);
  for (std::uint32_t i = 0; i < a.n; ++i) {
    const std::uint64_t ai = a.value.coeff(static_cast<int>(i));
    if (ai == 0) continue;
    for (std::uint32_t j = 0; j < a.n; ++j) {
      auto& slot = out[(i + j) % a.n];
      slot = static_cast<std::uint32_t>((slot + ai * b.value.coeff(static_cast<int>(j))) % a.p);
    }
  }
  return RingElement{a.p, a.n, FpPoly(a.p, std::move(out))};
}

RegularityCheck is_regular_element(const RingElement& a) {
  return is_regular_element(a, factor_xn_minus_one(a.n, a.p));
}

RegularityCheck is_regular_element(const RingElement& a, const CyclotomicFactorization& factorization) {
  if (factorization.p != a.p || factorization.n != a.n) {
    throw std::invalid_argument("factorization does not match the ring");
  }
  const std::uint32_t p = a.p;
  const FpPoly one = FpPoly::constant(p, 1);
  const FpPoly modulus = FpPoly::monomial(p, static_cast<int>(a.n)) - one;

  // Component inverses modulo each p_i^{m_i}; zero components invert to zero.
  std::vector<FpPoly> component_inverse;
  std::vector<FpPoly> component_modulus;
  for (const FactorPower& factor : factorization.factors) {
    FpPoly q = one;
    for (std::uint32_t i = 0; i < factor.multiplicity; ++i) q = q * factor.factor;
    const FpPoly residue = a.value % q;
    if (residue.is_zero()) {
      component_inverse.push_back(FpPoly(p));
    } else if (gcd(a.value, factor.factor).degree() == 0) {
      component_inverse.push_back(*inverse_mod(residue, q));
    } else {
      return RegularityCheck{false, std::nullopt};  // neither zero nor a unit: nilpotent part
    }
    component_modulus.push_back(std::move(q));
  }

  // CRT combination.
  FpPoly combined(p);
  for (std::size_t i = 0; i < component_inverse.size(); ++i) {
    if (component_inverse[i].is_zero()) continue;
    const FpPoly rest = modulus / component_modulus[i];
    const FpPoly rest_inv = *inverse_mod(rest, component_modulus[i]);
    combined = (combined + component_inverse[i] * rest_inv % component_modulus[i] * rest) % modulus;
  }

  RingElement b = ring_element(a.p, a.n, combined);
  const RingElement aba = ring_mul(ring_mul(a, b), a);
  const RingElement bab = ring_mul(ring_mul(b, a), b);
  if (aba != a || bab != b) {
    throw std::logic_error("constructed generalized inverse failed its identities");
  }
  return RegularityCheck{true, std::move(b)};
}

bool is_nilpotent(const RingElement& a) {
  return is_nilpotent(a, factor_xn_minus_one(a.n, a.p));
}

bool is_nilpotent(const RingElement& a, const CyclotomicFactorization& factorization) {
  if (factorization.p != a.p || factorization.n != a.n) {
    throw std::invalid_argument("factorization does not match the ring");
  }
  if (a.value.is_zero()) return false;
  for (const FactorPower& factor : factorization.factors) {
    if (!(a.value % factor.factor).is_zero()) return false;
  }
  return true;
}

BigInt count_regular_elements(std::uint32_t n, std::uint32_t p) {
  return count_regular_elements(factor_xn_minus_one(n, p));
}

BigInt count_regular_elements(const CyclotomicFactorization& factorization) {
  BigInt total = 1;
  for (const FactorPower& factor : factorization.factors) {
    BigInt qd = 1;  // p^d_i
    for (std::uint32_t i = 0; i < factor.degree; ++i) qd *= factorization.p;
    BigInt tail = 1;  // p^(d_i (m_i - 1))
    for (std::uint32_t i = 0; i < factor.degree * (factor.multiplicity - 1); ++i) {
      tail *= factorization.p;
    }
    total *= (qd - 1) * tail + 1;
  }
  return total;
}

std::uint64_t brute_force_regular_count(std::uint32_t n, std::uint32_t p,
                                        std::uint64_t max_elements) {
  if (n < 1) throw std::invalid_argument("group order must be at least 1");
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (count > max_elements / p) throw std::invalid_argument("ring exceeds the brute-force cap");
    count *= p;
  }

  const auto decode = [&](std::uint64_t index, std::vector<std::uint32_t>& coeffs) {
    for (std::uint32_t i = 0; i < n; ++i) {
      coeffs[i] = static_cast<std::uint32_t>(index % p);
      index /= p;
    }
  };

  // a is regular iff a^2 b = a for some b (commutativity folds aba).
  std::uint64_t regular = 0;
  std::vector<std::uint32_t> a(n), b(n), square(n), product(n);
  for (std::uint64_t ia = 0; ia < count; ++ia) {
    decode(ia, a);
    std::fill(square.begin(), square.end(), 0);
    for (std::uint32_t i = 0; i < n; ++i) {
      if (a[i] == 0) continue;
      for (std::uint32_t j = 0; j < n; ++j) {
        auto& slot = square[(i + j) % n];
        slot = static_cast<std::uint32_t>((slot + static_cast<std::uint64_t>(a[i]) * a[j]) % p);
      }
    }
    for (std::uint64_t ib = 0; ib < count; ++ib) {
      decode(ib, b);
      std::fill(product.begin(), product.end(), 0);
      for (std::uint32_t i = 0; i < n; ++i) {
        if (square[i] == 0) continue;
        for (std::uint32_t j = 0; j < n; ++j) {
          auto& slot = product[(i + j) % n];
          slot = static_cast<std::uint32_t>((slot + static_cast<std::uint64_t>(square[i]) * b[j]) % p);
        }
      }
      if (std::equal(product.begin(), product.end(), a.begin())) {
        ++regular;
        break;
      }
    }
  }
  return regular;
}

}  // namespace vnca::linear
