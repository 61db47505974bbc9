#include "vnca/fp_poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace vnca::linear {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace {

void require_prime(std::uint32_t p) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
}

void require_same_field(const FpPoly& a, const FpPoly& b) {
  if (a.prime() != b.prime()) throw std::invalid_argument("field characteristic mismatch");
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  // Fermat: a^(p-2) mod p
  std::uint64_t result = 1, base = a % p;
  std::uint32_t e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

std::vector<std::uint32_t> trimmed(std::vector<std::uint32_t> coeffs, std::uint32_t p) {
  for (auto& c : coeffs) c %= p;
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  return coeffs;
}

}  // namespace

FpPoly::FpPoly(std::uint32_t p) : p_(p) { require_prime(p); }

FpPoly::FpPoly(std::uint32_t p, std::vector<std::uint32_t> coeffs) : p_(p) {
  require_prime(p);
  coeffs_ = trimmed(std::move(coeffs), p);
}

FpPoly FpPoly::constant(std::uint32_t p, std::uint32_t value) {
  return FpPoly(p, std::vector<std::uint32_t>{value});
}

FpPoly FpPoly::monomial(std::uint32_t p, int degree, std::uint32_t coeff) {
  if (degree < 0) throw std::invalid_argument("monomial degree must be nonnegative");
  std::vector<std::uint32_t> coeffs(static_cast<std::size_t>(degree) + 1, 0);
  coeffs.back() = coeff;
  return FpPoly(p, std::move(coeffs));
}

FpPoly operator+(const FpPoly& a, const FpPoly& b) {
  require_same_field(a, b);
  const std::uint32_t p = a.prime();
  std::vector<std::uint32_t> out(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = (a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i))) % p;
  }
  return FpPoly(p, std::move(out));
}

FpPoly operator-(const FpPoly& a, const FpPoly& b) {
  require_same_field(a, b);
  const std::uint32_t p = a.prime();
  std::vector<std::uint32_t> out(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = (a.coeff(static_cast<int>(i)) + p - b.coeff(static_cast<int>(i))) % p;
  }
  return FpPoly(p, std::move(out));
}

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
  require_same_field(a, b);
  const std::uint32_t p = a.prime();
  if (a.is_zero() || b.is_zero()) return FpPoly(p);
  std::vector<std::uint32_t> out(a.coeffs().size() + b.coeffs().size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    const std::uint64_t ai = a.coeffs()[i];
    if (ai == 0) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
      out[i + j] = static_cast<std::uint32_t>((out[i + j] + ai * b.coeffs()[j]) % p);
    }
  }
  return FpPoly(p, std::move(out));
}

std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b) {
  require_same_field(a, b);
  if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
  const std::uint32_t p = a.prime();
  if (a.degree() < b.degree()) return {FpPoly(p), a};

  std::vector<std::uint32_t> rem(a.coeffs());
  std::vector<std::uint32_t> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1, 0);
  const std::uint32_t lead_inv = mod_inverse(b.leading(), p);
  for (int d = a.degree(); d >= b.degree(); --d) {
    const std::uint32_t top = rem[static_cast<std::size_t>(d)];
    if (top == 0) continue;
    const std::uint32_t factor = static_cast<std::uint32_t>(
        static_cast<std::uint64_t>(top) * lead_inv % p);
    quot[static_cast<std::size_t>(d - b.degree())] = factor;
    for (int i = 0; i <= b.degree(); ++i) {
      auto& r = rem[static_cast<std::size_t>(d - b.degree() + i)];
      r = static_cast<std::uint32_t>(
          (r + static_cast<std::uint64_t>(p - b.coeff(i)) * factor) % p);
    }
  }
  return {FpPoly(p, std::move(quot)), FpPoly(p, std::move(rem))};
}

FpPoly operator/(const FpPoly& a, const FpPoly& b) { return divmod(a, b).first; }
FpPoly operator%(const FpPoly& a, const FpPoly& b) { return divmod(a, b).second; }

FpPoly monic(const FpPoly& a) {
  if (a.is_zero() || a.leading() == 1) return a;
  const std::uint32_t p = a.prime();
  const std::uint32_t inv = mod_inverse(a.leading(), p);
  std::vector<std::uint32_t> out(a.coeffs());
  for (auto& c : out) c = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c) * inv % p);
  return FpPoly(p, std::move(out));
}

FpPoly gcd(const FpPoly& a, const FpPoly& b) {
  require_same_field(a, b);
  FpPoly x = a, y = b;
  while (!y.is_zero()) {
    FpPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x);
}

FpPoly pow_mod(const FpPoly& base, const BigInt& exponent, const FpPoly& modulus) {
  require_same_field(base, modulus);
  if (exponent < 0) throw std::invalid_argument("exponent must be nonnegative");
  FpPoly result = FpPoly::constant(base.prime(), 1) % modulus;
  FpPoly acc = base % modulus;
  BigInt e = exponent;
  while (e > 0) {
    if ((e & 1) != 0) result = result * acc % modulus;
    acc = acc * acc % modulus;
    e >>= 1;
  }
  return result;
}

std::optional<FpPoly> inverse_mod(const FpPoly& a, const FpPoly& modulus) {
  require_same_field(a, modulus);
  // Extended Euclid on (modulus, a).
  const std::uint32_t p = a.prime();
  FpPoly r0 = modulus, r1 = a % modulus;
  FpPoly t0 = FpPoly(p), t1 = FpPoly::constant(p, 1);
  while (!r1.is_zero()) {
    auto [q, r2] = divmod(r0, r1);
    FpPoly t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.degree() != 0) return std::nullopt;  // gcd not a unit
  const std::uint32_t inv = mod_inverse(r0.coeff(0), p);
  return (t0 * FpPoly::constant(p, inv)) % modulus;
}

bool is_irreducible(const FpPoly& f) {
  // Rabin's test: x^(p^d) = x mod f, and x^(p^(d/e)) - x is coprime to f for
  // every prime e dividing d.
  const int d = f.degree();
  if (d <= 0) return false;
  if (d == 1) return true;
  const std::uint32_t p = f.prime();
  const FpPoly x = FpPoly::monomial(p, 1);

  BigInt pd = 1;
  for (int i = 0; i < d; ++i) pd *= p;
  if (pow_mod(x, pd, f) != x % f) return false;

  int rest = d;
  for (int e = 2; e <= rest; ++e) {
    if (rest % e != 0) continue;
    while (rest % e == 0) rest /= e;
    BigInt pe = 1;
    for (int i = 0; i < d / e; ++i) pe *= p;
    const FpPoly g = gcd(pow_mod(x, pe, f) - x, f);
    if (g.degree() != 0) return false;
  }
  return true;
}

bool poly_less(const FpPoly& a, const FpPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
  }
  return false;
}

std::string to_string(const FpPoly& a) {
  if (a.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = a.degree(); i >= 0; --i) {
    const std::uint32_t c = a.coeff(i);
    if (c == 0) continue;
    if (!first) out << " + ";
    first = false;
    if (i == 0 || c != 1) out << c;
    if (i > 0) {
      if (c != 1) out << "*";
      out << "x";
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

namespace {

// Deterministic equal-degree splitting of a product of irreducibles of
// degree d: scan candidate polynomials in a fixed order until a gcd splits.
void split_equal_degree(const FpPoly& product, int d, std::vector<FpPoly>& out) {
  if (product.degree() == d) {
    out.push_back(monic(product));
    return;
  }
  const std::uint32_t p = product.prime();

  BigInt half = 1;  // (p^d - 1) / 2 for odd p
  if (p != 2) {
    for (int i = 0; i < d; ++i) half *= p;
    half = (half - 1) / 2;
  }

  // Candidate index enumerates coefficient vectors of degree < deg(product).
  for (std::uint64_t candidate = 1;; ++candidate) {
    std::vector<std::uint32_t> coeffs;
    std::uint64_t v = candidate;
    while (v > 0) {
      coeffs.push_back(static_cast<std::uint32_t>(v % p));
      v /= p;
    }
    if (static_cast<int>(coeffs.size()) > product.degree()) {
      throw std::logic_error("equal-degree splitting exhausted its candidates");
    }
    const FpPoly a(p, std::move(coeffs));

    FpPoly g(p);
    if (p == 2) {
      // Trace map a + a^2 + ... + a^(2^(d-1)) mod product.
      FpPoly trace = a % product;
      FpPoly term = trace;
      for (int i = 1; i < d; ++i) {
        term = term * term % product;
        trace = trace + term;
      }
      g = gcd(trace, product);
    } else {
      g = gcd(pow_mod(a, half, product) - FpPoly::constant(p, 1), product);
    }
    if (g.degree() > 0 && g.degree() < product.degree()) {
      split_equal_degree(g, d, out);
      split_equal_degree(product / g, d, out);
      return;
    }
  }
}

}  // namespace

CyclotomicFactorization factor_xn_minus_one(std::uint32_t n, std::uint32_t p) {
  if (n < 1) throw std::invalid_argument("exponent must be at least 1");
  require_prime(p);

  std::uint32_t m = n, multiplicity = 1;
  while (m % p == 0) {
    m /= p;
    multiplicity *= p;
  }

  // x^m - 1 is squarefree (p does not divide m); distinct-degree separation.
  const FpPoly one = FpPoly::constant(p, 1);
  const FpPoly x = FpPoly::monomial(p, 1);
  const FpPoly f = FpPoly::monomial(p, static_cast<int>(m)) - one;

  std::vector<FpPoly> irreducibles;
  FpPoly remaining = f;
  FpPoly frob = x % f;  // x^(p^d) mod f as d advances
  for (int d = 1; remaining.degree() > 0; ++d) {
    if (2 * d > remaining.degree()) {
      irreducibles.push_back(monic(remaining));
      break;
    }
    frob = pow_mod(frob, BigInt(p), f);
    const FpPoly g = gcd(remaining, frob - x);
    if (g.degree() > 0) {
      split_equal_degree(g, d, irreducibles);
      remaining = remaining / g;
    }
  }
  std::sort(irreducibles.begin(), irreducibles.end(), poly_less);

  CyclotomicFactorization out;
  out.p = p;
  out.n = n;
  for (FpPoly& factor : irreducibles) {
    const auto degree = static_cast<std::uint32_t>(factor.degree());
    out.factors.push_back(FactorPower{std::move(factor), multiplicity, degree});
  }

  // The expanded product must reproduce x^n - 1 exactly.
  FpPoly product = one;
  for (const FactorPower& fp : out.factors) {
    for (std::uint32_t i = 0; i < fp.multiplicity; ++i) product = product * fp.factor;
  }
  if (product != FpPoly::monomial(p, static_cast<int>(n)) - one) {
    throw std::logic_error("factorization does not multiply back to x^n - 1");
  }
  return out;
}

}  // namespace vnca::linear
